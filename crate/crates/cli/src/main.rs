//! Command-line front end: reproduce the data tables, emit distributions
//! and characteristic polynomials, apply the bijections, and run the full
//! verification suite with a CI-friendly exit code.
//!
//! Exit codes: 0 success, 1 invariant failure, 2 usage error, 3 domain
//! violation in the input.

mod output;
mod tables;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use threshold_atlas::arrangements::{
    charpoly_finite_field, charpoly_threshold_formula, Arrangement,
};
use threshold_atlas::exactmath::{falling_odd_product, Polynomial};
use threshold_atlas::partitions::{normal_to_special_pair, special_pair_to_normal, SpecialPair};
use threshold_atlas::threshold_bijections::{
    pair_to_threshold_perm, standardize, threshold_perm_odd_cycle_distribution,
    threshold_perm_to_pair, ThresholdPair, ThresholdPermutation,
};
use threshold_atlas::threshold_graphs::{
    canonical_pair, graph_from_construction, odd_anchor_distribution, LabeledThresholdGraph,
};
use threshold_atlas::verify::run_verification;
use threshold_atlas::{Error, SignedPermutation};

use output::{
    print_distribution, print_graph_table, print_pair_table, print_polynomial,
    print_polynomial_table, print_verification,
};

#[derive(Parser)]
#[command(
    name = "threshold-atlas",
    version,
    about = "Exact combinatorics of the threshold arrangement",
    max_term_width = 100
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Worker threads for enumeration-backed commands
    #[arg(long, global = true, env = "THRESHOLD_ATLAS_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Threshold,
    Typeb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Finitefield,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Statistic {
    #[value(name = "odd-cycles")]
    OddCycles,
    #[value(name = "odd-anchors")]
    OddAnchors,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableId {
    #[value(name = "1")]
    Polynomials,
    #[value(name = "2")]
    PairsTwo,
    #[value(name = "3")]
    PairsThree,
    #[value(name = "2g")]
    GraphsTwo,
    #[value(name = "3g")]
    GraphsThree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BijectionKind {
    /// threshold pair <-> threshold permutation
    #[value(name = "pair-perm")]
    PairPerm,
    /// threshold permutation <-> labeled threshold graph
    #[value(name = "perm-graph")]
    PermGraph,
    /// labeled threshold graph <-> threshold pair
    #[value(name = "graph-pair")]
    GraphPair,
    /// special pair (b, pi) <-> normal non-threshold permutation
    #[value(name = "lemma-bp")]
    LemmaBp,
    /// arbitrary signed permutation -> threshold pair (not invertible)
    #[value(name = "standardize")]
    Standardize,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial of the threshold or type-B arrangement
    Charpoly {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Compute by both methods and require equality
        #[arg(long)]
        cross_check: bool,
    },
    /// Distribution of a statistic whose counts are the polynomial's
    /// unsigned coefficients
    Distribution {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        statistic: Statistic,
    },
    /// Reproduce one of the data tables (1, 2, 3, 2g, 3g)
    Table {
        #[arg(long, value_enum)]
        which: TableId,
    },
    /// Run every cross-module invariant up to its bound capped at max-n
    Verify {
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Apply one of the named maps to a serialized object
    Bijection {
        #[arg(long, value_enum)]
        kind: BijectionKind,
        /// Apply the inverse map instead
        #[arg(long)]
        inverse: bool,
        /// Special number for the lemma-bp forward map
        #[arg(long)]
        b: Option<u32>,
        /// JSON input: a signed permutation array or a graph object
        input: String,
    },
}

/// A fatal command error with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

/// Library errors surfacing through a command are domain violations.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        // ignore the error if a pool was already installed
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(cli.command, cli.format) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command, fmt: OutputFormat) -> Result<u8, Failure> {
    match command {
        Command::Charpoly { family, n, method, cross_check } => {
            cmd_charpoly(family, n, method, cross_check, fmt)
        }
        Command::Distribution { n, statistic } => cmd_distribution(n, statistic, fmt),
        Command::Table { which } => cmd_table(which, fmt),
        Command::Verify { max_n } => cmd_verify(max_n, fmt),
        Command::Bijection { kind, inverse, b, input } => {
            cmd_bijection(kind, inverse, b, &input)
        }
    }
}

fn charpoly_by_formula(family: Family, n: usize) -> Result<Polynomial, Failure> {
    match family {
        Family::Threshold => Ok(charpoly_threshold_formula(n)?),
        Family::Typeb => Ok(falling_odd_product(n)),
    }
}

fn charpoly_by_finite_field(family: Family, n: usize) -> Result<Polynomial, Failure> {
    let arrangement = match family {
        Family::Threshold => Arrangement::threshold(n),
        Family::Typeb => Arrangement::type_b(n),
    };
    Ok(charpoly_finite_field(&arrangement)?)
}

fn cmd_charpoly(
    family: Family,
    n: usize,
    method: Method,
    cross_check: bool,
    fmt: OutputFormat,
) -> Result<u8, Failure> {
    if n < 1 {
        return Err(Failure::usage("charpoly requires n >= 1"));
    }
    let ff_bound = match family {
        Family::Threshold => 6,
        Family::Typeb => 4,
    };
    if (method == Method::Finitefield || cross_check) && n > ff_bound {
        let name = match family {
            Family::Threshold => "threshold",
            Family::Typeb => "typeb",
        };
        return Err(Failure::usage(format!(
            "the finitefield method for the {name} family is limited to n <= {ff_bound}"
        )));
    }
    let poly = match method {
        Method::Formula => charpoly_by_formula(family, n)?,
        Method::Finitefield => charpoly_by_finite_field(family, n)?,
    };
    if cross_check {
        let other = match method {
            Method::Formula => charpoly_by_finite_field(family, n)?,
            Method::Finitefield => charpoly_by_formula(family, n)?,
        };
        if other != poly {
            return Err(Failure::mismatch(format!(
                "cross-check failed: methods disagree ({poly} vs {other})"
            )));
        }
    }
    print_polynomial(&poly, fmt);
    Ok(0)
}

fn cmd_distribution(n: usize, statistic: Statistic, fmt: OutputFormat) -> Result<u8, Failure> {
    if !(2..=9).contains(&n) {
        return Err(Failure::usage(
            "distribution is enumeration-backed and requires 2 <= n <= 9",
        ));
    }
    let table = match statistic {
        Statistic::OddCycles => threshold_perm_odd_cycle_distribution(n)?,
        Statistic::OddAnchors => odd_anchor_distribution(n)?,
    };
    print_distribution(&table, fmt);
    Ok(0)
}

fn cmd_table(which: TableId, fmt: OutputFormat) -> Result<u8, Failure> {
    match which {
        TableId::Polynomials => print_polynomial_table(&tables::polynomial_table()?, fmt),
        TableId::PairsTwo => print_pair_table(&tables::pair_table(2)?, fmt),
        TableId::PairsThree => print_pair_table(&tables::pair_table(3)?, fmt),
        TableId::GraphsTwo => print_graph_table(&tables::graph_table(2)?, fmt),
        TableId::GraphsThree => print_graph_table(&tables::graph_table(3)?, fmt),
    }
    Ok(0)
}

fn cmd_verify(max_n: usize, fmt: OutputFormat) -> Result<u8, Failure> {
    if !(2..=8).contains(&max_n) {
        return Err(Failure::usage("verify requires 2 <= max-n <= 8"));
    }
    let results = run_verification(max_n)?;
    let all_passed = print_verification(&results, fmt);
    Ok(u8::from(!all_passed))
}

fn parse_perm(input: &str) -> Result<SignedPermutation, Failure> {
    let entries: Vec<i32> = serde_json::from_str(input)
        .map_err(|e| Failure::usage(format!("expected a JSON array of signed integers: {e}")))?;
    SignedPermutation::new(entries).map_err(Failure::from)
}

fn parse_graph(input: &str) -> Result<LabeledThresholdGraph, Failure> {
    serde_json::from_str(input)
        .map_err(|e| Failure::usage(format!("expected a graph object {{\"n\":..,\"edges\":[..]}}: {e}")))
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("schema serializes"));
}

fn cmd_bijection(
    kind: BijectionKind,
    inverse: bool,
    b: Option<u32>,
    input: &str,
) -> Result<u8, Failure> {
    match (kind, inverse) {
        (BijectionKind::PairPerm, false) => {
            let pair = ThresholdPair::new(parse_perm(input)?)?;
            print_json(pair_to_threshold_perm(&pair).as_perm());
        }
        (BijectionKind::PairPerm, true) => {
            let perm = ThresholdPermutation::new(parse_perm(input)?)?;
            print_json(threshold_perm_to_pair(&perm).as_perm());
        }
        (BijectionKind::PermGraph, false) => {
            let perm = ThresholdPermutation::new(parse_perm(input)?)?;
            print_json(&graph_from_construction(
                threshold_perm_to_pair(&perm).as_perm(),
            ));
        }
        (BijectionKind::PermGraph, true) => {
            let graph = parse_graph(input)?;
            print_json(pair_to_threshold_perm(&canonical_pair(&graph)?).as_perm());
        }
        (BijectionKind::GraphPair, false) => {
            let graph = parse_graph(input)?;
            print_json(canonical_pair(&graph)?.as_perm());
        }
        (BijectionKind::GraphPair, true) => {
            let pair = ThresholdPair::new(parse_perm(input)?)?;
            print_json(&graph_from_construction(pair.as_perm()));
        }
        (BijectionKind::LemmaBp, false) => {
            let b = b.ok_or_else(|| {
                Failure::usage("the lemma-bp forward map needs --b <special number>")
            })?;
            let pair = SpecialPair::from_ambient(b, parse_perm_entries(input)?.as_slice())?;
            print_json(&special_pair_to_normal(&pair));
        }
        (BijectionKind::LemmaBp, true) => {
            let pair = normal_to_special_pair(&parse_perm(input)?)?;
            println!(
                "{}",
                serde_json::json!({ "b": pair.b(), "pi": pair.ambient_entries() })
            );
        }
        (BijectionKind::Standardize, false) => {
            print_json(standardize(&parse_perm(input)?)?.as_perm());
        }
        (BijectionKind::Standardize, true) => {
            return Err(Failure::usage("standardize is many-to-one and has no inverse"));
        }
    }
    Ok(0)
}

/// The lemma-bp companion permutation lives on `[n] \ {b}`, so it is parsed
/// as raw entries rather than as a `SignedPermutation` of `[n-1]`.
fn parse_perm_entries(input: &str) -> Result<Vec<i32>, Failure> {
    serde_json::from_str(input)
        .map_err(|e| Failure::usage(format!("expected a JSON array of signed integers: {e}")))
}
