//! Rendering for the three output formats. Text and CSV are hand-rolled
//! line formats; JSON goes through the library's serde schemas. Everything
//! is UTF-8 with LF line endings and deterministic field order.

use std::str::FromStr;

use serde_json::json;

use threshold_atlas::exactmath::Polynomial;
use threshold_atlas::verify::CheckResult;
use threshold_atlas::DistributionTable;

use crate::tables::{GraphRow, PairRow, PolyRow};
use crate::OutputFormat;

/// Signed entries in over-sign notation: `+1 -2`.
pub fn signed_text(entries: &[i32]) -> String {
    entries
        .iter()
        .map(|e| format!("{}{}", if *e < 0 { "-" } else { "+" }, e.abs()))
        .collect::<Vec<_>>()
        .join(" ")
}

fn edges_text(edges: &[(u32, u32)]) -> String {
    if edges.is_empty() {
        return "-".into();
    }
    edges
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn number(value: &num_bigint::BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&value.to_string()).expect("integers are valid JSON numbers")
}

pub fn print_polynomial(p: &Polynomial, fmt: OutputFormat) {
    match fmt {
        OutputFormat::Text => println!("{p}"),
        OutputFormat::Csv => {
            println!("power,coefficient");
            for (i, c) in p.coeffs().iter().enumerate() {
                println!("{i},{c}");
            }
        }
        OutputFormat::Json => {
            println!("{}", serde_json::to_string(p).expect("schema serializes"));
        }
    }
}

pub fn print_distribution(d: &DistributionTable, fmt: OutputFormat) {
    match fmt {
        OutputFormat::Text => print!("{d}"),
        OutputFormat::Csv => {
            println!("j,count");
            for (j, c) in d.entries() {
                println!("{j},{c}");
            }
        }
        OutputFormat::Json => {
            println!("{}", serde_json::to_string(d).expect("schema serializes"));
        }
    }
}

pub fn print_polynomial_table(rows: &[PolyRow], fmt: OutputFormat) {
    match fmt {
        OutputFormat::Text => {
            println!("n | charpoly | regions");
            for r in rows {
                println!("{} | {} | {}", r.n, r.chi, r.regions);
            }
        }
        OutputFormat::Csv => {
            println!("n,charpoly,regions");
            for r in rows {
                println!("{},{},{}", r.n, r.chi, r.regions);
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "charpoly": r.chi.to_string(),
                        "coeffs_low_to_high": r.chi.coeffs().iter().map(number).collect::<Vec<_>>(),
                        "regions": number(&r.regions),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
}

pub fn print_pair_table(rows: &[PairRow], fmt: OutputFormat) {
    match fmt {
        OutputFormat::Text => {
            println!("pair | threshold permutation | odd cycles");
            for r in rows {
                println!(
                    "{} | {} | {}",
                    signed_text(&r.pair),
                    signed_text(&r.perm),
                    r.odd_cycles
                );
            }
        }
        OutputFormat::Csv => {
            println!("pair,threshold_perm,odd_cycles");
            for r in rows {
                println!(
                    "{},{},{}",
                    signed_text(&r.pair),
                    signed_text(&r.perm),
                    r.odd_cycles
                );
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "pair": r.pair,
                        "threshold_perm": r.perm,
                        "odd_cycles": r.odd_cycles,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
}

pub fn print_graph_table(rows: &[GraphRow], fmt: OutputFormat) {
    match fmt {
        OutputFormat::Text => {
            println!("construction | edges | odd anchors");
            for r in rows {
                println!(
                    "{} | {} | {}",
                    signed_text(&r.construction),
                    edges_text(&r.edges),
                    r.odd_anchors
                );
            }
        }
        OutputFormat::Csv => {
            println!("construction,edges,odd_anchors");
            for r in rows {
                println!(
                    "{},{},{}",
                    signed_text(&r.construction),
                    edges_text(&r.edges),
                    r.odd_anchors
                );
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "construction": r.construction,
                        "edges": r.edges,
                        "odd_anchors": r.odd_anchors,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
}

/// Prints the verification report; returns whether every check passed. A
/// `false` return is what drives the command's exit code 1, so a failing
/// check surfaces its serialized counterexample and fails CI.
pub fn print_verification(results: &[CheckResult], fmt: OutputFormat) -> bool {
    let passed = results.iter().filter(|r| r.outcome.is_ok()).count();
    match fmt {
        OutputFormat::Text => {
            for r in results {
                match &r.outcome {
                    Ok(()) => println!("PASS {} (n <= {})", r.name, r.bound),
                    Err(detail) => println!("FAIL {} (n <= {}): {detail}", r.name, r.bound),
                }
            }
            println!("{passed}/{} checks passed", results.len());
        }
        OutputFormat::Csv => {
            println!("check,bound,status,detail");
            for r in results {
                match &r.outcome {
                    Ok(()) => println!("{},{},pass,", r.name, r.bound),
                    Err(detail) => {
                        println!("{},{},fail,{}", r.name, r.bound, detail.replace(',', ";"))
                    }
                }
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = results
                .iter()
                .map(|r| {
                    json!({
                        "check": r.name,
                        "bound": r.bound,
                        "status": if r.outcome.is_ok() { "pass" } else { "fail" },
                        "detail": r.outcome.as_ref().err(),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
    passed == results.len()
}
