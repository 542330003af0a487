//! End-to-end tests of the command-line interface: flag contracts, output
//! formats, and the exit-code convention (0 pass, 1 invariant failure,
//! 2 usage, 3 domain violation).

use std::process::{Command, Output};

fn atlas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_threshold-atlas"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = atlas(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    atlas(args).status.code().expect("exit code")
}

#[test]
fn charpoly_text_rows() {
    assert_eq!(
        stdout(&["charpoly", "--family", "threshold", "--n", "7"]),
        "t^7-21t^6+210t^5-1225t^4+4340t^3-9058t^2+9961t-4208\n"
    );
    assert_eq!(
        stdout(&["charpoly", "--family", "threshold", "--n", "2", "--method", "finitefield"]),
        "t^2-t\n"
    );
    assert_eq!(
        stdout(&["charpoly", "--family", "typeb", "--n", "3"]),
        "t^3-9t^2+23t-15\n"
    );
}

#[test]
fn charpoly_cross_check_and_bounds() {
    assert_eq!(
        stdout(&["charpoly", "--family", "threshold", "--n", "3", "--cross-check"]),
        "t^3-3t^2+3t-1\n"
    );
    assert_eq!(
        exit_code(&["charpoly", "--family", "threshold", "--n", "7", "--method", "finitefield"]),
        2
    );
    assert_eq!(
        exit_code(&["charpoly", "--family", "typeb", "--n", "5", "--method", "finitefield"]),
        2
    );
    assert_eq!(exit_code(&["charpoly", "--family", "threshold", "--n", "0"]), 2);
}

#[test]
fn charpoly_structured_formats() {
    let json = stdout(&["--format", "json", "charpoly", "--family", "threshold", "--n", "4"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["n"], 4);
    assert_eq!(value["coeffs_low_to_high"], serde_json::json!([7, -17, 15, -6, 1]));

    let csv = stdout(&["--format", "csv", "charpoly", "--family", "threshold", "--n", "2"]);
    assert_eq!(csv, "power,coefficient\n0,0\n1,-1\n2,1\n");
}

#[test]
fn distribution_outputs() {
    assert_eq!(
        stdout(&["distribution", "--n", "3", "--statistic", "odd-anchors"]),
        "0 1\n1 3\n2 3\n3 1\n"
    );
    assert_eq!(
        stdout(&["distribution", "--n", "2", "--statistic", "odd-cycles"]),
        "1 1\n2 1\n"
    );
    // the two statistics print identical tables
    for n in ["4", "5", "6"] {
        assert_eq!(
            stdout(&["distribution", "--n", n, "--statistic", "odd-cycles"]),
            stdout(&["distribution", "--n", n, "--statistic", "odd-anchors"]),
        );
    }
    assert_eq!(exit_code(&["distribution", "--n", "1", "--statistic", "odd-cycles"]), 2);
    assert_eq!(exit_code(&["distribution", "--n", "10", "--statistic", "odd-cycles"]), 2);

    let json = stdout(&["--format", "json", "distribution", "--n", "4", "--statistic", "odd-anchors"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["statistic"], "odd-anchors");
    assert_eq!(value["counts"]["0"], serde_json::json!(7));
    assert_eq!(value["counts"]["1"], serde_json::json!(17));
}

#[test]
fn table_one_contents() {
    let text = stdout(&["table", "--which", "1"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10); // header + 9 rows
    assert_eq!(lines[0], "n | charpoly | regions");
    assert_eq!(lines[1], "2 | t^2-t | 2");
    assert!(lines[9].starts_with("10 | t^10-45t^9+990t^8"));
    assert!(lines[9].ends_with("| 62749906"));
}

#[test]
fn table_two_contents() {
    assert_eq!(
        stdout(&["table", "--which", "2"]),
        "pair | threshold permutation | odd cycles\n\
         -1 -2 | -1 -2 | 2\n\
         +1 +2 | -1 +2 | 1\n"
    );
    let graphs = stdout(&["table", "--which", "2g"]);
    assert_eq!(
        graphs,
        "construction | edges | odd anchors\n\
         +1 -2 | - | 2\n\
         +1 +2 | 1-2 | 1\n"
    );
}

#[test]
fn table_three_g_odd_anchor_column() {
    let text = stdout(&["table", "--which", "3g"]);
    let counts: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(" | ").next().unwrap())
        .collect();
    assert_eq!(counts, ["3", "2", "2", "2", "1", "1", "1", "0"]);
}

#[test]
fn unknown_table_is_a_usage_error() {
    assert_eq!(exit_code(&["table", "--which", "4"]), 2);
}

#[test]
fn verify_small_bounds() {
    let out = atlas(&["verify", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&["verify", "--max-n", "4"]);
    let passes = text.lines().filter(|l| l.starts_with("PASS ")).count();
    assert!(passes >= 12, "only {passes} checks reported");
    assert!(text.lines().last().unwrap().ends_with("checks passed"));
    assert_eq!(exit_code(&["verify", "--max-n", "1"]), 2);
    assert_eq!(exit_code(&["verify", "--max-n", "9"]), 2);
}

#[test]
fn bijection_examples() {
    assert_eq!(
        stdout(&["bijection", "--kind", "pair-perm", "[-2,-3,-5,1,4,-6]"]),
        "[-2,-3,5,-1,4,-6]\n"
    );
    assert_eq!(
        stdout(&["bijection", "--kind", "pair-perm", "--inverse", "[-2,-3,5,-1,4,-6]"]),
        "[-2,-3,-5,1,4,-6]\n"
    );
    assert_eq!(
        stdout(&["bijection", "--kind", "lemma-bp", "--b", "3", "[1,-5,7,-2,4,-6]"]),
        "[-3,-1,-5,7,-2,4,-6]\n"
    );
    assert_eq!(
        stdout(&["bijection", "--kind", "lemma-bp", "--inverse", "[-3,-1,-5,7,-2,4,-6]"]),
        "{\"b\":3,\"pi\":[1,-5,7,-2,4,-6]}\n"
    );
    assert_eq!(
        stdout(&["bijection", "--kind", "graph-pair", r#"{"n":3,"edges":[]}"#]),
        "[-1,-2,-3]\n"
    );
    assert_eq!(
        stdout(&["bijection", "--kind", "standardize", "[2,-3,-5,1,4,-6]"]),
        "[-2,-3,-5,1,4,-6]\n"
    );
    assert_eq!(
        stdout(&["bijection", "--kind", "perm-graph", "[-1,2]"]),
        "{\"n\":2,\"edges\":[[1,2]]}\n"
    );
    assert_eq!(
        stdout(&["bijection", "--kind", "perm-graph", "--inverse", r#"{"n":2,"edges":[[1,2]]}"#]),
        "[-1,2]\n"
    );
}

#[test]
fn bijection_error_codes() {
    // parse failures are usage errors
    assert_eq!(exit_code(&["bijection", "--kind", "pair-perm", "not json"]), 2);
    assert_eq!(exit_code(&["bijection", "--kind", "graph-pair", "{"]), 2);
    // domain violations name the violated clause and exit 3
    let out = atlas(&["bijection", "--kind", "pair-perm", "[2,-3,-5,4,1,-6]"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("same sign"));
    let out = atlas(&["bijection", "--kind", "graph-pair", r#"{"n":4,"edges":[[1,2],[2,3],[3,4]]}"#]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a threshold graph"));
    // a valid permutation that is not normal cannot enter lemma-bp inverse
    assert_eq!(exit_code(&["bijection", "--kind", "lemma-bp", "--inverse", "[2,1]"]), 3);
    // forward lemma-bp without --b is a usage error
    assert_eq!(exit_code(&["bijection", "--kind", "lemma-bp", "[1,-5,7,-2,4,-6]"]), 2);
    assert_eq!(exit_code(&["bijection", "--kind", "standardize", "--inverse", "[1,2]"]), 2);
}

#[test]
fn jobs_flag_and_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_threshold-atlas"))
        .args(["--jobs", "1", "distribution", "--n", "5", "--statistic", "odd-anchors"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let via_env = Command::new(env!("CARGO_BIN_EXE_threshold-atlas"))
        .env("THRESHOLD_ATLAS_JOBS", "2")
        .args(["distribution", "--n", "5", "--statistic", "odd-anchors"])
        .output()
        .unwrap();
    assert!(via_env.status.success());
    // worker count never changes the output
    assert_eq!(out.stdout, via_env.stdout);
    assert_eq!(exit_code(&["--jobs", "0", "verify", "--max-n", "2"]), 2);
}

#[test]
fn outputs_use_lf_only() {
    for args in [
        vec!["table", "--which", "1"],
        vec!["--format", "csv", "table", "--which", "3"],
        vec!["--format", "json", "table", "--which", "3g"],
    ] {
        let text = stdout(&args.iter().map(|s| &**s).collect::<Vec<_>>());
        assert!(!text.contains('\r'), "{args:?} emitted CR");
    }
}
