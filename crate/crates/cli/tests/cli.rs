//! End-to-end checks of the command-line surface: golden outputs,
//! byte-determinism, and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn omega_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_omega"))
}

fn run(args: &[&str]) -> Output {
    omega_bin().args(args).output().expect("process runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn catalog_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("omega-cli-test-{}", std::process::id()));
    let out = run(&["catalog", "--emit", dir.to_str().unwrap()]);
    assert!(out.status.success());
    dir
}

#[test]
fn compute_prints_the_canonical_polynomial() {
    let dir = catalog_dir();
    let e1 = dir.join("e1.json");
    let out = run(&["compute", e1.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(w+x+z)*t + y*t^2\n");

    let via_statesum = run(&["compute", e1.to_str().unwrap(), "--method", "statesum"]);
    assert_eq!(stdout(&via_statesum), "(w+x+z)*t + y*t^2\n");
}

#[test]
fn outputs_are_byte_deterministic() {
    let dir = catalog_dir();
    let theta = dir.join("theta.json");
    for args in [
        vec!["compute", theta.to_str().unwrap()],
        vec!["omega-k", theta.to_str().unwrap()],
        vec!["medial", theta.to_str().unwrap()],
        vec!["random", "--vertices", "3", "--edges", "4", "--seed", "9"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn json_term_records_are_valid_json() {
    let dir = catalog_dir();
    let e1 = dir.join("e1.json");
    let out = run(&["compute", e1.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let terms: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let list = terms.as_array().unwrap();
    assert_eq!(list.len(), 4);
    assert!(list.iter().all(|t| t["coeff"] == "1"));
}

#[test]
fn eval_fully_assigned_prints_an_integer() {
    let dir = catalog_dir();
    let e1 = dir.join("e1.json");
    let out = run(&["eval", e1.to_str().unwrap(), "--at", "w=-2,x=1,y=1,z=1,t=2"]);
    assert!(out.status.success());
    // 4 two-valuations of the single-edge medial graph
    assert_eq!(stdout(&out), "4\n");
}

#[test]
fn malformed_input_exits_with_code_two() {
    let dir = catalog_dir();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = run(&["compute", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = run(&["compute", dir.join("nope.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn statesum_guard_exits_with_code_two() {
    let dir = catalog_dir();
    let theta = dir.join("theta.json");
    let out = run(&[
        "compute",
        theta.to_str().unwrap(),
        "--method",
        "statesum",
        "--max-edges",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_engines_suite_passes_on_catalog() {
    let out = run(&["verify", "--catalog", "--suite", "engines"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().last().unwrap().ends_with("0 failures"));
}

#[test]
fn random_documents_are_loadable() {
    let dir = catalog_dir();
    let doc = run(&["random", "--vertices", "2", "--edges", "3", "--seed", "5"]);
    assert!(doc.status.success());
    let path = dir.join("random5.json");
    std::fs::write(&path, stdout(&doc)).unwrap();
    let computed = run(&["compute", path.to_str().unwrap()]);
    assert!(computed.status.success());

    let too_many = run(&["random", "--vertices", "2", "--edges", "99", "--seed", "5"]);
    assert_eq!(too_many.status.code(), Some(2));
}

#[test]
fn medial_output_names_edges() {
    let dir = catalog_dir();
    let out = run(&["medial", dir.join("i3.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("free_loops"));
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["free_loops"].as_array().unwrap().len(), 3);
    assert_eq!(parsed["vertices"].as_array().unwrap().len(), 0);
}
