//! End-to-end tests of the binary: output shapes, exit codes, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtamari"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_with_brute_force_cross_check() {
    assert_eq!(stdout(&["count", "--m", "2", "--n", "3", "--brute"]), "58 (formula) = 58 (brute force)\n");
}

#[test]
fn count_by_contacts_rows() {
    let out = stdout(&["count", "--m", "1", "--n", "2", "--by-contacts"]);
    assert_eq!(out, "3\ni=2: 1\ni=3: 2\n");
}

#[test]
fn count_large_n_prints_full_integer() {
    let out = stdout(&["count", "--m", "1", "--n", "100"]);
    let digits = out.trim();
    assert!(digits.len() > 50);
    assert!(digits.chars().all(|c| c.is_ascii_digit()));
    assert!(!digits.starts_with('0'));
}

#[test]
fn formula_with_contact_index_and_table() {
    assert_eq!(stdout(&["formula", "--m", "1", "--n", "2", "--i", "3"]), "2\n");
    let table = stdout(&["formula", "--m", "2", "--n", "3", "--table"]);
    let v: serde_json::Value = serde_json::from_str(&table).unwrap();
    assert_eq!(v["schema"], "mtamari.formula.v1");
    let row = v["by_contacts"].as_array().unwrap();
    assert_eq!(row.len(), 3); // i = 2, 3, 4
    let total: u64 = row
        .iter()
        .map(|e| e[1].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 58);
}

#[test]
fn series_text_and_json() {
    assert_eq!(stdout(&["series", "--m", "1", "--order", "4"]), "1, 1, 3, 13, 68\n");
    let js = stdout(&["series", "--m", "1", "--order", "2", "--with-y", "--with-q", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    assert_eq!(v["schema"], "mtamari.series.v1");
    let coeffs = v["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 3);
    // [t^0] = x
    assert_eq!(coeffs[0]["terms"], serde_json::json!([[1, 0, 0, "1"]]));
    // [t^2] = x^3 y + x^2 y^2 + x^3 y^2 q
    assert_eq!(
        coeffs[2]["terms"],
        serde_json::json!([[2, 2, 0, "1"], [3, 1, 0, "1"], [3, 2, 1, "1"]])
    );
}

#[test]
fn hasse_dot_and_json() {
    let dot = stdout(&["hasse", "--m", "2", "--n", "3", "--format", "dot"]);
    assert!(dot.starts_with("digraph \"tamari_m2_n3\" {"));
    let nodes = dot.lines().filter(|l| l.ends_with("\";") && !l.contains("->")).count();
    assert_eq!(nodes, 12);

    let js = stdout(&["hasse", "--m", "1", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    assert_eq!(v["schema"], "mtamari.hasse.v1");
    assert_eq!(v["nodes"], serde_json::json!(["uudd", "udud"]));
    assert_eq!(v["edges"], serde_json::json!([[1, 0]]));
}

#[test]
fn intervals_json_statistics() {
    let js = stdout(&["intervals", "--m", "1", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    assert_eq!(v["schema"], "mtamari.intervals.v1");
    assert_eq!(v["intervals"], 3);
    assert_eq!(v["by_contacts"], serde_json::json!([[2, 1], [3, 2]]));
    assert_eq!(v["joint"], serde_json::json!([[1, 2, 0, 1], [2, 1, 0, 1], [2, 2, 1, 1]]));
}

#[test]
fn verify_suites_pass() {
    let out = stdout(&["verify", "--suite", "symmetry", "--m-max", "2", "--order", "6"]);
    assert!(out.contains("PASS"));
    assert!(out.ends_with("2 checks, 0 failed\n"));
    let js = stdout(&["verify", "--suite", "counts", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    assert_eq!(v["failed"], 0);
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["hasse", "--m", "2", "--n", "3", "--format", "dot"],
        vec!["series", "--m", "2", "--order", "3", "--with-y", "--format", "json"],
        vec!["intervals", "--m", "1", "--n", "3", "--format", "json"],
    ] {
        assert_eq!(stdout(&args), stdout(&args));
    }
}

#[test]
fn exit_codes() {
    // resource limit -> 2
    let out = run(&["hasse", "--m", "1", "--n", "5", "--node-cap", "10"]);
    assert_eq!(out.status.code(), Some(2));
    // usage errors -> 64
    let out = run(&["formula", "--m", "1", "--n", "2", "--i", "9"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&["count", "--m", "0", "--n", "1"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(64));
    // help and version -> 0, and the version banner stays off data channels
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
    let data = stdout(&["count", "--m", "1", "--n", "1"]);
    assert_eq!(data, "1\n");
}
