use std::io::Write;
use std::process::{Command, Output, Stdio};

use cyclify::corpus::{self, ENTRIES};
use cyclify::run::{run, EXIT_FAILED, EXIT_UNSUPPORTED, EXIT_VERIFIED};
use serde_json::Value;

fn cyclify(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cyclify"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn corpus_entries_exit_as_expected() {
    for e in ENTRIES {
        let outcome = run(e.command, &corpus::job(e));
        assert_eq!(outcome.code, e.expected, "{}: {}", e.name, outcome.report);
        assert_eq!(outcome.report["exit_code"], e.expected as i64);
    }
}

#[test]
fn selftest_binary_passes() {
    let out = cyclify(&["selftest"], "");
    assert_eq!(out.status.code(), Some(EXIT_VERIFIED));
}

#[test]
fn residues_from_stdin() {
    let out = cyclify(&["residues"], r#"{"n": 2, "symbols": [{"a": "x*y", "b": "x^2+1"}]}"#);
    assert_eq!(out.status.code(), Some(EXIT_VERIFIED));
    let v = json(&out);
    assert_eq!(v["command"], "residues");
    assert_eq!(v["n"], 2);
}

#[test]
fn reciprocity_reports_a_ledger() {
    let out = cyclify(&["reciprocity"], r#"{"n": 3, "symbols": [{"a": "y^2 - x", "b": "(x + y)/(y + 1)"}]}"#);
    assert_eq!(out.status.code(), Some(EXIT_VERIFIED));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("exact_product_is_one"));
}

#[test]
fn text_format_is_not_json() {
    let out = cyclify(&["--format", "text", "residues"], r#"{"n": 2, "symbols": [{"a": "x", "b": "y"}]}"#);
    assert_eq!(out.status.code(), Some(EXIT_VERIFIED));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(serde_json::from_str::<Value>(&text).is_err());
    assert!(text.contains("command: residues"));
}

#[test]
fn bad_input_is_unsupported() {
    let out = cyclify(&["residues"], r#"{"n": 2, "symbols": [{"a": "x +* y", "b": "y"}]}"#);
    assert_eq!(out.status.code(), Some(EXIT_UNSUPPORTED));
    let out = cyclify(&["residues"], "not json");
    assert_eq!(out.status.code(), Some(EXIT_UNSUPPORTED));
}

#[test]
fn wrong_witness_fails() {
    let job = r#"{"n": 3, "targets": [{"point": "y^3 - x*y - 1", "residue": "y^2", "witness": {"w": "y", "c": "5"}}]}"#;
    let out = cyclify(&["cyclify"], job);
    assert_eq!(out.status.code(), Some(EXIT_FAILED));
    assert!(!json(&out)["offending_points"].as_array().unwrap().is_empty());
}
