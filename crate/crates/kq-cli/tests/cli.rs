//! Binary-level behavior: exit codes, stdout/stderr separation, and
//! agreement between the in-process entry point and the installed binary.

use std::process::{Command, Output};

fn kq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kq"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn binary_matches_the_in_process_entry_point() {
    for args in [
        vec!["knots"],
        vec!["eval", "--knot", "5_2", "--r", "2"],
        vec!["homology", "check", "--prop", "dims", "--r", "1"],
    ] {
        let out = kq(&args);
        let owned: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let (code, text) = kq_cli::run(&owned);
        assert_eq!(out.status.code(), Some(code as i32), "{args:?} exit code");
        assert_eq!(
            String::from_utf8_lossy(&out.stdout),
            format!("{text}\n"),
            "{args:?} stdout"
        );
    }
}

#[test]
fn timing_goes_to_stderr_only() {
    let out = kq(&["eval", "--knot", "3_1", "--r", "1"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(!stdout.contains("elapsed"), "stdout must stay timing-free");
    assert!(stderr.contains("elapsed"), "stderr carries the timing line");
}

#[test]
fn exit_codes_cover_the_three_classes() {
    assert_eq!(kq(&["eval", "--knot", "3_1", "--r", "0"]).status.code(), Some(0));
    // Verification failure: framing 0 leaves negative entries, the factor
    // peel refuses with a negative invariant.
    assert_eq!(kq(&["dt", "--knot", "4_1", "--framing", "0"]).status.code(), Some(1));
    assert_eq!(kq(&["eval", "--knot", "unknown", "--r", "0"]).status.code(), Some(2));
    assert_eq!(kq(&["eval", "--badflag"]).status.code(), Some(2));
    assert_eq!(kq(&["--help"]).status.code(), Some(0));
}

#[test]
fn unreduced_eval_reports_the_denominator() {
    let out = kq(&["eval", "--knot", "3_1", "--r", "2", "--unreduced"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("stdout is a JSON report");
    assert_eq!(v["result"]["reduced"], false);
    assert_eq!(v["result"]["den_len"], 2);
}

#[test]
fn all_orderings_reports_distinct_verified_quivers() {
    let out = kq(&["rewrite", "--knot", "5_1", "--all-orderings"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["distinct"], 2, "5_1 has two distinct ordering quivers");
    assert_eq!(v["verdicts"][0]["passed"], true);
}
