//! The shipping gate: one test per acceptance criterion, in battery order,
//! each producing exactly one pass/fail line. The first thirteen drive the
//! shared verification battery at full level; the fourteenth checks that
//! every command of the installed binary is byte-reproducible.

use std::process::Command;

use kq_core::verify::{run_one, Level};

fn criterion(name: &str) {
    let v = run_one(name, Level::Full).expect("criterion exists");
    println!("{} {}: {}", if v.passed { "PASS" } else { "FAIL" }, v.name, v.detail);
    assert!(v.passed, "{}: {}", v.name, v.detail);
}

#[test]
fn criterion_01_registry_and_families() {
    criterion("registry-and-families");
}

#[test]
fn criterion_02_normalization_and_sl1() {
    criterion("normalization-and-sl1");
}

#[test]
fn criterion_03_dual_forms() {
    criterion("dual-forms");
}

#[test]
fn criterion_04_bottom_rows() {
    criterion("bottom-rows");
}

#[test]
fn criterion_05_size_law() {
    criterion("size-law");
}

#[test]
fn criterion_06_rewriter_soundness() {
    criterion("rewriter-soundness");
}

#[test]
fn criterion_07_ordering_freedom() {
    criterion("ordering-freedom");
}

#[test]
fn criterion_08_bps_and_dt() {
    criterion("bps-and-dt");
}

#[test]
fn criterion_09_homology_dimensions() {
    criterion("homology-dimensions");
}

#[test]
fn criterion_10_decategorification() {
    criterion("decategorification");
}

#[test]
fn criterion_11_pochhammer_interpolation() {
    criterion("pochhammer-interpolation");
}

#[test]
fn criterion_12_colored_differentials() {
    criterion("colored-differentials");
}

#[test]
fn criterion_13_rank_two_refinement() {
    criterion("rank-two-refinement");
}

#[test]
fn criterion_14_command_line_determinism() {
    // Every subcommand, both output modes, run twice: stdout and exit code
    // must be byte-identical (stderr carries the timing and may differ).
    let sweeps: Vec<Vec<&str>> = vec![
        vec!["knots"],
        vec!["eval", "--knot", "3_1", "--r", "2"],
        vec!["eval", "--knot", "9_42", "--r", "2", "--unreduced"],
        vec!["eval", "--knot", "t2_9", "--r", "1", "--pretty"],
        vec!["bottom", "--knot", "9_42", "--r", "3"],
        vec!["bottom", "--knot", "9_42", "--r", "2", "--unreduced"],
        vec!["rewrite", "--knot", "5_1", "--ordering", "1,3,2"],
        vec!["rewrite", "--knot", "4_1", "--check-r", "3"],
        vec!["rewrite", "--knot", "5_1", "--all-orderings"],
        vec!["quiver-eval", "--knot", "6_2", "--r", "2"],
        vec!["quiver-series", "--knot", "3_1", "--max-x", "2", "--max-q", "6"],
        vec!["lmov", "--knot", "5_1", "--max-r", "2"],
        vec!["dt", "--knot", "3_1"],
        vec!["homology", "eval", "--r", "1"],
        vec!["homology", "eval", "--r", "1", "--grading", "rc"],
        vec!["homology", "check", "--prop", "decat", "--r", "1"],
        vec!["homology", "check", "--prop", "hp-lemma", "--o", "0", "--m", "2"],
        vec!["homology", "check", "--prop", "pos-diff", "--r", "2", "--l", "1"],
        vec!["homology", "check", "--prop", "s2", "--pretty"],
        vec!["verify-all", "--level", "quick"],
    ];
    for args in &sweeps {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_kq"))
                .args(args)
                .output()
                .expect("binary runs")
        };
        let first = run();
        let second = run();
        assert_eq!(
            first.status.code(),
            second.status.code(),
            "{args:?}: exit codes must agree"
        );
        assert_eq!(first.stdout, second.stdout, "{args:?}: stdout must be byte-identical");
        assert!(
            first.status.code() == Some(0),
            "{args:?}: sweep commands must succeed, stdout: {}",
            String::from_utf8_lossy(&first.stdout)
        );
    }
    println!("PASS command-line-determinism: {} commands byte-stable", sweeps.len());
}
