//! End-to-end tests of the command-line binary: output bytes and exit codes.

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rieszpp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_program(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().expect("temp file");
    f.write_all(text.as_bytes()).expect("write");
    f
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

const DEMO: &str = "let f = pp [0: x^2][1: 2*x - 1]\nlet g = (pp [0: x]) ox (pp [0: y])\n";

#[test]
fn eval_pp_and_tensor() {
    let file = write_program(DEMO);
    let path = file.path().to_str().unwrap();

    let out = run(&["eval", path, "f", "--at", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5\n");

    let out = run(&["eval", path, "g", "--at", "3,1/2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3/2\n");

    // The counterexample target is built in under the reserved name `h`.
    let out = run(&["eval", path, "h", "--at", "3,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn normalize_prints_sup_inf_form() {
    let file = write_program(DEMO);
    let out = run(&["normalize", file.path().to_str().unwrap(), "h"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "(pp [0: 1]) ox (pp [0: y^2]) /\\ (pp [0: x^2]) ox (pp [0: 1])\n"
    );
}

#[test]
fn restrict_h_to_a_line() {
    let file = write_program(DEMO);
    let out = run(&[
        "restrict",
        file.path().to_str().unwrap(),
        "h",
        "--axis",
        "x",
        "--c",
        "2",
    ]);
    assert!(out.status.success());
    // min(y^2, 4): parabola until y = 2, constant afterwards.
    assert_eq!(stdout(&out), "pp [0: y^2][2: 4]\n");
}

#[test]
fn ideal_check_reports_membership_and_reason() {
    let file = write_program("let a = pp [0: x^2][1: 2*x - 1]\nlet b = pp [0: x^2]\n");
    let path = file.path().to_str().unwrap();

    let out = run(&["ideal-check", path, "a"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "member lambda=3\n");

    let out = run(&["ideal-check", path, "b"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("not a member:"));
}

#[test]
fn affinity_reports_horizon() {
    let file = write_program(DEMO);
    let out = run(&[
        "affinity",
        file.path().to_str().unwrap(),
        "f",
        "--bound",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "k=1\n");
}

#[test]
fn affinity_rejects_a_violated_bound() {
    let file = write_program(DEMO);
    let out = run(&[
        "affinity",
        file.path().to_str().unwrap(),
        "f",
        "--bound",
        "1/10",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn refute_h_prints_a_certificate() {
    let file = write_program(DEMO);
    let out = run(&["refute-h", file.path().to_str().unwrap(), "g"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("refuted\n"));
    assert!(text.contains("line x=2\n"));
    assert!(text.contains("candidate value="));
    assert!(text.contains("h value="));
}

#[test]
fn refute_h_rejects_candidates_outside_the_ideals() {
    // 1 (x) y^2 is not built from ideal members: the left factor has value 1
    // at the origin. This is an input error, not a refutation.
    let file = write_program("let bad = (pp [0: 1]) ox (pp [0: y^2])\n");
    let out = run(&["refute-h", file.path().to_str().unwrap(), "bad"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dominate_h_checks_each_line() {
    let out = run(&["dominate-h", "--lines", "1/2,1,3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "x=1/2: dominated\nx=1: dominated\nx=3: dominated\n"
    );
}

#[test]
fn c00_operations() {
    let file = write_program("let u = c00 { a: 1, c: 2 }\nlet v = c00 { b: 3, c: 1 }\nlet t = c00t [a: 5][b: 7]\nlet cancel = c00t [a: 1][a: -1]\n");
    let path = file.path().to_str().unwrap();

    let out = run(&["c00", "sup", path, "u", "v"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "c00 { a: 1, b: 3, c: 2 }\n");

    let out = run(&["c00", "meet", path, "u", "v"]);
    assert_eq!(stdout(&out), "c00 { c: 1 }\n");

    let out = run(&["c00", "add", path, "u", "v"]);
    assert_eq!(stdout(&out), "c00 { a: 1, b: 3, c: 3 }\n");

    let out = run(&["c00", "from-tensor", path, "t"]);
    assert_eq!(stdout(&out), "c00 { a: 5, b: 7 }\n");

    // Cancelling terms leave the empty map.
    let out = run(&["c00", "from-tensor", path, "cancel"]);
    assert_eq!(stdout(&out), "c00 { }\n");
}

#[test]
fn fin_operations() {
    let file = write_program(concat!(
        "let u = vec [1, 2]\n",
        "let v = vec [3, 4, 5]\n",
        "let m = mat [[1, 2], [3, 4]]\n",
        "let n = mat [[4, 1], [2, 3]]\n",
        "let p = psi { (0, 0): mat [[1, 0], [0, 0]], (0, 1): mat [[0, 1], [0, 0]], ",
        "(1, 0): mat [[0, 0], [1, 0]], (1, 1): mat [[0, 0], [0, 1]] }\n",
    ));
    let path = file.path().to_str().unwrap();

    let out = run(&["fin", "outer", path, "u", "v"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "mat [[3, 4, 5], [6, 8, 10]]\n");

    let out = run(&["fin", "sup", path, "m", "n"]);
    assert_eq!(stdout(&out), "mat [[4, 2], [3, 4]]\n");

    // The identity table factors to the identity map on matrices.
    let out = run(&["fin", "factor", path, "p", "m"]);
    assert_eq!(stdout(&out), "mat [[1, 2], [3, 4]]\n");
}

#[test]
fn input_errors_exit_one_with_stderr_diagnostics() {
    let file = write_program(DEMO);
    let path = file.path().to_str().unwrap();

    let out = run(&["eval", path, "nosuch", "--at", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty());
    assert!(!out.stderr.is_empty());

    let bad = write_program("let f = pp [1: x]\n");
    let out = run(&["eval", bad.path().to_str().unwrap(), "f", "--at", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_byte_deterministic() {
    let file = write_program(DEMO);
    let path = file.path().to_str().unwrap();
    let first = run(&["refute-h", path, "g"]);
    let second = run(&["refute-h", path, "g"]);
    assert_eq!(first.stdout, second.stdout);
}
