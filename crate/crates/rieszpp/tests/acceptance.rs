//! Acceptance gate: runs the full invariant suite once with the fixed seed
//! and prints one pass/fail line per criterion. All comparisons inside the
//! suite are exact rational equalities; there are no tolerances to pin.
//!
//! This test runs without the libtest harness so the criterion lines are
//! always visible in `cargo test` output.

use rieszpp::suite;

fn main() {
    let reports = suite::run_all(suite::DEFAULT_SEED);
    let mut all_passed = true;
    for (i, r) in reports.iter().enumerate() {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} — {} ({})", i + 1, r.name, r.detail);
        all_passed &= r.passed;
    }
    if !all_passed {
        eprintln!("at least one acceptance criterion failed");
        std::process::exit(1);
    }
}
