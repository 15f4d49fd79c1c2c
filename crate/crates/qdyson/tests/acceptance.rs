//! Acceptance gate: every identity the crate claims, checked on its full
//! desk-scale grid.
//!
//! Each test runs one verification suite at its default bounds (the same
//! bounds the command-line `verify` subcommand uses) and prints exactly one
//! pass/fail line. Run with `--nocapture` to see all lines:
//!
//! ```text
//! cargo test --test acceptance -- --nocapture
//! ```

use qdyson::verify::{run_suite, Suite};

/// Runs `suite` at its default bounds, keeps the records whose id starts
/// with `prefix` (all records when empty), prints the verdict line, and
/// fails on any non-passing record.
fn check(label: &str, suite: Suite, prefix: &str) {
    let outcome = run_suite(suite, &suite.default_bounds());
    let records: Vec<_> =
        outcome.records.iter().filter(|r| r.id.starts_with(prefix)).collect();
    assert!(!records.is_empty(), "{label}: no cases matched prefix {prefix:?}");
    let passed = records.iter().filter(|r| r.pass).count();
    let verdict = if passed == records.len() { "PASS" } else { "FAIL" };
    println!("acceptance [{}] {label}: {verdict} ({passed}/{} cases)", suite.token(), records.len());
    let failures: Vec<&str> =
        records.iter().filter(|r| !r.pass).map(|r| r.id.as_str()).collect();
    assert!(
        failures.is_empty(),
        "{label}: {} failing cases, first few: {:?}",
        failures.len(),
        &failures[..failures.len().min(5)]
    );
}

#[test]
fn criterion_01_kernel_constant_term_equals_product_formula() {
    check("kernel constant term equals product formula", Suite::QDyson, "");
}

#[test]
fn criterion_02_diagonal_closed_form() {
    check("diagonal closed form matches brute force", Suite::Diagonal, "diagonal");
}

#[test]
fn criterion_03_vanishing_below_the_diagonal() {
    check("constant term vanishes below the diagonal", Suite::Diagonal, "vanishing");
}

#[test]
fn criterion_04_single_row_closed_form() {
    check("single-row closed form over all v", Suite::SingleRow, "");
}

#[test]
fn criterion_05_pochhammer_rewrite_identities() {
    check("Pochhammer rewrite identities", Suite::PochRewrite, "");
}

#[test]
fn criterion_06_partial_fraction_splitting() {
    check("partial-fraction splitting at random points", Suite::Splitting, "");
}

#[test]
fn criterion_07_binomial_summation_and_theorem() {
    check("binomial summation and q-binomial theorem", Suite::BinomialSum, "");
}

#[test]
fn criterion_08_peeling_recursion() {
    check("peeling recursion matches brute force", Suite::Recursion, "");
}

#[test]
fn criterion_09_fixed_examples_and_expansion() {
    check("fixed off-diagonal examples and h-expansion", Suite::Expansion, "");
}

#[test]
fn criterion_10_dominance_vanishing() {
    check("dominance vanishing criterion", Suite::Dominance, "");
}
