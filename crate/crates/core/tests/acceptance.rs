//! Acceptance gate: one test per criterion of the verification suite, with
//! pinned tolerances. Each prints a single pass/fail line.

use werner_core::suite::{run_criterion, SuiteConfig};

fn check(id: usize) {
    let out = run_criterion(id, &SuiteConfig::default());
    println!(
        "criterion {:2} [{}] {}: {}",
        out.id,
        if out.passed { "PASS" } else { "FAIL" },
        out.name,
        out.details
    );
    assert!(
        out.passed,
        "criterion {} ({}) failed: {}",
        out.id, out.name, out.details
    );
}

#[test]
fn criterion_01_commutant_dimensions() {
    check(1);
}

#[test]
fn criterion_02_pure_dimensions() {
    check(2);
}

#[test]
fn criterion_03_chord_basis() {
    check(3);
}

#[test]
fn criterion_04_cyclic_mixture_family() {
    check(4);
}

#[test]
fn criterion_05_cyclic_worked_example() {
    check(5);
}

#[test]
fn criterion_06_diagram_conjecture() {
    check(6);
}

#[test]
fn criterion_07_symmetric_radial() {
    check(7);
}

#[test]
fn criterion_08_stabilizer_baseline() {
    check(8);
}

#[test]
fn criterion_09_glb_experiment() {
    check(9);
}

#[test]
fn criterion_10_pure_bipartition() {
    check(10);
}

#[test]
fn criterion_11_oracle_cross_checks() {
    check(11);
}
