//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! All comparisons are exact; randomized instances use a fixed seed so the
//! suite is reproducible. `cargo test --test acceptance -- --nocapture`
//! shows the one-line summaries.

use wavecount::verify::acceptance_criterion;

const SEED: u64 = 20260810;

fn assert_criterion(index: usize) {
    let result = acceptance_criterion(index, SEED);
    let status = if result.passed { "PASS" } else { "FAIL" };
    println!("{status} {}", result.name);
    assert!(result.passed, "{}: {}", result.name, result.detail);
}

#[test]
fn criterion_01_oracle_agreement() {
    assert_criterion(1);
}

#[test]
fn criterion_02_popoviciu_and_gcd_extension() {
    assert_criterion(2);
}

#[test]
fn criterion_03_tetrahedral_split_and_hermite() {
    assert_criterion(3);
}

#[test]
fn criterion_04_two_wave_reconstruction_and_residual_period() {
    assert_criterion(4);
}

#[test]
fn criterion_05_w2_cross_forms() {
    assert_criterion(5);
}

#[test]
fn criterion_06_parity_reciprocity() {
    assert_criterion(6);
}

#[test]
fn criterion_07_constant_tables() {
    assert_criterion(7);
}

#[test]
fn criterion_08_ehrhart_references() {
    assert_criterion(8);
}

#[test]
fn criterion_09_molien() {
    assert_criterion(9);
}

#[test]
fn criterion_10_midpoint_combination() {
    assert_criterion(10);
}
