//! Validating ranking matrices: what gets accepted, what gets rejected, and
//! what a rejection tells you.
//!
//! Run with: cargo run --example validate_ranking

use std::path::Path;

use fuzzy_rankings::io::{load_matrix, MatrixKind};
use fuzzy_rankings::{FuzzyRanking, Mode, ObjectLabels, ToleranceConfig};

fn main() {
    let tol = ToleranceConfig::default();
    let labels = ObjectLabels::new(["A", "B", "C", "D"]).unwrap();

    // A doubly stochastic matrix passes strict validation: every row and
    // every column sums to 1.
    let tie = vec![
        vec![0.5, 0.5, 0.0, 0.0],
        vec![0.5, 0.5, 0.0, 0.0],
        vec![0.0, 0.0, 1.0, 0.0],
        vec![0.0, 0.0, 0.0, 1.0],
    ];
    let f = FuzzyRanking::new(labels.clone(), tie, Mode::Strict, &tol).unwrap();
    println!("accepted: {} objects, mode {}", f.n(), f.mode());

    // This one is row-stochastic but its columns drift: column 1 sums to
    // 1.05 and column 3 to 0.95. Strict mode rejects it and reports every
    // violated constraint with 1-based indices.
    let drifting = vec![
        vec![0.30, 0.5, 0.20, 0.0],
        vec![0.25, 0.25, 0.5, 0.0],
        vec![0.25, 0.25, 0.0, 0.5],
        vec![0.25, 0.0, 0.25, 0.5],
    ];
    let err = FuzzyRanking::new(labels.clone(), drifting.clone(), Mode::Strict, &tol).unwrap_err();
    println!("\nstrict mode rejects the drifting matrix:");
    for v in err.violations() {
        println!("  {}: {v}", v.code());
    }

    // Row-stochastic mode accepts it; the column drift is still visible as
    // warnings so nothing is silently swallowed.
    let f = FuzzyRanking::new(labels, drifting, Mode::RowStochastic, &tol).unwrap();
    println!("\nrow mode accepts it, with warnings:");
    for v in f.strict_violations(&tol) {
        println!("  {}: {v}", v.code());
    }

    // The same checks run when loading files. Entries are taken verbatim,
    // never rescaled, so what you validate is exactly what you compute with.
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/ordering_input.csv");
    match load_matrix(&fixture, MatrixKind::Fuzzy, Mode::Strict, &tol) {
        Ok(_) => println!("\nunexpected: the fixture passed strict validation"),
        Err(e) => println!("\nloading {} in strict mode fails:\n  {e}", fixture.display()),
    }
    let loaded = load_matrix(&fixture, MatrixKind::Fuzzy, Mode::RowStochastic, &tol).unwrap();
    println!(
        "loading it in row mode works ({} warnings), digest {}",
        loaded.warnings.len(),
        loaded.digest
    );
}
