//! Measuring how undecided a fuzzy ranking is, via row entropies.
//!
//! Run with: cargo run --example measure_indecisiveness

use fuzzy_rankings::indecisiveness;
use fuzzy_rankings::{
    decisiveness_weights, index_of_indecisiveness, CrispRanking, FuzzyRanking, Mode, ObjectLabels,
    ToleranceConfig,
};

fn main() {
    let tol = ToleranceConfig::default();
    let labels = ObjectLabels::new(["A", "B", "C", "D"]).unwrap();

    // Each row is a distribution over positions; its Shannon entropy (base
    // 2) measures how spread out the object's position is. Summing rows
    // gives the ranking's indecisiveness; dividing by n*log2(n) normalises
    // it into [0, 1].
    let confident = FuzzyRanking::new(
        labels.clone(),
        vec![
            vec![0.60, 0.30, 0.10, 0.0],
            vec![0.30, 0.30, 0.20, 0.20],
            vec![0.10, 0.30, 0.40, 0.20],
            vec![0.0, 0.10, 0.30, 0.60],
        ],
        Mode::Strict,
        &tol,
    )
    .unwrap();
    let hesitant = FuzzyRanking::new(
        labels.clone(),
        vec![
            vec![0.40, 0.30, 0.20, 0.10],
            vec![0.30, 0.25, 0.25, 0.20],
            vec![0.20, 0.25, 0.30, 0.25],
            vec![0.10, 0.20, 0.25, 0.45],
        ],
        Mode::Strict,
        &tol,
    )
    .unwrap();

    for (name, f) in [("confident", &confident), ("hesitant", &hesitant)] {
        let report = indecisiveness::report(f).unwrap();
        println!("{name}:");
        for (label, h) in report.labels().iter().zip(report.per_row()) {
            println!("  H({label}) = {h:.4}");
        }
        println!("  ind = {:.4} of {:.1} max, index = {:.4}\n", report.ind, report.ind_max, report.ii);
    }

    // The endpoints: a crisp ranking has index 0, the uniform ranking 1.
    let crisp = CrispRanking::from_order(labels.clone(), &["B", "A", "D", "C"]).unwrap().to_fuzzy();
    println!("crisp ranking index   = {}", index_of_indecisiveness(&crisp).unwrap());
    println!("uniform ranking index = {}", index_of_indecisiveness(&FuzzyRanking::uniform(labels)).unwrap());

    // Decisiveness converts into aggregation weights: the more decided a
    // panellist, the more say they get (proportional to 1 - index).
    let w = decisiveness_weights(&[confident, hesitant]).unwrap();
    println!("\npanel weights: confident = {:.6}, hesitant = {:.6}", w[0], w[1]);
}
