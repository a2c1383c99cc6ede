//! Ordering the objects of a fuzzy ranking by cumulative dominance.
//!
//! Run with: cargo run --example order_objects

use fuzzy_rankings::{
    cumulative, dominance_report, dominates, DominanceOutcome, FuzzyRanking, Mode, ObjectLabels,
    ToleranceConfig,
};

fn main() {
    let tol = ToleranceConfig::default();
    let labels = ObjectLabels::new(["A", "B", "C", "D"]).unwrap();
    let f = FuzzyRanking::new(
        labels.clone(),
        vec![
            vec![0.30, 0.5, 0.20, 0.0],
            vec![0.25, 0.25, 0.5, 0.0],
            vec![0.25, 0.25, 0.0, 0.5],
            vec![0.25, 0.0, 0.25, 0.5],
        ],
        Mode::RowStochastic,
        &tol,
    )
    .unwrap();

    // Accumulating each row left to right gives, per object, how much mass
    // it has on "position j or better". Object r dominates object s when its
    // cumulative row is pointwise >= and strictly larger somewhere.
    let h = cumulative(&f);
    println!("cumulative rows:");
    for (label, row) in h.labels().iter().zip(h.entries().rows()) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.2}")).collect();
        println!("  {label}  {}", cells.join("  "));
    }

    println!("\npairwise:");
    println!("  A vs B: {}", dominates(&f, "A", "B", &tol).unwrap().as_str());
    println!("  B vs C: {}", dominates(&f, "B", "C", &tol).unwrap().as_str());
    println!("  D vs A: {}", dominates(&f, "D", "A", &tol).unwrap().as_str());

    // The full report ranks every object: rank = 1 + number of objects that
    // strictly dominate it. Here the ranking is a clean chain.
    let report = dominance_report(&f, &tol);
    println!("\nranks:");
    for i in report.order() {
        println!("  {} {}", report.rank(i), report.labels().get(i));
    }

    // Not every pair is ordered. An object that is either 1st or 3rd and one
    // that is surely 2nd cross: neither dominates, they are incomparable.
    let g = FuzzyRanking::new(
        ObjectLabels::new(["X", "Y", "Z"]).unwrap(),
        vec![
            vec![0.5, 0.0, 0.5],
            vec![0.0, 1.0, 0.0],
            vec![0.5, 0.0, 0.5],
        ],
        Mode::RowStochastic,
        &tol,
    )
    .unwrap();
    let report = dominance_report(&g, &tol);
    assert_eq!(report.outcome(0, 1), DominanceOutcome::Incomparable);
    println!("\nin the second ranking:");
    for &(r, s) in report.incomparable_pairs() {
        println!(
            "  {} and {} are incomparable (their cumulative rows cross)",
            report.labels().get(r),
            report.labels().get(s)
        );
    }
    for group in report.tie_groups() {
        let names: Vec<&str> = group.iter().map(|&i| report.labels().get(i)).collect();
        println!("  tied: {}", names.join(" "));
    }
}
