//! Aggregating a panel's rankings into one fuzzy group ranking.
//!
//! Run with: cargo run --example aggregate_group

use fuzzy_rankings::{
    dominance_report, mean, mean_weighted_by_decisiveness, CrispRanking, FuzzyRanking, Mode,
    ObjectLabels, ToleranceConfig, WeightVector,
};

fn print_matrix(f: &FuzzyRanking) {
    for (label, row) in f.labels().iter().zip(f.entries().rows()) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.2}")).collect();
        println!("  {label}  {}", cells.join("  "));
    }
}

fn main() {
    let tol = ToleranceConfig::default();
    let labels = ObjectLabels::new(["A", "B", "C", "D"]).unwrap();

    // Four panellists rank the same objects. Three provide proper
    // permutations; the second puts C and D on the same position, which is
    // fine in row-stochastic terms.
    let dm1 = CrispRanking::from_positions(labels.clone(), &[1, 3, 2, 4]).unwrap().to_fuzzy();
    let dm2 = FuzzyRanking::new(
        labels.clone(),
        vec![
            vec![0.0, 1.0, 0.0, 0.0],
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0, 0.0],
        ],
        Mode::RowStochastic,
        &tol,
    )
    .unwrap();
    let dm3 = CrispRanking::from_positions(labels.clone(), &[2, 3, 1, 4]).unwrap().to_fuzzy();
    let dm4 = CrispRanking::from_positions(labels.clone(), &[3, 2, 4, 1]).unwrap().to_fuzzy();
    let panel = vec![dm1, dm2, dm3, dm4];

    // The entrywise mean of row-stochastic matrices is row-stochastic, so
    // the group view is itself a fuzzy ranking. No renormalisation happens.
    let group = mean(&panel, None).unwrap();
    println!("group mean:");
    print_matrix(&group);

    // Cumulative dominance turns the group view into a ranking of objects.
    let report = dominance_report(&group, &tol);
    println!("\ngroup order:");
    for i in report.order() {
        println!("  {} {}", report.rank(i), report.labels().get(i));
    }

    // Weights are just as easy, whether given explicitly...
    let w = WeightVector::new(vec![0.4, 0.2, 0.2, 0.2]).unwrap();
    let weighted = mean(&panel, Some(&w)).unwrap();
    println!("\nwith the first panellist double-weighted:");
    print_matrix(&weighted);

    // ...or derived from how decisive each panellist was.
    let (by_decisiveness, weights) = mean_weighted_by_decisiveness(&panel).unwrap();
    let rendered: Vec<String> = weights.as_slice().iter().map(|w| format!("{w:.4}")).collect();
    println!("\nweighted by decisiveness ({}):", rendered.join(", "));
    print_matrix(&by_decisiveness);
}
