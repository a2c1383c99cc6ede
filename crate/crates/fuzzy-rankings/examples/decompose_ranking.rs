//! Splitting a doubly stochastic ranking into a convex mix of crisp ones.
//!
//! Run with: cargo run --example decompose_ranking

use fuzzy_rankings::{decompose, FuzzyRanking, Mode, ObjectLabels, SquareMatrix, ToleranceConfig};

fn main() {
    let tol = ToleranceConfig::default();
    let labels = ObjectLabels::new(["A", "B", "C", "D"]).unwrap();

    // A decision maker leaning 70/30 towards A over B for the top spot.
    // Because the matrix is doubly stochastic, it must be a convex
    // combination of permutation matrices, i.e. of crisp rankings.
    let lean = FuzzyRanking::new(
        labels.clone(),
        vec![
            vec![0.7, 0.3, 0.0, 0.0],
            vec![0.3, 0.7, 0.0, 0.0],
            vec![0.0, 0.0, 1.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
        ],
        Mode::Strict,
        &tol,
    )
    .unwrap();

    let terms = decompose(&lean, &tol).unwrap();
    println!("the 70/30 lean splits into {} crisp rankings:", terms.len());
    for (theta, r) in &terms {
        println!("  {theta:.2} x ({})", r.order_labels().join(" > "));
    }

    // The mix reconstructs the input exactly here: coefficients times
    // permutation matrices, summed.
    let mut rebuilt = SquareMatrix::zeros(4);
    for (theta, r) in &terms {
        rebuilt.add_scaled(&r.matrix(), *theta);
    }
    println!("reconstruction residual: {:e}", rebuilt.max_abs_diff(lean.entries()));

    // The uniform ranking is the centre of the doubly stochastic set; its
    // decomposition needs several terms but their coefficients still sum
    // to 1.
    let uniform = FuzzyRanking::uniform(labels);
    let terms = decompose(&uniform, &tol).unwrap();
    let total: f64 = terms.iter().map(|(theta, _)| theta).sum();
    println!("\nuniform 4x4 ranking: {} terms, coefficients sum to {total}", terms.len());
    for (theta, r) in &terms {
        println!("  {theta:.4} x ({})", r.order_labels().join(" > "));
    }

    // Row-stochastic matrices with drifting columns are not convex mixes of
    // permutations, so decomposition refuses them up front.
    let drifting = FuzzyRanking::new(
        ObjectLabels::new(["X", "Y"]).unwrap(),
        vec![vec![1.0, 0.0], vec![1.0, 0.0]],
        Mode::RowStochastic,
        &tol,
    )
    .unwrap();
    println!("\nrow-only input: {}", decompose(&drifting, &tol).unwrap_err());
}
