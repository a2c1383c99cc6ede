//! Comparing rankings: why plain rank correlation is too coarse, and how the
//! penalty-weighted similarity fixes that.
//!
//! Run with: cargo run --example compare_rankings

use fuzzy_rankings::{
    difference, dissimilarity, kendall_tau, max_dissimilarity, similarity_crisp, CrispRanking,
    FuzzyRanking, Mode, ObjectLabels, PenaltyMatrix, ToleranceConfig,
};

fn main() {
    let tol = ToleranceConfig::default();
    let labels = ObjectLabels::new(["A", "B", "C", "D", "E"]).unwrap();

    // Three rankings, each adjacent pair one transposition apart: r1/r2 swap
    // the winners, r2/r3 swap the two last places.
    let r1 = CrispRanking::from_order(labels.clone(), &["A", "B", "C", "D", "E"]).unwrap();
    let r2 = CrispRanking::from_order(labels.clone(), &["B", "A", "C", "D", "E"]).unwrap();
    let r3 = CrispRanking::from_order(labels.clone(), &["B", "A", "C", "E", "D"]).unwrap();

    // Kendall's tau sees both transpositions as equally severe.
    println!("tau(r1, r2) = {}", kendall_tau(&r1, &r2).unwrap());
    println!("tau(r2, r3) = {}", kendall_tau(&r2, &r3).unwrap());
    println!("tau(r1, r3) = {}", kendall_tau(&r1, &r3).unwrap());

    // A penalty matrix makes position pairs cost different amounts. Built
    // from adjacent gaps, the entries stay additive along the positions:
    // p(1,3) = p(1,2) + p(2,3), and so on.
    let p5 = PenaltyMatrix::from_gaps(&[0.5, 0.3, 0.1, 0.1]).unwrap();
    let swap_top = similarity_crisp(&r1, &r2, &p5).unwrap();
    let swap_tail = similarity_crisp(&r2, &r3, &p5).unwrap();
    println!("\nwith top-heavy penalties:");
    println!("  sim(r1, r2) = {:.6}  (swapped winners)", swap_top.sim);
    println!("  sim(r2, r3) = {:.6}  (swapped last places)", swap_tail.sim);

    // The same machinery compares fuzzy rankings entrywise.
    let abcd = ObjectLabels::new(["A", "B", "C", "D"]).unwrap();
    let confident = FuzzyRanking::new(
        abcd.clone(),
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
        abcd,
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

    let p4 = PenaltyMatrix::from_gaps(&[0.5, 0.3, 0.2]).unwrap();
    let d = difference(&confident, &hesitant).unwrap();
    println!("\nentrywise difference of the two fuzzy rankings:");
    for (label, row) in d.labels().iter().zip(d.entries().rows()) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.2}")).collect();
        println!("  {label}  {}", cells.join("  "));
    }
    let dis = dissimilarity(&confident, &hesitant, &p4).unwrap();
    let dis_max = max_dissimilarity(&p4).unwrap();
    println!("dis = {dis:.6}, dis_max = {dis_max:.6}, sim = {:.6}", 1.0 - dis / dis_max);
}
