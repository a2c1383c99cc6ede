//! Distance and similarity between rankings.
//!
//! Kendall's tau compares crisp rankings by concordant and discordant pairs.
//! Fuzzy rankings are compared through the entrywise absolute difference of
//! their matrices, weighted by a penalty matrix: positions near the top can
//! be made to matter more than positions near the bottom.

use crate::crisp::CrispRanking;
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyRanking;
use crate::labels::ObjectLabels;
use crate::matrix::SquareMatrix;
use crate::penalty::PenaltyMatrix;

/// Kendall rank correlation: 2(n_c - n_d) / (n(n-1)) by exact pair counting.
/// 1 for identical rankings, -1 for exact reversals.
pub fn kendall_tau(a: &CrispRanking, b: &CrispRanking) -> Result<f64> {
    if a.labels() != b.labels() {
        return Err(Error::LabelMismatch);
    }
    let n = a.n();
    if n < 2 {
        return Err(Error::SingleObject);
    }
    let mut concordant: i64 = 0;
    let mut discordant: i64 = 0;
    for i in 0..n {
        for j in i + 1..n {
            let da = a.position(i) as i64 - a.position(j) as i64;
            let db = b.position(i) as i64 - b.position(j) as i64;
            if da * db > 0 {
                concordant += 1;
            } else {
                discordant += 1;
            }
        }
    }
    Ok(2.0 * (concordant - discordant) as f64 / (n * (n - 1)) as f64)
}

/// Entrywise absolute difference of two rankings over the same objects.
#[derive(Debug, Clone, PartialEq)]
pub struct DifferenceMatrix {
    labels: ObjectLabels,
    entries: SquareMatrix,
}

impl DifferenceMatrix {
    pub fn labels(&self) -> &ObjectLabels {
        &self.labels
    }

    pub fn entries(&self) -> &SquareMatrix {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries.get(row, col)
    }
}

pub fn difference(a: &FuzzyRanking, b: &FuzzyRanking) -> Result<DifferenceMatrix> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
    }
    if a.labels() != b.labels() {
        return Err(Error::LabelMismatch);
    }
    Ok(DifferenceMatrix {
        labels: a.labels().clone(),
        entries: a.entries().abs_diff(b.entries()),
    })
}

/// Penalty-weighted dissimilarity: half the sum of p(i,j) * d(i,j) over all
/// cells, where d is the difference matrix. The sum runs over the full
/// matrix, diagonal included (the diagonal of p is zero).
pub fn dissimilarity(a: &FuzzyRanking, b: &FuzzyRanking, p: &PenaltyMatrix) -> Result<f64> {
    if p.n() != a.n() {
        return Err(Error::DimensionMismatch { left: a.n(), right: p.n() });
    }
    let d = difference(a, b)?;
    let n = a.n();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            acc += p.get(i, j) * d.get(i, j);
        }
    }
    Ok(0.5 * acc)
}

/// Normalisation constant for similarity: half the sum of the penalties of
/// all position pairs, p(i,j) over j > i.
///
/// Note that this is a fixed normalisation, not the true maximum of
/// [`dissimilarity`] over ranking pairs; crisp pairs that park every object
/// far from its counterpart can exceed it (they stay within twice this
/// value). See [`similarity`] for the consequence.
pub fn max_dissimilarity(p: &PenaltyMatrix) -> Result<f64> {
    if p.is_zero() {
        return Err(Error::DegeneratePenalty);
    }
    let n = p.n();
    let mut acc = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            acc += p.get(i, j);
        }
    }
    Ok(0.5 * acc)
}

/// Dissimilarity, its normalisation constant, and the resulting similarity.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityReport {
    pub dis: f64,
    pub dis_max: f64,
    /// 1 - dis/dis_max. Clamped into [0, 1] only when floating-point residue
    /// pushes it out; genuinely out-of-range values are reported as they are
    /// (see [`max_dissimilarity`]).
    pub sim: f64,
    /// Kendall's tau, present when both inputs are crisp.
    pub tau: Option<f64>,
}

pub fn similarity(a: &FuzzyRanking, b: &FuzzyRanking, p: &PenaltyMatrix) -> Result<SimilarityReport> {
    let dis = dissimilarity(a, b, p)?;
    let dis_max = max_dissimilarity(p)?;
    let mut sim = 1.0 - dis / dis_max;
    let eps = crate::tolerance::DEFAULT_EPS;
    if sim < 0.0 && sim >= -eps {
        sim = 0.0;
    } else if sim > 1.0 && sim <= 1.0 + eps {
        sim = 1.0;
    }
    Ok(SimilarityReport { dis, dis_max, sim, tau: None })
}

/// [`similarity`] of two crisp rankings through their matrix views, with
/// Kendall's tau filled in.
pub fn similarity_crisp(a: &CrispRanking, b: &CrispRanking, p: &PenaltyMatrix) -> Result<SimilarityReport> {
    let tau = kendall_tau(a, b)?;
    let mut report = similarity(&a.to_fuzzy(), &b.to_fuzzy(), p)?;
    report.tau = Some(tau);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::Mode;
    use crate::tolerance::ToleranceConfig;

    fn labels5() -> ObjectLabels {
        ObjectLabels::new(["A", "B", "C", "D", "E"]).unwrap()
    }

    fn abcd() -> ObjectLabels {
        ObjectLabels::new(["A", "B", "C", "D"]).unwrap()
    }

    fn penalty() -> PenaltyMatrix {
        PenaltyMatrix::from_gaps(&[0.5, 0.3, 0.2]).unwrap()
    }

    /// First expert: confident about the extremes.
    fn expert_1() -> FuzzyRanking {
        FuzzyRanking::new(
            abcd(),
            vec![
                vec![0.60, 0.30, 0.10, 0.0],
                vec![0.30, 0.30, 0.20, 0.20],
                vec![0.10, 0.30, 0.40, 0.20],
                vec![0.0, 0.10, 0.30, 0.60],
            ],
            Mode::Strict,
            &ToleranceConfig::default(),
        )
        .unwrap()
    }

    /// Second expert: close to indifferent everywhere.
    fn expert_2() -> FuzzyRanking {
        FuzzyRanking::new(
            abcd(),
            vec![
                vec![0.40, 0.30, 0.20, 0.10],
                vec![0.30, 0.25, 0.25, 0.20],
                vec![0.20, 0.25, 0.30, 0.25],
                vec![0.10, 0.20, 0.25, 0.45],
            ],
            Mode::Strict,
            &ToleranceConfig::default(),
        )
        .unwrap()
    }

    #[test]
    fn tau_reference_pairs() {
        let r1 = CrispRanking::from_order(labels5(), &["A", "B", "C", "D", "E"]).unwrap();
        let r2 = CrispRanking::from_order(labels5(), &["B", "A", "C", "D", "E"]).unwrap();
        let r3 = CrispRanking::from_order(labels5(), &["B", "A", "C", "E", "D"]).unwrap();
        assert_eq!(kendall_tau(&r1, &r2).unwrap(), 0.8);
        assert_eq!(kendall_tau(&r2, &r3).unwrap(), 0.8);
        assert_eq!(kendall_tau(&r1, &r3).unwrap(), 0.6);
    }

    #[test]
    fn tau_endpoints_and_symmetry() {
        let r = CrispRanking::from_order(labels5(), &["C", "A", "E", "B", "D"]).unwrap();
        assert_eq!(kendall_tau(&r, &r).unwrap(), 1.0);
        assert_eq!(kendall_tau(&r, &r.reversed()).unwrap(), -1.0);
        let s = CrispRanking::from_order(labels5(), &["E", "D", "A", "C", "B"]).unwrap();
        assert_eq!(kendall_tau(&r, &s).unwrap(), kendall_tau(&s, &r).unwrap());
    }

    #[test]
    fn tau_errors() {
        let r = CrispRanking::from_order(abcd(), &["A", "B", "C", "D"]).unwrap();
        let other = CrispRanking::from_order(ObjectLabels::new(["W", "X", "Y", "Z"]).unwrap(), &["W", "X", "Y", "Z"]).unwrap();
        assert!(matches!(kendall_tau(&r, &other), Err(Error::LabelMismatch)));
        let single = CrispRanking::from_order(ObjectLabels::new(["A"]).unwrap(), &["A"]).unwrap();
        assert!(matches!(kendall_tau(&single, &single), Err(Error::SingleObject)));
    }

    #[test]
    fn difference_of_experts() {
        let d = difference(&expert_1(), &expert_2()).unwrap();
        let expected = [
            [0.20, 0.0, 0.10, 0.10],
            [0.0, 0.05, 0.05, 0.0],
            [0.10, 0.05, 0.10, 0.05],
            [0.10, 0.10, 0.05, 0.15],
        ];
        for (i, row) in expected.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                assert!((d.get(i, j) - want).abs() < 1e-12, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn difference_is_symmetric_and_zero_on_self() {
        let a = expert_1();
        let b = expert_2();
        let ab = difference(&a, &b).unwrap();
        let ba = difference(&b, &a).unwrap();
        assert_eq!(ab.entries(), ba.entries());
        let aa = difference(&a, &a).unwrap();
        assert_eq!(aa.entries().max_entry(), 0.0);
    }

    #[test]
    fn difference_errors() {
        let a = expert_1();
        let small = FuzzyRanking::uniform(ObjectLabels::new(["A", "B"]).unwrap());
        assert!(matches!(difference(&a, &small), Err(Error::DimensionMismatch { .. })));
        let relabeled = FuzzyRanking::uniform(ObjectLabels::new(["W", "X", "Y", "Z"]).unwrap());
        assert!(matches!(difference(&a, &relabeled), Err(Error::LabelMismatch)));
    }

    #[test]
    fn dissimilarity_of_experts() {
        let dis = dissimilarity(&expert_1(), &expert_2(), &penalty()).unwrap();
        assert!((dis - 0.23).abs() < 1e-12, "got {dis}");
    }

    #[test]
    fn dissimilarity_identity_vs_reversal() {
        let id = CrispRanking::from_order(abcd(), &["A", "B", "C", "D"]).unwrap();
        let dis = dissimilarity(&id.to_fuzzy(), &id.reversed().to_fuzzy(), &penalty()).unwrap();
        assert!((dis - 1.3).abs() < 1e-12, "got {dis}");
    }

    #[test]
    fn dissimilarity_zero_iff_equal() {
        let a = expert_1();
        assert_eq!(dissimilarity(&a, &a, &penalty()).unwrap(), 0.0);
    }

    #[test]
    fn max_dissimilarity_is_half_the_penalty_mass() {
        assert!((max_dissimilarity(&penalty()).unwrap() - 1.65).abs() < 1e-12);
        let single_gap = PenaltyMatrix::from_gaps(&[1.0]).unwrap();
        assert_eq!(max_dissimilarity(&single_gap).unwrap(), 0.5);
        assert!(matches!(
            max_dissimilarity(&PenaltyMatrix::zeros(3)),
            Err(Error::DegeneratePenalty)
        ));
    }

    #[test]
    fn similarity_of_experts() {
        let rep = similarity(&expert_1(), &expert_2(), &penalty()).unwrap();
        assert!((rep.dis - 0.23).abs() < 1e-12);
        assert!((rep.dis_max - 1.65).abs() < 1e-12);
        assert_eq!(rep.sim, 1.0 - rep.dis / rep.dis_max);
        assert!((rep.sim - 0.8606060606060606).abs() < 1e-12);
        assert_eq!(rep.tau, None);
    }

    #[test]
    fn similarity_crisp_fills_tau() {
        let id = CrispRanking::from_order(abcd(), &["A", "B", "C", "D"]).unwrap();
        let rev = id.reversed();
        let rep = similarity_crisp(&id, &rev, &penalty()).unwrap();
        assert_eq!(rep.tau, Some(-1.0));
        assert!((rep.dis - 1.3).abs() < 1e-12);
        assert!((rep.sim - (1.0 - 1.3 / 1.65)).abs() < 1e-12);
    }

    /// The normalisation constant is not a true maximum: a crisp pair that
    /// moves every object between two far-apart positions exceeds it, and
    /// similarity goes negative. The provable ceiling is twice the constant,
    /// since each position pair {i,j} contributes p(i,j) at most twice (once
    /// through cell (i,j), once through (j,i)).
    #[test]
    fn dissimilarity_can_exceed_the_normalisation_on_adversarial_pairs() {
        let p = penalty();
        let a = CrispRanking::from_positions(abcd(), &[4, 3, 1, 2]).unwrap();
        let b = CrispRanking::from_positions(abcd(), &[3, 4, 2, 1]).unwrap();
        let dis = dissimilarity(&a.to_fuzzy(), &b.to_fuzzy(), &p).unwrap();
        let dis_max = max_dissimilarity(&p).unwrap();
        assert!((dis - 2.6).abs() < 1e-12, "got {dis}");
        assert!(dis > dis_max);
        assert!(dis <= 2.0 * dis_max + 1e-12);
        let rep = similarity_crisp(&a, &b, &p).unwrap();
        assert!(rep.sim < 0.0, "not clamped: {}", rep.sim);
    }

    /// Exhaustive check of the provable ceiling for every 4-object crisp pair.
    #[test]
    fn dissimilarity_stays_within_twice_the_normalisation() {
        let p = penalty();
        let bound = 2.0 * max_dissimilarity(&p).unwrap() + 1e-12;
        let labels = abcd();
        let perms = permutations(4);
        for pa in &perms {
            let a = CrispRanking::from_positions(labels.clone(), pa).unwrap().to_fuzzy();
            for pb in &perms {
                let b = CrispRanking::from_positions(labels.clone(), pb).unwrap().to_fuzzy();
                let dis = dissimilarity(&a, &b, &p).unwrap();
                assert!(dis >= 0.0 && dis <= bound, "{pa:?} vs {pb:?}: {dis}");
            }
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![1]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for slot in 0..n {
                let mut q = p.clone();
                q.insert(slot, n);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn penalty_dimension_must_match() {
        let p3 = PenaltyMatrix::from_gaps(&[0.5, 0.5]).unwrap();
        assert!(matches!(
            dissimilarity(&expert_1(), &expert_2(), &p3),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
