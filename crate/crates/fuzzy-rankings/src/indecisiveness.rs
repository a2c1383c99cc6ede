//! Entropy-based indecisiveness of fuzzy rankings.
//!
//! Each row of a fuzzy ranking is a distribution over positions; its Shannon
//! entropy (base 2) measures how undecided the ranking is about that object.
//! Summing over rows gives the ranking's indecisiveness, and dividing by the
//! maximum `n * log2(n)` (every row uniform) gives an index in [0, 1]:
//! 0 for crisp rankings, 1 for the uniform ranking.

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyRanking;
use crate::labels::ObjectLabels;
use crate::tolerance::ToleranceConfig;

/// Mass at or below this contributes a zero entropy term, the p log p limit.
const ZERO_MASS: f64 = 1e-15;

fn entropy_unchecked(dist: &[f64]) -> f64 {
    dist.iter()
        .map(|&p| if p <= ZERO_MASS { 0.0 } else { -p * p.log2() })
        .sum()
}

/// Shannon entropy (base 2) of a probability distribution. The input must
/// have nonnegative entries summing to 1 within tolerance.
pub fn entropy(dist: &[f64], tol: &ToleranceConfig) -> Result<f64> {
    if dist.is_empty() {
        return Err(Error::NotADistribution { detail: "no entries".to_string() });
    }
    for (i, &p) in dist.iter().enumerate() {
        if !p.is_finite() || p < -tol.eps_val() {
            return Err(Error::NotADistribution { detail: format!("entry {} is {}", i + 1, p) });
        }
    }
    let sum: f64 = dist.iter().sum();
    if (sum - 1.0).abs() > tol.eps_sum() {
        return Err(Error::NotADistribution { detail: format!("sum is {sum}") });
    }
    Ok(entropy_unchecked(dist))
}

/// Indecisiveness of a ranking: the sum of its row entropies. 0 for crisp
/// rankings, up to `n * log2(n)` for the uniform ranking.
pub fn indecisiveness(f: &FuzzyRanking) -> f64 {
    (0..f.n()).map(|i| entropy_unchecked(f.entries().row(i))).sum()
}

/// Largest possible indecisiveness for `n` objects: `n * log2(n)`.
pub fn max_indecisiveness(n: usize) -> f64 {
    n as f64 * (n as f64).log2()
}

/// Indecisiveness normalised into [0, 1]. A single object admits only one
/// ranking, so the index is undefined there.
///
/// The ratio is clamped to [0, 1] only against floating-point residue: the
/// uniform ranking's entropy sum can land one unit in the last place above
/// `max_indecisiveness(n)` (it does for n = 7).
pub fn index_of_indecisiveness(f: &FuzzyRanking) -> Result<f64> {
    if f.n() < 2 {
        return Err(Error::SingleObject);
    }
    let mut ii = indecisiveness(f) / max_indecisiveness(f.n());
    let eps = crate::tolerance::DEFAULT_EPS;
    if ii > 1.0 && ii <= 1.0 + eps {
        ii = 1.0;
    } else if ii < 0.0 && ii >= -eps {
        ii = 0.0;
    }
    Ok(ii)
}

/// Row entropies and the derived indecisiveness figures of one ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct IndecisivenessReport {
    labels: ObjectLabels,
    per_row: Vec<f64>,
    pub ind: f64,
    pub ind_max: f64,
    /// ind / ind_max.
    pub ii: f64,
}

impl IndecisivenessReport {
    pub fn labels(&self) -> &ObjectLabels {
        &self.labels
    }

    /// Entropy of each object's row, in label order.
    pub fn per_row(&self) -> &[f64] {
        &self.per_row
    }
}

pub fn report(f: &FuzzyRanking) -> Result<IndecisivenessReport> {
    if f.n() < 2 {
        return Err(Error::SingleObject);
    }
    let per_row: Vec<f64> = (0..f.n()).map(|i| entropy_unchecked(f.entries().row(i))).collect();
    let ind = per_row.iter().sum();
    let ind_max = max_indecisiveness(f.n());
    let ii = index_of_indecisiveness(f)?;
    Ok(IndecisivenessReport { labels: f.labels().clone(), per_row, ind, ind_max, ii })
}

/// Normalised aggregation weights favouring decisive rankings: each weight is
/// proportional to one minus that ranking's indecisiveness index. If every
/// ranking is (numerically) fully indecisive the weights fall back to
/// uniform.
pub fn decisiveness_weights(rankings: &[FuzzyRanking]) -> Result<Vec<f64>> {
    if rankings.is_empty() {
        return Err(Error::EmptyInput);
    }
    let labels = rankings[0].labels();
    if rankings.iter().any(|f| f.labels() != labels) {
        return Err(Error::LabelMismatch);
    }
    let mut raw = Vec::with_capacity(rankings.len());
    for f in rankings {
        raw.push((1.0 - index_of_indecisiveness(f)?).max(0.0));
    }
    let total: f64 = raw.iter().sum();
    if total < 1e-12 {
        let w = 1.0 / rankings.len() as f64;
        return Ok(vec![w; rankings.len()]);
    }
    Ok(raw.into_iter().map(|w| w / total).collect())
}
