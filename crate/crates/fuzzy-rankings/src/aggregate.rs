//! Aggregating several rankings into one group ranking.
//!
//! The entrywise weighted mean of row-stochastic matrices is row-stochastic,
//! and the mean of doubly stochastic matrices is doubly stochastic, so a
//! panel of crisp or fuzzy rankings aggregates into a fuzzy group ranking
//! with no renormalisation step.

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRanking, Mode};
use crate::indecisiveness::decisiveness_weights;
use crate::matrix::SquareMatrix;

/// Nonnegative weights summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
}

impl WeightVector {
    /// Tolerance on the weight sum; weights are usually typed in by hand, so
    /// this is looser than the matrix tolerances.
    const SUM_EPS: f64 = 1e-6;

    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (i, &w) in weights.iter().enumerate() {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::NegativeWeight { index: i + 1, value: w });
            }
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > Self::SUM_EPS {
            return Err(Error::WeightNotNormalized { sum });
        }
        Ok(WeightVector { weights })
    }

    pub fn uniform(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyInput);
        }
        Ok(WeightVector { weights: vec![1.0 / m as f64; m] })
    }

    /// Wraps weights already known to be normalised, e.g. produced by
    /// [`decisiveness_weights`].
    pub(crate) fn from_normalized_unchecked(weights: Vec<f64>) -> Self {
        debug_assert!((weights.iter().sum::<f64>() - 1.0).abs() <= Self::SUM_EPS);
        WeightVector { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, index: usize) -> f64 {
        self.weights[index]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }
}

/// Entrywise weighted mean of rankings over the same objects. `None` weights
/// mean the plain arithmetic mean. The result is strict only when every input
/// is.
pub fn mean(rankings: &[FuzzyRanking], weights: Option<&WeightVector>) -> Result<FuzzyRanking> {
    if rankings.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(w) = weights {
        if w.len() != rankings.len() {
            return Err(Error::WeightLengthMismatch { expected: rankings.len(), got: w.len() });
        }
    }
    let labels = rankings[0].labels();
    if rankings.iter().any(|f| f.labels() != labels) {
        return Err(Error::LabelMismatch);
    }
    let n = rankings[0].n();
    let uniform = 1.0 / rankings.len() as f64;
    let mut acc = SquareMatrix::zeros(n);
    for (k, f) in rankings.iter().enumerate() {
        let w = weights.map_or(uniform, |w| w.get(k));
        acc.add_scaled(f.entries(), w);
    }
    let mode = if rankings.iter().all(|f| f.mode() == Mode::Strict) {
        Mode::Strict
    } else {
        Mode::RowStochastic
    };
    Ok(FuzzyRanking::from_parts_unchecked(labels.clone(), acc, mode))
}

/// Aggregates with weights derived from each ranking's decisiveness, so
/// near-uniform rankings contribute less. Returns the group ranking together
/// with the weights used.
pub fn mean_weighted_by_decisiveness(rankings: &[FuzzyRanking]) -> Result<(FuzzyRanking, WeightVector)> {
    let weights = WeightVector::from_normalized_unchecked(decisiveness_weights(rankings)?);
    let group = mean(rankings, Some(&weights))?;
    Ok((group, weights))
}
