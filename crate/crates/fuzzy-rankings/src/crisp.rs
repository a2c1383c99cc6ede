//! Crisp (classical) rankings: every object gets exactly one position.

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRanking, Mode};
use crate::labels::ObjectLabels;
use crate::matrix::SquareMatrix;
use crate::validation::{ValidationError, Violation};

/// A bijection between objects and positions 1..=n, position 1 being best.
///
/// The matrix view is the permutation matrix with a 1 in row `i`, column
/// `position(i) - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispRanking {
    labels: ObjectLabels,
    /// 1-based position per object index.
    positions: Vec<usize>,
}

impl CrispRanking {
    /// Builds a ranking from labels listed best to worst.
    pub fn from_order(labels: ObjectLabels, order: &[&str]) -> Result<Self> {
        let n = labels.len();
        if order.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: order.len() });
        }
        let mut positions = vec![0usize; n];
        for (place, label) in order.iter().enumerate() {
            let idx = labels
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel((*label).to_string()))?;
            if positions[idx] != 0 {
                return Err(Error::DuplicateLabel((*label).to_string()));
            }
            positions[idx] = place + 1;
        }
        Ok(CrispRanking { labels, positions })
    }

    /// Builds a ranking from 1-based positions, one per object in label order.
    pub fn from_positions(labels: ObjectLabels, positions: &[usize]) -> Result<Self> {
        let n = labels.len();
        if positions.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: positions.len() });
        }
        let mut seen = vec![false; n];
        for &p in positions {
            if p < 1 || p > n {
                return Err(Error::PositionOutOfRange { position: p, n });
            }
            if seen[p - 1] {
                return Err(Error::DuplicatePosition { position: p });
            }
            seen[p - 1] = true;
        }
        Ok(CrispRanking { labels, positions: positions.to_vec() })
    }

    /// Accepts a matrix only if it is exactly a permutation matrix: every
    /// entry 0 or 1 bitwise, every position used once.
    pub fn from_matrix(labels: ObjectLabels, rows: &[Vec<f64>]) -> std::result::Result<Self, ValidationError> {
        let n = labels.len();
        let mut violations = Vec::new();
        if rows.len() != n {
            violations.push(Violation::NonSquare { row: 0, len: rows.len(), expected: n });
            return Err(ValidationError::new(violations));
        }
        let mut positions = vec![0usize; n];
        let mut counts = vec![0usize; n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                violations.push(Violation::NonSquare { row: i + 1, len: row.len(), expected: n });
                continue;
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 1.0 {
                    positions[i] = j + 1;
                    counts[j] += 1;
                } else if v != 0.0 {
                    violations.push(Violation::NotCrisp { row: i + 1, col: j + 1, value: v });
                }
            }
        }
        if violations.is_empty() {
            for (j, &c) in counts.iter().enumerate() {
                if c != 1 {
                    violations.push(Violation::PositionCount { col: j + 1, count: c });
                }
            }
        }
        if violations.is_empty() {
            Ok(CrispRanking { labels, positions })
        } else {
            Err(ValidationError::new(violations))
        }
    }

    pub fn labels(&self) -> &ObjectLabels {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// 1-based position of the object at `index`.
    pub fn position(&self, index: usize) -> usize {
        self.positions[index]
    }

    pub fn position_of_label(&self, label: &str) -> Option<usize> {
        self.labels.index_of(label).map(|i| self.positions[i])
    }

    /// Object indices best to worst.
    pub fn order(&self) -> Vec<usize> {
        let mut by_place = vec![0usize; self.n()];
        for (obj, &p) in self.positions.iter().enumerate() {
            by_place[p - 1] = obj;
        }
        by_place
    }

    /// Labels best to worst.
    pub fn order_labels(&self) -> Vec<&str> {
        self.order().into_iter().map(|i| self.labels.get(i)).collect()
    }

    pub fn matrix(&self) -> SquareMatrix {
        let n = self.n();
        let mut m = SquareMatrix::zeros(n);
        for (obj, &p) in self.positions.iter().enumerate() {
            m.set(obj, p - 1, 1.0);
        }
        m
    }

    /// The same ranking as a strict-mode fuzzy ranking (its matrix view).
    pub fn to_fuzzy(&self) -> FuzzyRanking {
        FuzzyRanking::from_parts_unchecked(self.labels.clone(), self.matrix(), Mode::Strict)
    }

    /// The ranking read back to front.
    pub fn reversed(&self) -> CrispRanking {
        let n = self.n();
        let positions = self.positions.iter().map(|&p| n + 1 - p).collect();
        CrispRanking { labels: self.labels.clone(), positions }
    }
}
