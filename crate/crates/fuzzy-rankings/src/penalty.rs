//! Penalty matrices: how much it costs to interchange two positions.
//!
//! A penalty matrix is symmetric with a zero diagonal, entries in [0, 1],
//! and additive along positions: p(i,k) = p(i,j) + p(j,k) for i < j < k.
//! Additivity means the whole matrix is determined by the n-1 adjacent
//! gaps p(1,2), p(2,3), ..., which is the intended way to build one.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::tolerance::ToleranceConfig;
use crate::validation::{ValidationError, Violation};

#[derive(Debug, Clone, PartialEq)]
pub struct PenaltyMatrix {
    entries: SquareMatrix,
}

impl PenaltyMatrix {
    /// Builds the (k+1)×(k+1) penalty matrix from k adjacent position gaps.
    /// Entry (i, j) is the sum of the gaps between positions i and j, so the
    /// additivity invariant holds by construction.
    pub fn from_gaps(gaps: &[f64]) -> Result<Self> {
        for (i, &g) in gaps.iter().enumerate() {
            if g < 0.0 {
                return Err(Error::NegativeGap { index: i, value: g });
            }
        }
        let total: f64 = gaps.iter().sum();
        if total > 1.0 + 1e-12 {
            return Err(Error::RangeOverflow { total });
        }
        let n = gaps.len() + 1;
        let mut m = SquareMatrix::zeros(n);
        for i in 0..n {
            let mut acc = 0.0;
            for j in i + 1..n {
                acc += gaps[j - 1];
                m.set(i, j, acc);
                m.set(j, i, acc);
            }
        }
        Ok(PenaltyMatrix { entries: m })
    }

    /// Validates an explicit matrix: square, symmetric within `eps_val`,
    /// zero diagonal, entries in [0, 1], additive along positions.
    pub fn new(rows: Vec<Vec<f64>>, tol: &ToleranceConfig) -> std::result::Result<Self, ValidationError> {
        let n = rows.len();
        let mut violations = Vec::new();
        let entries = match SquareMatrix::from_rows(&rows) {
            Ok(m) => m,
            Err(d) => {
                violations.push(Violation::NonSquare { row: d.row, len: d.len, expected: d.expected });
                return Err(ValidationError::new(violations));
            }
        };
        let eps = tol.eps_val();
        for i in 0..n {
            let d = entries.get(i, i);
            if d.abs() > eps {
                violations.push(Violation::NonzeroDiagonal { index: i + 1, value: d });
            }
            for j in 0..n {
                let v = entries.get(i, j);
                if v < -eps {
                    violations.push(Violation::NegativeEntry { row: i + 1, col: j + 1, value: v });
                } else if v > 1.0 + eps {
                    violations.push(Violation::EntryRange { row: i + 1, col: j + 1, value: v });
                }
                if i < j {
                    let w = entries.get(j, i);
                    if (v - w).abs() > eps {
                        violations.push(Violation::Asymmetry {
                            row: i + 1,
                            col: j + 1,
                            value: v,
                            mirrored: w,
                        });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let sum = entries.get(i, j) + entries.get(j, k);
                    let direct = entries.get(i, k);
                    if (sum - direct).abs() > eps {
                        violations.push(Violation::Additivity {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            sum,
                            direct,
                        });
                    }
                }
            }
        }
        if violations.is_empty() {
            Ok(PenaltyMatrix { entries })
        } else {
            Err(ValidationError::new(violations))
        }
    }

    pub fn zeros(n: usize) -> Self {
        PenaltyMatrix { entries: SquareMatrix::zeros(n) }
    }

    pub fn n(&self) -> usize {
        self.entries.n()
    }

    pub fn entries(&self) -> &SquareMatrix {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries.get(row, col)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.rows().all(|r| r.iter().all(|&v| v == 0.0))
    }
}
