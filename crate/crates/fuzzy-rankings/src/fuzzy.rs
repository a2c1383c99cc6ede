//! Fuzzy rankings: row-stochastic membership matrices over positions.
//!
//! Entry (i, j) is the degree to which object i occupies position j+1.
//! Two validation modes exist because published examples routinely use
//! matrices whose rows are sound but whose columns drift off 1:
//!
//! * [`Mode::Strict`]: rows and columns both sum to 1 (doubly stochastic).
//! * [`Mode::RowStochastic`]: rows only; column sums are left free.

use std::fmt;

use crate::crisp::CrispRanking;
use crate::labels::ObjectLabels;
use crate::matrix::SquareMatrix;
use crate::tolerance::ToleranceConfig;
use crate::validation::{ValidationError, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Strict,
    RowStochastic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Strict => write!(f, "strict"),
            Mode::RowStochastic => write!(f, "row"),
        }
    }
}

/// A validated fuzzy ranking. Entries are kept verbatim as given; validation
/// only decides acceptance, it never rescales.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyRanking {
    labels: ObjectLabels,
    entries: SquareMatrix,
    mode: Mode,
}

impl FuzzyRanking {
    /// Validates `rows` against `mode` and wraps them. On rejection, every
    /// violated constraint is reported with its indices and residual.
    pub fn new(
        labels: ObjectLabels,
        rows: Vec<Vec<f64>>,
        mode: Mode,
        tol: &ToleranceConfig,
    ) -> Result<Self, ValidationError> {
        let violations = check_entries(labels.len(), &rows, mode, tol);
        if !violations.is_empty() {
            return Err(ValidationError::new(violations));
        }
        let entries = SquareMatrix::from_rows(&rows).expect("shape checked above");
        Ok(FuzzyRanking { labels, entries, mode })
    }

    /// For results that are stochastic by construction (means, products,
    /// crisp matrix views). Debug builds re-check.
    pub(crate) fn from_parts_unchecked(labels: ObjectLabels, entries: SquareMatrix, mode: Mode) -> Self {
        debug_assert_eq!(labels.len(), entries.n());
        debug_assert!(
            check_matrix(&entries, mode, &ToleranceConfig::default()).is_empty(),
            "internal construction broke stochasticity"
        );
        FuzzyRanking { labels, entries, mode }
    }

    /// The maximally indecisive ranking: every entry 1/n.
    pub fn uniform(labels: ObjectLabels) -> Self {
        let n = labels.len();
        let mut m = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, 1.0 / n as f64);
            }
        }
        FuzzyRanking { labels, entries: m, mode: Mode::Strict }
    }

    pub fn labels(&self) -> &ObjectLabels {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn entries(&self) -> &SquareMatrix {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries.get(row, col)
    }

    pub fn row(&self, row: usize) -> &[f64] {
        self.entries.row(row)
    }

    /// Column-sum violations this matrix would add under strict mode.
    /// Empty for strict-validated rankings; for row-stochastic ones this is
    /// what warnings are made of.
    pub fn strict_violations(&self, tol: &ToleranceConfig) -> Vec<Violation> {
        let mut out = Vec::new();
        for (j, sum) in self.entries.col_sums().into_iter().enumerate() {
            if (sum - 1.0).abs() > tol.eps_sum() {
                out.push(Violation::ColumnSum { col: j + 1, sum });
            }
        }
        out
    }

    /// Reads the ranking back as crisp if it is exactly a permutation matrix.
    pub fn as_crisp(&self) -> Option<CrispRanking> {
        CrispRanking::from_matrix(self.labels.clone(), &self.entries.to_rows()).ok()
    }
}

fn check_entries(n: usize, rows: &[Vec<f64>], mode: Mode, tol: &ToleranceConfig) -> Vec<Violation> {
    let mut violations = Vec::new();
    if rows.len() != n {
        violations.push(Violation::NonSquare { row: 0, len: rows.len(), expected: n });
        return violations;
    }
    let mut ragged = false;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            violations.push(Violation::NonSquare { row: i + 1, len: row.len(), expected: n });
            ragged = true;
        }
    }
    if ragged {
        return violations;
    }
    let m = SquareMatrix::from_rows(rows).expect("rows checked rectangular");
    violations.extend(check_matrix(&m, mode, tol));
    violations
}

fn check_matrix(m: &SquareMatrix, mode: Mode, tol: &ToleranceConfig) -> Vec<Violation> {
    let mut violations = Vec::new();
    let n = m.n();
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if v < -tol.eps_val() {
                violations.push(Violation::NegativeEntry { row: i + 1, col: j + 1, value: v });
            } else if v > 1.0 + tol.eps_val() {
                violations.push(Violation::EntryRange { row: i + 1, col: j + 1, value: v });
            }
        }
    }
    for (i, sum) in m.row_sums().into_iter().enumerate() {
        if (sum - 1.0).abs() > tol.eps_sum() {
            violations.push(Violation::RowSum { row: i + 1, sum });
        }
    }
    if mode == Mode::Strict {
        for (j, sum) in m.col_sums().into_iter().enumerate() {
            if (sum - 1.0).abs() > tol.eps_sum() {
                violations.push(Violation::ColumnSum { col: j + 1, sum });
            }
        }
    }
    violations
}

/// Ordinary matrix product of two strict-mode rankings. The set of doubly
/// stochastic matrices is closed under products, so the result is again
/// strict within accumulated rounding.
pub fn product(a: &FuzzyRanking, b: &FuzzyRanking) -> crate::error::Result<FuzzyRanking> {
    if a.n() != b.n() {
        return Err(crate::error::Error::DimensionMismatch { left: a.n(), right: b.n() });
    }
    if a.mode() != Mode::Strict || b.mode() != Mode::Strict {
        return Err(crate::error::Error::ModeMismatch);
    }
    let entries = a.entries().matmul(b.entries());
    Ok(FuzzyRanking::from_parts_unchecked(a.labels().clone(), entries, Mode::Strict))
}
