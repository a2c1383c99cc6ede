//! Violation reporting for matrix validation.
//!
//! Validators collect every broken constraint instead of stopping at the
//! first, so a rejected file can be fixed in one pass. Row, column, and
//! position indices in violations are 1-based, matching how positions are
//! written everywhere else (position 1 is the best place).

use std::error;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// The matrix is not square: wrong row count (`row == 0`) or a ragged row.
    NonSquare { row: usize, len: usize, expected: usize },
    NegativeEntry { row: usize, col: usize, value: f64 },
    /// An entry exceeds 1 beyond tolerance.
    EntryRange { row: usize, col: usize, value: f64 },
    RowSum { row: usize, sum: f64 },
    ColumnSum { col: usize, sum: f64 },
    /// p[row][col] and p[col][row] disagree (reported once per pair, row < col).
    Asymmetry { row: usize, col: usize, value: f64, mirrored: f64 },
    NonzeroDiagonal { index: usize, value: f64 },
    /// Penalties are not additive along positions i < j < k.
    Additivity { i: usize, j: usize, k: usize, sum: f64, direct: f64 },
    /// A crisp matrix entry is not exactly 0 or 1.
    NotCrisp { row: usize, col: usize, value: f64 },
    /// A position column of a crisp matrix is used `count` times instead of once.
    PositionCount { col: usize, count: usize },
}

impl Violation {
    /// Stable machine-readable code, used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::NonSquare { .. } => "non-square",
            Violation::NegativeEntry { .. } => "negative-entry",
            Violation::EntryRange { .. } => "entry-range",
            Violation::RowSum { .. } => "row-sum",
            Violation::ColumnSum { .. } => "column-sum",
            Violation::Asymmetry { .. } => "asymmetry",
            Violation::NonzeroDiagonal { .. } => "nonzero-diagonal",
            Violation::Additivity { .. } => "additivity",
            Violation::NotCrisp { .. } => "not-crisp",
            Violation::PositionCount { .. } => "position-count",
        }
    }

    /// How far the offending quantity is from its required value.
    pub fn residual(&self) -> f64 {
        match self {
            Violation::NonSquare { len, expected, .. } => (*len as f64 - *expected as f64).abs(),
            Violation::NegativeEntry { value, .. } => -value,
            Violation::EntryRange { value, .. } => value - 1.0,
            Violation::RowSum { sum, .. } | Violation::ColumnSum { sum, .. } => (sum - 1.0).abs(),
            Violation::Asymmetry { value, mirrored, .. } => (value - mirrored).abs(),
            Violation::NonzeroDiagonal { value, .. } => value.abs(),
            Violation::Additivity { sum, direct, .. } => (sum - direct).abs(),
            Violation::NotCrisp { value, .. } => value.min(1.0 - value).abs(),
            Violation::PositionCount { count, .. } => (*count as f64 - 1.0).abs(),
        }
    }

    /// 1-based row index, where one applies.
    pub fn row(&self) -> Option<usize> {
        match self {
            Violation::NonSquare { row, .. } if *row > 0 => Some(*row),
            Violation::NegativeEntry { row, .. }
            | Violation::EntryRange { row, .. }
            | Violation::RowSum { row, .. }
            | Violation::Asymmetry { row, .. }
            | Violation::NotCrisp { row, .. } => Some(*row),
            Violation::NonzeroDiagonal { index, .. } => Some(*index),
            _ => None,
        }
    }

    /// 1-based column index, where one applies.
    pub fn col(&self) -> Option<usize> {
        match self {
            Violation::NegativeEntry { col, .. }
            | Violation::EntryRange { col, .. }
            | Violation::ColumnSum { col, .. }
            | Violation::Asymmetry { col, .. }
            | Violation::NotCrisp { col, .. }
            | Violation::PositionCount { col, .. } => Some(*col),
            Violation::NonzeroDiagonal { index, .. } => Some(*index),
            _ => None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonSquare { row: 0, len, expected } => {
                write!(f, "matrix has {len} rows, expected {expected}")
            }
            Violation::NonSquare { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            Violation::NegativeEntry { row, col, value } => {
                write!(f, "entry ({row},{col}) is negative ({value})")
            }
            Violation::EntryRange { row, col, value } => {
                write!(f, "entry ({row},{col}) exceeds 1 ({value})")
            }
            Violation::RowSum { row, sum } => write!(f, "row {row} sums to {sum}"),
            Violation::ColumnSum { col, sum } => write!(f, "column {col} sums to {sum}"),
            Violation::Asymmetry { row, col, value, mirrored } => {
                write!(f, "entries ({row},{col})={value} and ({col},{row})={mirrored} differ")
            }
            Violation::NonzeroDiagonal { index, value } => {
                write!(f, "diagonal entry ({index},{index}) is {value}, expected 0")
            }
            Violation::Additivity { i, j, k, sum, direct } => write!(
                f,
                "p({i},{j}) + p({j},{k}) = {sum} but p({i},{k}) = {direct}"
            ),
            Violation::NotCrisp { row, col, value } => {
                write!(f, "entry ({row},{col}) is {value}, expected exactly 0 or 1")
            }
            Violation::PositionCount { col, count } => {
                write!(f, "position {col} is assigned {count} times, expected once")
            }
        }
    }
}

/// Constructor rejection carrying every violated constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationError {
    violations: Vec<Violation>,
}

impl ValidationError {
    pub fn new(violations: Vec<Violation>) -> Self {
        debug_assert!(!violations.is_empty());
        ValidationError { violations }
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn into_violations(self) -> Vec<Violation> {
        self.violations
    }

    pub fn contains_code(&self, code: &str) -> bool {
        self.violations.iter().any(|v| v.code() == code)
    }
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "validation failed: ")?;
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl error::Error for ValidationError {}
