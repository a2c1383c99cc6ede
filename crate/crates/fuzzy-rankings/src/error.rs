//! Operation errors shared across the crate.

use std::error;
use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// No data where at least one element is required (labels, rankings, ...).
    EmptyInput,
    /// A label is empty after trimming.
    EmptyLabel { index: usize },
    DuplicateLabel(String),
    UnknownLabel(String),
    /// A sequence has the wrong length for the object set.
    LengthMismatch { expected: usize, got: usize },
    /// Two inputs carry different object label sets.
    LabelMismatch,
    /// Two matrices have different sizes.
    DimensionMismatch { left: usize, right: usize },
    /// An operation requires its inputs to share a validation mode.
    ModeMismatch,
    /// The measure is undefined for a single object.
    SingleObject,
    /// A pairwise comparison was asked for an object against itself.
    SameObject(String),
    /// A position occurs twice when building a crisp ranking from positions.
    DuplicatePosition { position: usize },
    PositionOutOfRange { position: usize, n: usize },
    NegativeGap { index: usize, value: f64 },
    /// Adjacent gaps accumulate past 1, so some penalty entry would leave [0, 1].
    RangeOverflow { total: f64 },
    /// All penalty entries are zero; maximal dissimilarity would be zero.
    DegeneratePenalty,
    /// The operation needs a ranking validated in strict (doubly stochastic) mode.
    NotDoublyStochastic,
    /// Decomposition could not drive the residual below tolerance.
    NoPerfectMatching { residual: f64 },
    NotADistribution { detail: String },
    WeightLengthMismatch { expected: usize, got: usize },
    NegativeWeight { index: usize, value: f64 },
    WeightNotNormalized { sum: f64 },
    InvalidTolerance { name: &'static str, value: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "input is empty"),
            Error::EmptyLabel { index } => write!(f, "label {} is empty", index + 1),
            Error::DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            Error::UnknownLabel(l) => write!(f, "unknown label {l:?}"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "expected {expected} elements, got {got}")
            }
            Error::LabelMismatch => write!(f, "inputs have different object labels"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "matrix sizes differ: {left} vs {right}")
            }
            Error::ModeMismatch => write!(f, "inputs were validated in different modes"),
            Error::SingleObject => write!(f, "undefined for a single object"),
            Error::SameObject(l) => write!(f, "cannot compare object {l:?} with itself"),
            Error::DuplicatePosition { position } => {
                write!(f, "position {position} assigned to more than one object")
            }
            Error::PositionOutOfRange { position, n } => {
                write!(f, "position {position} outside 1..={n}")
            }
            Error::NegativeGap { index, value } => {
                write!(f, "gap {} is negative ({value})", index + 1)
            }
            Error::RangeOverflow { total } => {
                write!(f, "gaps sum to {total}, penalties would leave [0, 1]")
            }
            Error::DegeneratePenalty => write!(f, "penalty matrix is all zeros"),
            Error::NotDoublyStochastic => {
                write!(f, "operation requires a strict-mode (doubly stochastic) ranking")
            }
            Error::NoPerfectMatching { residual } => write!(
                f,
                "decomposition stalled with residual {residual:e}; input is numerically broken"
            ),
            Error::NotADistribution { detail } => write!(f, "not a distribution: {detail}"),
            Error::WeightLengthMismatch { expected, got } => {
                write!(f, "expected {expected} weights, got {got}")
            }
            Error::NegativeWeight { index, value } => {
                write!(f, "weight {} is negative ({value})", index + 1)
            }
            Error::WeightNotNormalized { sum } => {
                write!(f, "weights sum to {sum}, expected 1")
            }
            Error::InvalidTolerance { name, value } => {
                write!(f, "{name} must lie in (0, 1e-3], got {value}")
            }
        }
    }
}

impl error::Error for Error {}
