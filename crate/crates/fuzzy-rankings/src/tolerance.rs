//! Numeric tolerances used by validation and comparisons.

use crate::error::{Error, Result};

/// Absolute tolerances: `eps_sum` for row and column sum checks, `eps_val`
/// for entrywise checks and cumulative-row comparisons.
///
/// Both must be strictly positive and at most 1e-3; anything looser would
/// let matrices through that are not meaningfully stochastic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    eps_sum: f64,
    eps_val: f64,
}

pub const DEFAULT_EPS: f64 = 1e-9;
const MAX_EPS: f64 = 1e-3;

impl ToleranceConfig {
    pub fn new(eps_sum: f64, eps_val: f64) -> Result<Self> {
        if !(eps_sum > 0.0 && eps_sum <= MAX_EPS) {
            return Err(Error::InvalidTolerance { name: "eps_sum", value: eps_sum });
        }
        if !(eps_val > 0.0 && eps_val <= MAX_EPS) {
            return Err(Error::InvalidTolerance { name: "eps_val", value: eps_val });
        }
        Ok(ToleranceConfig { eps_sum, eps_val })
    }

    /// Same tolerance for sums and entries; what the CLI `--tol` flag sets.
    pub fn uniform(eps: f64) -> Result<Self> {
        Self::new(eps, eps)
    }

    pub fn eps_sum(&self) -> f64 {
        self.eps_sum
    }

    pub fn eps_val(&self) -> f64 {
        self.eps_val
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig { eps_sum: DEFAULT_EPS, eps_val: DEFAULT_EPS }
    }
}
