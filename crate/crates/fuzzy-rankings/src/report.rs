//! The machine-readable analysis report emitted by the command-line tool.
//!
//! Every command produces the same envelope: what ran, under which mode and
//! tolerances, which input files went in (with content digests), the
//! command-specific result, and any warnings or notes. Text output is derived
//! from the same data, so the JSON form is the one to consume downstream.

use serde::Serialize;

use crate::fuzzy::Mode;
use crate::io::LoadedMatrix;
use crate::tolerance::ToleranceConfig;
use crate::validation::Violation;

#[derive(Debug, Clone, Serialize)]
pub struct ToleranceInfo {
    pub eps_sum: f64,
    pub eps_val: f64,
}

/// One input file: path as given, expected kind, digest of canonical content.
#[derive(Debug, Clone, Serialize)]
pub struct InputRecord {
    pub path: String,
    pub kind: String,
    pub digest: String,
}

impl From<&LoadedMatrix> for InputRecord {
    fn from(m: &LoadedMatrix) -> Self {
        InputRecord {
            path: m.path.display().to_string(),
            kind: m.kind.as_str().to_string(),
            digest: m.digest.clone(),
        }
    }
}

/// A non-fatal finding, typically column drift of a row-stochastic matrix.
#[derive(Debug, Clone, Serialize)]
pub struct Warning {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub col: Option<usize>,
    pub residual: f64,
}

impl Warning {
    pub fn from_violation(v: &Violation, path: &std::path::Path) -> Self {
        Warning {
            code: v.code().to_string(),
            message: format!("{}: {v}", path.display()),
            row: v.row(),
            col: v.col(),
            residual: v.residual(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub command: String,
    pub mode: String,
    pub tolerance: ToleranceInfo,
    pub inputs: Vec<InputRecord>,
    pub result: serde_json::Value,
    pub warnings: Vec<Warning>,
    /// Free-form remarks, e.g. known divergences from published figures.
    pub notes: Vec<String>,
}

impl AnalysisReport {
    pub fn new(command: &str, mode: Mode, tol: &ToleranceConfig) -> Self {
        AnalysisReport {
            command: command.to_string(),
            mode: mode.to_string(),
            tolerance: ToleranceInfo { eps_sum: tol.eps_sum(), eps_val: tol.eps_val() },
            inputs: Vec::new(),
            result: serde_json::Value::Null,
            warnings: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn record_input(&mut self, m: &LoadedMatrix) {
        self.inputs.push(InputRecord::from(m));
        for v in &m.warnings {
            self.warnings.push(Warning::from_violation(v, &m.path));
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Formats with `digits` significant digits in plain decimal notation, the
/// precision used for all numbers in text output.
pub fn format_sig(x: f64, digits: usize) -> String {
    debug_assert!(digits > 0);
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.*}", digits - 1, 0.0);
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}
