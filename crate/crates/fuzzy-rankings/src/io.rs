//! Reading and writing matrices as CSV and JSON files.
//!
//! The CSV layout is one header line `object,1,2,...,n`, then one line per
//! object: its label followed by n values. Fields are comma-separated with no
//! quoting, so labels must not contain commas. The same layout holds for
//! penalty matrices, whose "objects" are the positions themselves.
//!
//! JSON files hold `{"labels": [...], "entries": [[...], ...]}`. A path
//! ending in `.json` is read as JSON, anything else as CSV.
//!
//! Canonical serialization renders every value with Rust's shortest
//! round-trip float formatting and `\n` line endings; the digest of a file is
//! the SHA-256 of its canonical CSV, so two files with the same parsed
//! content digest identically no matter how their text was laid out.

use std::error;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::crisp::CrispRanking;
use crate::error::Error;
use crate::fuzzy::{FuzzyRanking, Mode};
use crate::labels::ObjectLabels;
use crate::penalty::PenaltyMatrix;
use crate::tolerance::ToleranceConfig;
use crate::validation::{ValidationError, Violation};

/// What a matrix file is expected to contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Fuzzy,
    Crisp,
    Penalty,
}

impl MatrixKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MatrixKind::Fuzzy => "fuzzy",
            MatrixKind::Crisp => "crisp",
            MatrixKind::Penalty => "penalty",
        }
    }
}

/// A parsed matrix file: labels, raw values, and the digest of its canonical
/// form. No semantic checks have run yet.
#[derive(Debug, Clone, PartialEq)]
pub struct RawMatrix {
    pub labels: ObjectLabels,
    pub rows: Vec<Vec<f64>>,
}

impl RawMatrix {
    pub fn digest(&self) -> String {
        digest_str(&to_canonical_csv(&self.labels, &self.rows))
    }
}

/// File-level failure: unreadable, malformed, or semantically rejected.
#[derive(Debug)]
pub enum IoError {
    /// The file could not be read at all.
    Read { path: PathBuf, source: std::io::Error },
    /// The text is not in the expected format. `line` is 1-based, 0 when no
    /// line applies.
    Parse { path: PathBuf, line: usize, detail: String },
    /// The file parsed but its content violates the matrix constraints.
    Validation { path: PathBuf, source: ValidationError },
    /// The file parsed but a construction rule rejected it (bad labels,
    /// positions out of range, ...).
    Construct { path: PathBuf, source: Error },
}

impl IoError {
    /// Violations carried by a validation rejection, if that is what this is.
    pub fn violations(&self) -> Option<&[Violation]> {
        match self {
            IoError::Validation { source, .. } => Some(source.violations()),
            _ => None,
        }
    }

    pub fn path(&self) -> &Path {
        match self {
            IoError::Read { path, .. }
            | IoError::Parse { path, .. }
            | IoError::Validation { path, .. }
            | IoError::Construct { path, .. } => path,
        }
    }
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Read { path, source } => write!(f, "{}: {source}", path.display()),
            IoError::Parse { path, line: 0, detail } => {
                write!(f, "{}: {detail}", path.display())
            }
            IoError::Parse { path, line, detail } => {
                write!(f, "{}:{line}: {detail}", path.display())
            }
            IoError::Validation { path, source } => write!(f, "{}: {source}", path.display()),
            IoError::Construct { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl error::Error for IoError {
    fn source(&self) -> Option<&(dyn error::Error + 'static)> {
        match self {
            IoError::Read { source, .. } => Some(source),
            IoError::Validation { source, .. } => Some(source),
            IoError::Construct { source, .. } => Some(source),
            IoError::Parse { .. } => None,
        }
    }
}

pub type IoResult<T> = std::result::Result<T, IoError>;

/// Reads a matrix file, dispatching on the `.json` extension.
pub fn read_raw(path: &Path) -> IoResult<RawMatrix> {
    let text = fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_path_buf(), source })?;
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        parse_json(&text, path)
    } else {
        parse_csv(&text, path)
    }
}

fn parse_err(path: &Path, line: usize, detail: impl Into<String>) -> IoError {
    IoError::Parse { path: path.to_path_buf(), line, detail: detail.into() }
}

fn parse_value(field: &str, path: &Path, line: usize) -> IoResult<f64> {
    let v: f64 = field
        .trim()
        .parse()
        .map_err(|_| parse_err(path, line, format!("not a number: {field:?}")))?;
    if !v.is_finite() {
        return Err(parse_err(path, line, format!("non-finite value: {field:?}")));
    }
    Ok(v)
}

/// Parses the CSV matrix layout. Lines are split on `\n` with an optional
/// trailing `\r`; blank lines are only allowed at the end of the file.
pub fn parse_csv(text: &str, path: &Path) -> IoResult<RawMatrix> {
    let mut lines: Vec<(usize, &str)> = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .collect();
    while lines.last().is_some_and(|(_, l)| l.trim().is_empty()) {
        lines.pop();
    }
    if lines.is_empty() {
        return Err(parse_err(path, 0, "file is empty"));
    }
    if let Some((no, _)) = lines.iter().find(|(_, l)| l.trim().is_empty()) {
        return Err(parse_err(path, *no, "blank line inside the table"));
    }

    let (header_no, header) = lines[0];
    let head_fields: Vec<&str> = header.split(',').map(str::trim).collect();
    if head_fields.len() < 2 || head_fields[0] != "object" {
        return Err(parse_err(
            path,
            header_no,
            format!("header must be \"object,1,...,n\", got {header:?}"),
        ));
    }
    let n = head_fields.len() - 1;
    for (k, field) in head_fields.iter().enumerate().skip(1) {
        if *field != k.to_string() {
            return Err(parse_err(
                path,
                header_no,
                format!("header column {} must be \"{}\", got {:?}", k + 1, k, field),
            ));
        }
    }

    let data = &lines[1..];
    if data.len() != n {
        return Err(parse_err(
            path,
            0,
            format!("expected {n} data rows to match the header, got {}", data.len()),
        ));
    }
    let mut labels = Vec::with_capacity(n);
    let mut rows = Vec::with_capacity(n);
    for (no, line) in data {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != n + 1 {
            return Err(parse_err(
                path,
                *no,
                format!("expected {} fields, got {}", n + 1, fields.len()),
            ));
        }
        labels.push(fields[0].trim().to_string());
        let mut row = Vec::with_capacity(n);
        for field in &fields[1..] {
            row.push(parse_value(field, path, *no)?);
        }
        rows.push(row);
    }
    let labels = ObjectLabels::new(labels)
        .map_err(|source| IoError::Construct { path: path.to_path_buf(), source })?;
    Ok(RawMatrix { labels, rows })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonMatrix {
    labels: Vec<String>,
    entries: Vec<Vec<f64>>,
}

/// Parses the JSON matrix layout `{"labels": [...], "entries": [[...]]}`.
pub fn parse_json(text: &str, path: &Path) -> IoResult<RawMatrix> {
    let parsed: JsonMatrix = serde_json::from_str(text)
        .map_err(|e| parse_err(path, e.line(), e.to_string()))?;
    for label in &parsed.labels {
        if label.contains(',') || label.contains('\n') || label.contains('\r') {
            return Err(parse_err(
                path,
                0,
                format!("label {label:?} contains a separator character"),
            ));
        }
    }
    for row in &parsed.entries {
        if let Some(&v) = row.iter().find(|v| !v.is_finite()) {
            return Err(parse_err(path, 0, format!("non-finite value: {v}")));
        }
    }
    let labels = ObjectLabels::new(parsed.labels)
        .map_err(|source| IoError::Construct { path: path.to_path_buf(), source })?;
    Ok(RawMatrix { labels, rows: parsed.entries })
}

/// A matrix read from a file and validated for its kind.
#[derive(Debug, Clone)]
pub enum ParsedMatrix {
    Fuzzy(FuzzyRanking),
    Crisp(CrispRanking),
    Penalty(PenaltyMatrix),
}

/// One loaded input: where it came from, what it validated as, and the
/// warnings raised along the way (column drift of row-stochastic matrices).
#[derive(Debug, Clone)]
pub struct LoadedMatrix {
    pub path: PathBuf,
    pub kind: MatrixKind,
    pub digest: String,
    pub raw: RawMatrix,
    pub matrix: ParsedMatrix,
    pub warnings: Vec<Violation>,
}

/// Reads and validates one matrix file as `kind`. Crisp files are accepted in
/// either kind of stochasticity mode since permutation matrices satisfy both.
pub fn load_matrix(
    path: &Path,
    kind: MatrixKind,
    mode: Mode,
    tol: &ToleranceConfig,
) -> IoResult<LoadedMatrix> {
    let raw = read_raw(path)?;
    let digest = raw.digest();
    let validation = |source| IoError::Validation { path: path.to_path_buf(), source };
    let (matrix, warnings) = match kind {
        MatrixKind::Fuzzy => {
            let f = FuzzyRanking::new(raw.labels.clone(), raw.rows.clone(), mode, tol)
                .map_err(validation)?;
            let warnings = match mode {
                Mode::RowStochastic => f.strict_violations(tol),
                Mode::Strict => Vec::new(),
            };
            (ParsedMatrix::Fuzzy(f), warnings)
        }
        MatrixKind::Crisp => {
            let c = CrispRanking::from_matrix(raw.labels.clone(), &raw.rows).map_err(validation)?;
            (ParsedMatrix::Crisp(c), Vec::new())
        }
        MatrixKind::Penalty => {
            let p = PenaltyMatrix::new(raw.rows.clone(), tol).map_err(validation)?;
            (ParsedMatrix::Penalty(p), Vec::new())
        }
    };
    Ok(LoadedMatrix { path: path.to_path_buf(), kind, digest, raw, matrix, warnings })
}

/// Canonical CSV text of a labelled matrix: `object,1,...,n` header, shortest
/// round-trip float formatting, `\n` endings, trailing newline.
pub fn to_canonical_csv(labels: &ObjectLabels, rows: &[Vec<f64>]) -> String {
    let n = rows.first().map_or(labels.len(), Vec::len);
    let mut out = String::from("object");
    for k in 1..=n {
        out.push(',');
        out.push_str(&k.to_string());
    }
    out.push('\n');
    for (label, row) in labels.iter().zip(rows) {
        out.push_str(label);
        for v in row {
            out.push(',');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

/// `sha256:` plus the lowercase hex SHA-256 of the text.
pub fn digest_str(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let out = hasher.finalize();
    let mut hex = String::with_capacity(7 + 64);
    hex.push_str("sha256:");
    for byte in out {
        hex.push_str(&format!("{byte:02x}"));
    }
    hex
}
