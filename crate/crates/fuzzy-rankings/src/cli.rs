//! Command-line front end.
//!
//! Every subcommand reads matrix files (CSV or JSON, see [`crate::io`]),
//! runs one analysis, and prints the outcome in one of three formats:
//!
//! * `text`: human-readable lines, numbers at 6 significant digits, with
//!   `warning:` and `note:` footer lines.
//! * `json`: the full [`AnalysisReport`] envelope, full-precision numbers.
//! * `csv`: machine-readable tables, full-precision numbers; warnings and
//!   notes go to stderr so stdout stays clean.
//!
//! Exit codes: 0 on success, 1 when input content is invalid or the
//! operation is impossible on it, 2 for usage errors, unreadable files, and
//! malformed file formats.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::aggregate::{mean, mean_weighted_by_decisiveness, WeightVector};
use crate::birkhoff::decompose;
use crate::crisp::CrispRanking;
use crate::discrepancies;
use crate::error::Error;
use crate::fuzzy::{FuzzyRanking, Mode};
use crate::indecisiveness;
use crate::io::{load_matrix, read_raw, to_canonical_csv, IoError, LoadedMatrix, MatrixKind, ParsedMatrix};
use crate::labels::ObjectLabels;
use crate::ordering::dominance_report;
use crate::penalty::PenaltyMatrix;
use crate::report::{format_sig, AnalysisReport, InputRecord};
use crate::similarity::{difference, kendall_tau, similarity, similarity_crisp};
use crate::tolerance::ToleranceConfig;
use crate::validation::Violation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Rows and columns must both sum to 1 (doubly stochastic).
    Strict,
    /// Rows must sum to 1; column drift is reported as warnings.
    Row,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Row => Mode::RowStochastic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Fuzzy,
    Crisp,
    Penalty,
}

impl From<KindArg> for MatrixKind {
    fn from(k: KindArg) -> MatrixKind {
        match k {
            KindArg::Fuzzy => MatrixKind::Fuzzy,
            KindArg::Crisp => MatrixKind::Crisp,
            KindArg::Penalty => MatrixKind::Penalty,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fuzzy-rankings",
    version,
    about = "Validate, compare, order, and aggregate fuzzy rankings",
    after_help = "Files are CSV (header `object,1,...,n`) or JSON \
                  (`{\"labels\": [...], \"entries\": [[...]]}`; by extension).\n\
                  Exit codes: 0 success, 1 invalid input content, 2 usage or parse error."
)]
struct Cli {
    /// Stochasticity required of fuzzy ranking inputs.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Row)]
    mode: ModeArg,

    /// Absolute tolerance for sum and entry checks, in (0, 1e-3].
    /// Falls back to the FUZZY_RANKINGS_TOL environment variable, then 1e-9.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a matrix file and report every violated constraint.
    Validate {
        file: PathBuf,
        /// What the file is expected to contain.
        #[arg(long, value_enum, default_value_t = KindArg::Fuzzy)]
        kind: KindArg,
    },
    /// Kendall rank correlation of two crisp ranking files.
    Tau { a: PathBuf, b: PathBuf },
    /// Entrywise absolute difference of two fuzzy rankings.
    Diff { a: PathBuf, b: PathBuf },
    /// Penalty-weighted similarity of two fuzzy rankings.
    Sim {
        a: PathBuf,
        b: PathBuf,
        /// Penalty matrix file.
        #[arg(long)]
        penalty: PathBuf,
    },
    /// Order the objects of a fuzzy ranking by cumulative dominance.
    Order { file: PathBuf },
    /// Row entropies and the indecisiveness index of a fuzzy ranking.
    Entropy { file: PathBuf },
    /// Entrywise (weighted) mean of several rankings.
    Aggregate {
        #[arg(required = true, num_args = 1..)]
        files: Vec<PathBuf>,
        /// Nonnegative weights summing to 1, one per file: either a
        /// comma-separated list (`--weights 0.6,0.4`) or a file holding
        /// the numbers separated by commas, spaces, or newlines.
        #[arg(long, conflicts_with = "by_decisiveness")]
        weights: Option<String>,
        /// Derive weights from each ranking's decisiveness.
        #[arg(long)]
        by_decisiveness: bool,
    },
    /// Write a doubly stochastic ranking as a convex mix of crisp rankings.
    /// The input is always validated in strict mode.
    Decompose { file: PathBuf },
}

struct Ctx {
    mode: Mode,
    tol: ToleranceConfig,
    format: FormatArg,
}

/// One command's complete outcome, rendered per format at the end.
struct Output {
    report: AnalysisReport,
    text: String,
    csv: String,
    exit: i32,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        let code = match e {
            IoError::Read { .. } | IoError::Parse { .. } => 2,
            IoError::Validation { .. } | IoError::Construct { .. } => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

/// Parses `args` (including the program name) and runs one command,
/// returning the process exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let tol = match resolve_tolerance(cli.tol) {
        Ok(tol) => tol,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };
    let ctx = Ctx { mode: cli.mode.into(), tol, format: cli.format };
    let outcome = match cli.command {
        Command::Validate { file, kind } => cmd_validate(&ctx, &file, kind.into()),
        Command::Tau { a, b } => cmd_tau(&ctx, &a, &b),
        Command::Diff { a, b } => cmd_diff(&ctx, &a, &b),
        Command::Sim { a, b, penalty } => cmd_sim(&ctx, &a, &b, &penalty),
        Command::Order { file } => cmd_order(&ctx, &file),
        Command::Entropy { file } => cmd_entropy(&ctx, &file),
        Command::Aggregate { files, weights, by_decisiveness } => {
            cmd_aggregate(&ctx, &files, weights, by_decisiveness)
        }
        Command::Decompose { file } => cmd_decompose(&ctx, &file),
    };
    match outcome {
        Ok(output) => emit(&ctx, output),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

fn resolve_tolerance(flag: Option<f64>) -> Result<ToleranceConfig, String> {
    let eps = match flag {
        Some(v) => v,
        None => match std::env::var("FUZZY_RANKINGS_TOL") {
            Ok(raw) => raw
                .trim()
                .parse()
                .map_err(|_| format!("FUZZY_RANKINGS_TOL is not a number: {raw:?}"))?,
            Err(std::env::VarError::NotPresent) => return Ok(ToleranceConfig::default()),
            Err(e) => return Err(format!("FUZZY_RANKINGS_TOL: {e}")),
        },
    };
    ToleranceConfig::uniform(eps).map_err(|e| e.to_string())
}

fn emit(ctx: &Ctx, output: Output) -> i32 {
    match try_emit(ctx, &output) {
        Ok(()) => output.exit,
        // the reader closed the pipe (e.g. `... | head`); stop quietly
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => output.exit,
        Err(e) => {
            eprintln!("error: writing output: {e}");
            1
        }
    }
}

fn try_emit(ctx: &Ctx, output: &Output) -> std::io::Result<()> {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match ctx.format {
        FormatArg::Text => {
            write!(out, "{}", output.text)?;
            for w in &output.report.warnings {
                writeln!(out, "warning: {}", w.message)?;
            }
            for n in &output.report.notes {
                writeln!(out, "note: {n}")?;
            }
        }
        FormatArg::Csv => {
            write!(out, "{}", output.csv)?;
            let stderr = std::io::stderr();
            let mut err = stderr.lock();
            for w in &output.report.warnings {
                let _ = writeln!(err, "warning: {}", w.message);
            }
            for n in &output.report.notes {
                let _ = writeln!(err, "note: {n}");
            }
        }
        FormatArg::Json => {
            writeln!(out, "{}", output.report.to_json())?;
        }
    }
    out.flush()
}

fn load(
    ctx: &Ctx,
    report: &mut AnalysisReport,
    path: &Path,
    kind: MatrixKind,
    mode: Mode,
) -> Result<LoadedMatrix, Failure> {
    let loaded = load_matrix(path, kind, mode, &ctx.tol)?;
    report.record_input(&loaded);
    Ok(loaded)
}

fn unwrap_fuzzy(loaded: &LoadedMatrix) -> &FuzzyRanking {
    match &loaded.matrix {
        ParsedMatrix::Fuzzy(f) => f,
        _ => unreachable!("loaded as fuzzy"),
    }
}

fn unwrap_crisp(loaded: &LoadedMatrix) -> &CrispRanking {
    match &loaded.matrix {
        ParsedMatrix::Crisp(c) => c,
        _ => unreachable!("loaded as crisp"),
    }
}

fn unwrap_penalty(loaded: &LoadedMatrix) -> &PenaltyMatrix {
    match &loaded.matrix {
        ParsedMatrix::Penalty(p) => p,
        _ => unreachable!("loaded as penalty"),
    }
}

/// Aligned table with 6-significant-digit cells, for text output.
fn matrix_text(labels: &ObjectLabels, rows: &[Vec<f64>]) -> String {
    let n = rows.first().map_or(0, Vec::len);
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| format_sig(v, 6)).collect())
        .collect();
    let label_width = labels.iter().map(str::len).fold("object".len(), usize::max);
    let mut widths = vec![0usize; n];
    for (j, width) in widths.iter_mut().enumerate() {
        *width = (j + 1).to_string().len();
        for row in &cells {
            *width = (*width).max(row[j].len());
        }
    }
    let mut out = format!("{:<label_width$}", "object");
    for (j, width) in widths.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&format!("{:>width$}", j + 1));
    }
    out.push('\n');
    for (i, label) in labels.iter().enumerate() {
        out.push_str(&format!("{label:<label_width$}"));
        for (j, width) in widths.iter().enumerate() {
            out.push_str("  ");
            out.push_str(&format!("{:>width$}", cells[i][j]));
        }
        out.push('\n');
    }
    out
}

fn matrix_json(labels: &ObjectLabels, rows: &[Vec<f64>]) -> serde_json::Value {
    json!({ "labels": labels.as_slice(), "entries": rows })
}

fn violation_json(v: &Violation) -> serde_json::Value {
    json!({
        "code": v.code(),
        "message": v.to_string(),
        "row": v.row(),
        "col": v.col(),
        "residual": v.residual(),
    })
}

fn cmd_validate(ctx: &Ctx, file: &Path, kind: MatrixKind) -> Result<Output, Failure> {
    let mut report = AnalysisReport::new("validate", ctx.mode, &ctx.tol);
    let raw = read_raw(file)?;
    report.inputs.push(InputRecord {
        path: file.display().to_string(),
        kind: kind.as_str().to_string(),
        digest: raw.digest(),
    });
    let n = raw.labels.len();
    let outcome: Result<Vec<Violation>, Vec<Violation>> = match kind {
        MatrixKind::Fuzzy => {
            match FuzzyRanking::new(raw.labels.clone(), raw.rows.clone(), ctx.mode, &ctx.tol) {
                Ok(f) if ctx.mode == Mode::RowStochastic => Ok(f.strict_violations(&ctx.tol)),
                Ok(_) => Ok(Vec::new()),
                Err(e) => Err(e.into_violations()),
            }
        }
        MatrixKind::Crisp => match CrispRanking::from_matrix(raw.labels.clone(), &raw.rows) {
            Ok(_) => Ok(Vec::new()),
            Err(e) => Err(e.into_violations()),
        },
        MatrixKind::Penalty => match PenaltyMatrix::new(raw.rows.clone(), &ctx.tol) {
            Ok(_) => Ok(Vec::new()),
            Err(e) => Err(e.into_violations()),
        },
    };
    match outcome {
        Ok(warnings) => {
            for v in &warnings {
                report.warnings.push(crate::report::Warning::from_violation(v, file));
            }
            report.result = json!({
                "valid": true,
                "kind": kind.as_str(),
                "n": n,
                "violations": [],
            });
            let text = format!(
                "{}: valid {} matrix (n = {n}, mode = {})\n",
                file.display(),
                kind.as_str(),
                ctx.mode
            );
            let csv = String::from("code,row,col,residual\n");
            Ok(Output { report, text, csv, exit: 0 })
        }
        Err(violations) => {
            report.result = json!({
                "valid": false,
                "kind": kind.as_str(),
                "n": n,
                "violations": violations.iter().map(violation_json).collect::<Vec<_>>(),
            });
            let mut text = format!(
                "{}: invalid {} matrix: {} violation{}\n",
                file.display(),
                kind.as_str(),
                violations.len(),
                if violations.len() == 1 { "" } else { "s" },
            );
            let mut csv = String::from("code,row,col,residual\n");
            for v in &violations {
                text.push_str(&format!("  {}: {v}\n", v.code()));
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    v.code(),
                    v.row().map_or(String::new(), |r| r.to_string()),
                    v.col().map_or(String::new(), |c| c.to_string()),
                    v.residual(),
                ));
            }
            Ok(Output { report, text, csv, exit: 1 })
        }
    }
}

fn cmd_tau(ctx: &Ctx, a: &Path, b: &Path) -> Result<Output, Failure> {
    let mut report = AnalysisReport::new("tau", ctx.mode, &ctx.tol);
    let la = load(ctx, &mut report, a, MatrixKind::Crisp, ctx.mode)?;
    let lb = load(ctx, &mut report, b, MatrixKind::Crisp, ctx.mode)?;
    let tau = kendall_tau(unwrap_crisp(&la), unwrap_crisp(&lb))?;
    report.result = json!({ "tau": tau });
    Ok(Output {
        report,
        text: format!("tau = {}\n", format_sig(tau, 6)),
        csv: format!("metric,value\ntau,{tau}\n"),
        exit: 0,
    })
}

fn cmd_diff(ctx: &Ctx, a: &Path, b: &Path) -> Result<Output, Failure> {
    let mut report = AnalysisReport::new("diff", ctx.mode, &ctx.tol);
    let la = load(ctx, &mut report, a, MatrixKind::Fuzzy, ctx.mode)?;
    let lb = load(ctx, &mut report, b, MatrixKind::Fuzzy, ctx.mode)?;
    let d = difference(unwrap_fuzzy(&la), unwrap_fuzzy(&lb))?;
    let rows = d.entries().to_rows();
    report.result = matrix_json(d.labels(), &rows);
    Ok(Output {
        report,
        text: matrix_text(d.labels(), &rows),
        csv: to_canonical_csv(d.labels(), &rows),
        exit: 0,
    })
}

fn cmd_sim(ctx: &Ctx, a: &Path, b: &Path, penalty: &Path) -> Result<Output, Failure> {
    let mut report = AnalysisReport::new("sim", ctx.mode, &ctx.tol);
    let la = load(ctx, &mut report, a, MatrixKind::Fuzzy, ctx.mode)?;
    let lb = load(ctx, &mut report, b, MatrixKind::Fuzzy, ctx.mode)?;
    let lp = load(ctx, &mut report, penalty, MatrixKind::Penalty, ctx.mode)?;
    let fa = unwrap_fuzzy(&la);
    let fb = unwrap_fuzzy(&lb);
    let p = unwrap_penalty(&lp);
    let sim_report = match (fa.as_crisp(), fb.as_crisp()) {
        (Some(ca), Some(cb)) => similarity_crisp(&ca, &cb, p)?,
        _ => similarity(fa, fb, p)?,
    };
    if let Some(note) = discrepancies::similarity_note(fa, fb, p) {
        report.notes.push(note);
    }
    report.result = json!({
        "dis": sim_report.dis,
        "dis_max": sim_report.dis_max,
        "sim": sim_report.sim,
        "tau": sim_report.tau,
    });
    let mut text = format!(
        "dis = {}\ndis_max = {}\nsim = {}\n",
        format_sig(sim_report.dis, 6),
        format_sig(sim_report.dis_max, 6),
        format_sig(sim_report.sim, 6),
    );
    let mut csv = format!(
        "metric,value\ndis,{}\ndis_max,{}\nsim,{}\n",
        sim_report.dis, sim_report.dis_max, sim_report.sim,
    );
    if let Some(tau) = sim_report.tau {
        text.push_str(&format!("tau = {}\n", format_sig(tau, 6)));
        csv.push_str(&format!("tau,{tau}\n"));
    }
    Ok(Output { report, text, csv, exit: 0 })
}

fn cmd_order(ctx: &Ctx, file: &Path) -> Result<Output, Failure> {
    let mut report = AnalysisReport::new("order", ctx.mode, &ctx.tol);
    let loaded = load(ctx, &mut report, file, MatrixKind::Fuzzy, ctx.mode)?;
    let f = unwrap_fuzzy(&loaded);
    let dom = dominance_report(f, &ctx.tol);
    let labels = dom.labels();

    let order = dom.order();
    let ranks_json: Vec<serde_json::Value> = order
        .iter()
        .map(|&i| json!({ "object": labels.get(i), "rank": dom.rank(i) }))
        .collect();
    let pair_labels = |&(r, s): &(usize, usize)| vec![labels.get(r), labels.get(s)];
    report.result = json!({
        "ranks": ranks_json,
        "order": order.iter().map(|&i| labels.get(i)).collect::<Vec<_>>(),
        "cumulative": matrix_json(labels, &dom.cumulative().entries().to_rows()),
        "incomparable": dom.incomparable_pairs().iter().map(pair_labels).collect::<Vec<_>>(),
        "ties": dom
            .tie_groups()
            .iter()
            .map(|g| g.iter().map(|&i| labels.get(i)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    });

    let mut text = String::new();
    let mut csv = String::from("rank,object\n");
    for &i in &order {
        text.push_str(&format!("{} {}\n", dom.rank(i), labels.get(i)));
        csv.push_str(&format!("{},{}\n", dom.rank(i), labels.get(i)));
    }
    for &(r, s) in dom.incomparable_pairs() {
        text.push_str(&format!("incomparable: {} {}\n", labels.get(r), labels.get(s)));
    }
    for group in dom.tie_groups() {
        let names: Vec<&str> = group.iter().map(|&i| labels.get(i)).collect();
        text.push_str(&format!("tied: {}\n", names.join(" ")));
    }
    Ok(Output { report, text, csv, exit: 0 })
}

fn cmd_entropy(ctx: &Ctx, file: &Path) -> Result<Output, Failure> {
    let mut report = AnalysisReport::new("entropy", ctx.mode, &ctx.tol);
    let loaded = load(ctx, &mut report, file, MatrixKind::Fuzzy, ctx.mode)?;
    let f = unwrap_fuzzy(&loaded);
    let ind_report = indecisiveness::report(f)?;
    if let Some(note) = discrepancies::indecisiveness_note(f) {
        report.notes.push(note);
    }
    let labels = ind_report.labels();
    report.result = json!({
        "per_object": labels
            .iter()
            .zip(ind_report.per_row())
            .map(|(l, h)| json!({ "object": l, "entropy": h }))
            .collect::<Vec<_>>(),
        "ind": ind_report.ind,
        "ind_max": ind_report.ind_max,
        "ii": ind_report.ii,
    });
    let mut text = String::new();
    let mut csv = String::from("metric,value\n");
    for (label, h) in labels.iter().zip(ind_report.per_row()) {
        text.push_str(&format!("H({label}) = {}\n", format_sig(*h, 6)));
        csv.push_str(&format!("H({label}),{h}\n"));
    }
    text.push_str(&format!("ind = {}\n", format_sig(ind_report.ind, 6)));
    text.push_str(&format!("ind_max = {}\n", format_sig(ind_report.ind_max, 6)));
    text.push_str(&format!("ii = {}\n", format_sig(ind_report.ii, 6)));
    csv.push_str(&format!("ind,{}\n", ind_report.ind));
    csv.push_str(&format!("ind_max,{}\n", ind_report.ind_max));
    csv.push_str(&format!("ii,{}\n", ind_report.ii));
    Ok(Output { report, text, csv, exit: 0 })
}

/// Accepts either an inline comma-separated list of numbers or the path of a
/// file containing them (separated by commas, spaces, or newlines).
fn parse_weights(arg: &str) -> Result<Vec<f64>, Failure> {
    let inline: Result<Vec<f64>, _> = arg
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse::<f64>)
        .collect();
    if let Ok(w) = inline {
        if !w.is_empty() {
            return Ok(w);
        }
    }
    let contents = std::fs::read_to_string(arg).map_err(|e| Failure {
        code: 2,
        message: format!("--weights {arg}: not a number list and not a readable file: {e}"),
    })?;
    let parsed: Result<Vec<f64>, _> = contents
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse::<f64>)
        .collect();
    match parsed {
        Ok(w) if !w.is_empty() => Ok(w),
        Ok(_) => Err(Failure { code: 2, message: format!("--weights {arg}: file holds no numbers") }),
        Err(e) => Err(Failure { code: 2, message: format!("--weights {arg}: {e}") }),
    }
}

fn cmd_aggregate(
    ctx: &Ctx,
    files: &[PathBuf],
    weights: Option<String>,
    by_decisiveness: bool,
) -> Result<Output, Failure> {
    let mut report = AnalysisReport::new("aggregate", ctx.mode, &ctx.tol);
    let mut rankings = Vec::with_capacity(files.len());
    for file in files {
        let loaded = load(ctx, &mut report, file, MatrixKind::Fuzzy, ctx.mode)?;
        rankings.push(unwrap_fuzzy(&loaded).clone());
    }
    let (group, applied, weighting) = if by_decisiveness {
        let (group, w) = mean_weighted_by_decisiveness(&rankings)?;
        (group, w, "decisiveness")
    } else if let Some(arg) = weights {
        let w = WeightVector::new(parse_weights(&arg)?)?;
        (mean(&rankings, Some(&w))?, w, "explicit")
    } else {
        let w = WeightVector::uniform(rankings.len())?;
        (mean(&rankings, None)?, w, "uniform")
    };
    let rows = group.entries().to_rows();
    report.result = json!({
        "labels": group.labels().as_slice(),
        "entries": rows,
        "mode": group.mode().to_string(),
        "weighting": weighting,
        "weights": applied.as_slice(),
    });
    let mut text = String::new();
    if weighting != "uniform" {
        let rendered: Vec<String> = applied.as_slice().iter().map(|&w| format_sig(w, 6)).collect();
        text.push_str(&format!("weights: {}\n", rendered.join(" ")));
    }
    text.push_str(&matrix_text(group.labels(), &rows));
    Ok(Output {
        report,
        text,
        csv: to_canonical_csv(group.labels(), &rows),
        exit: 0,
    })
}

fn cmd_decompose(ctx: &Ctx, file: &Path) -> Result<Output, Failure> {
    // a convex mix of permutation matrices is doubly stochastic, so the
    // input must be too: strict mode regardless of --mode
    let mut report = AnalysisReport::new("decompose", Mode::Strict, &ctx.tol);
    let loaded = load(ctx, &mut report, file, MatrixKind::Fuzzy, Mode::Strict)?;
    let f = unwrap_fuzzy(&loaded);
    let terms = decompose(f, &ctx.tol)?;
    report.result = json!({
        "term_count": terms.len(),
        "terms": terms
            .iter()
            .map(|(theta, r)| json!({ "coefficient": theta, "order": r.order_labels() }))
            .collect::<Vec<_>>(),
    });
    let mut text = String::new();
    let mut csv = String::from("coefficient,order\n");
    for (theta, r) in &terms {
        let order = r.order_labels().join(" ");
        text.push_str(&format!("{}: {order}\n", format_sig(*theta, 6)));
        csv.push_str(&format!("{theta},{order}\n"));
    }
    Ok(Output { report, text, csv, exit: 0 })
}
