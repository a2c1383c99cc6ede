//! Black-box tests of the command-line binary: exact output per format,
//! the exit-code contract, tolerance resolution, and schema conformance of
//! the JSON reports.

use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_fuzzy-rankings")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

struct Run {
    exit: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], envs: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(bin());
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let output = cmd.output().expect("binary runs");
    Run {
        exit: output.status.code().unwrap_or(-1),
        stdout: String::from_utf8(output.stdout).unwrap(),
        stderr: String::from_utf8(output.stderr).unwrap(),
    }
}

fn report(args: &[&str]) -> serde_json::Value {
    let mut with_json: Vec<&str> = args.to_vec();
    with_json.extend(["--format", "json"]);
    let r = run(&with_json);
    assert!(
        r.exit == 0 || r.exit == 1,
        "`{}` exited {} with stderr: {}",
        args.join(" "),
        r.exit,
        r.stderr
    );
    serde_json::from_str(&r.stdout)
        .unwrap_or_else(|e| panic!("`{}` stdout is not JSON: {e}", args.join(" ")))
}

fn write_temp(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn tau_prints_six_significant_digits_in_text_and_full_precision_in_csv() {
    let r = run(&["tau", &fixture("crisp_r1.csv"), &fixture("crisp_r2.csv")]);
    assert_eq!(r.exit, 0);
    assert_eq!(r.stdout, "tau = 0.800000\n");

    let r = run(&["tau", &fixture("crisp_r1.csv"), &fixture("crisp_r2.csv"), "--format", "csv"]);
    assert_eq!(r.stdout, "metric,value\ntau,0.8\n");

    let r = run(&["tau", &fixture("crisp_r2.csv"), &fixture("crisp_r3.csv")]);
    assert_eq!(r.stdout, "tau = 0.800000\n");

    let doc = report(&["tau", &fixture("crisp_r1.csv"), &fixture("crisp_r3.csv")]);
    assert_eq!(doc["result"]["tau"], serde_json::json!(0.6));
}

#[test]
fn order_lists_ranks_then_column_warnings() {
    let input = fixture("ordering_input.csv");
    let r = run(&["order", &input]);
    assert_eq!(r.exit, 0);
    assert!(
        r.stdout.starts_with("1 A\n2 B\n3 C\n4 D\n"),
        "rank table first:\n{}",
        r.stdout
    );
    assert!(r.stdout.contains("warning: "));
    assert!(r.stdout.contains("column 1 sums to 1.05"));
    assert!(r.stdout.contains("column 3 sums to 0.95"));

    // csv keeps the data stream clean: warnings move to stderr
    let r = run(&["order", &input, "--format", "csv"]);
    assert_eq!(r.stdout, "rank,object\n1,A\n2,B\n3,C\n4,D\n");
    assert!(r.stderr.contains("column 1 sums to 1.05"));
}

#[test]
fn sim_carries_the_source_example_note_for_the_flagged_pair() {
    let args = [
        "sim",
        &fixture("expert_1.csv"),
        &fixture("expert_2.csv"),
        "--penalty",
        &fixture("penalty.csv"),
    ];
    let r = run(&args);
    assert_eq!(r.exit, 0);
    assert!(r.stdout.starts_with("dis = 0.230000\ndis_max = 1.65000\nsim = 0.860606\n"));
    assert!(
        r.stdout.contains("note: the source worked example states dis = 0.275"),
        "discrepancy note missing:\n{}",
        r.stdout
    );

    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    let r = run(&csv_args);
    assert_eq!(
        r.stdout,
        "metric,value\ndis,0.23\ndis_max,1.65\nsim,0.8606060606060606\n"
    );
    assert!(r.stderr.contains("note: the source worked example"));
}

#[test]
fn sim_of_crisp_inputs_includes_tau() {
    let r = run(&[
        "sim",
        &fixture("dm1.csv"),
        &fixture("dm3.csv"),
        "--penalty",
        &fixture("penalty.csv"),
    ]);
    assert_eq!(r.exit, 0);
    assert_eq!(r.stdout, "dis = 0.800000\ndis_max = 1.65000\nsim = 0.515152\ntau = 0.666667\n");

    let doc = report(&[
        "sim",
        &fixture("dm1.csv"),
        &fixture("dm3.csv"),
        "--penalty",
        &fixture("penalty.csv"),
    ]);
    assert!(doc["result"]["tau"].is_number(), "tau present for crisp inputs");
    // fuzzy inputs have no defined tau
    let doc = report(&[
        "sim",
        &fixture("expert_1.csv"),
        &fixture("expert_2.csv"),
        "--penalty",
        &fixture("penalty.csv"),
    ]);
    assert!(doc["result"]["tau"].is_null());
}

#[test]
fn entropy_notes_only_the_flagged_matrix() {
    let r = run(&["entropy", &fixture("expert_2.csv")]);
    assert_eq!(r.exit, 0);
    assert!(r.stdout.contains("ii = 0.954046"));
    assert!(r.stdout.contains("note: the source worked example states an indecisiveness index of 0.871"));

    let r = run(&["entropy", &fixture("expert_1.csv")]);
    assert_eq!(r.exit, 0);
    assert!(r.stdout.contains("ii = 0.801039"));
    assert!(!r.stdout.contains("note:"), "unflagged matrix must carry no note");

    let r = run(&["entropy", &fixture("expert_2.csv"), "--format", "csv"]);
    assert!(r.stdout.contains("ii,0.9540462199552707\n"));
    assert!(r.stderr.contains("note: the source worked example"));
}

#[test]
fn validate_reports_each_violation_with_indices() {
    let input = fixture("ordering_input.csv");

    let r = run(&["validate", &input]);
    assert_eq!(r.exit, 0, "row-stochastic reading accepts the matrix");
    assert!(r.stdout.contains("valid fuzzy matrix (n = 4, mode = row)"));
    assert!(r.stdout.contains("warning: "), "column defects still surface as warnings");

    let r = run(&["validate", &input, "--mode", "strict"]);
    assert_eq!(r.exit, 1);
    assert!(r.stdout.contains("invalid fuzzy matrix: 2 violations"));
    assert!(r.stdout.contains("column-sum: column 1 sums to 1.05"));
    assert!(r.stdout.contains("column-sum: column 3 sums to 0.95"));

    let r = run(&["validate", &input, "--mode", "strict", "--format", "csv"]);
    assert_eq!(
        r.stdout,
        "code,row,col,residual\n\
         column-sum,,1,0.050000000000000044\n\
         column-sum,,3,0.050000000000000044\n"
    );

    // kind selects the validator
    assert_eq!(run(&["validate", &fixture("penalty.csv"), "--kind", "penalty"]).exit, 0);
    assert_eq!(
        run(&["validate", &fixture("crisp_r1.csv"), "--kind", "crisp", "--mode", "strict"]).exit,
        0
    );
    let r = run(&["validate", &fixture("expert_1.csv"), "--kind", "crisp"]);
    assert_eq!(r.exit, 1, "a graded matrix is not a crisp ranking");
    assert!(r.stdout.contains("not-crisp"));
}

#[test]
fn aggregate_weight_variants() {
    let e1 = fixture("expert_1.csv");
    let e2 = fixture("expert_2.csv");

    // a unit weight on the first member returns its matrix verbatim
    let r = run(&["aggregate", &e1, &e2, "--weights", "1,0", "--format", "csv"]);
    assert_eq!(r.exit, 0);
    assert_eq!(
        r.stdout,
        "object,1,2,3,4\nA,0.6,0.3,0.1,0\nB,0.3,0.3,0.2,0.2\nC,0.1,0.3,0.4,0.2\nD,0,0.1,0.3,0.6\n"
    );

    // the same weights can come from a file
    let dir = tempfile::tempdir().unwrap();
    let weights = write_temp(&dir, "weights.txt", "1.0\n0.0\n");
    let r = run(&["aggregate", &e1, &e2, "--weights", weights.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(r.exit, 0);
    assert!(r.stdout.starts_with("object,1,2,3,4\nA,0.6,0.3,0.1,0\n"));

    // decisiveness weighting favours the first expert
    let r = run(&["aggregate", &e1, &e2, "--by-decisiveness"]);
    assert_eq!(r.exit, 0);
    assert!(
        r.stdout.starts_with("weights: 0.812368 0.187632\n"),
        "derived weights:\n{}",
        r.stdout
    );

    // weight errors: content problems exit 1, unusable arguments exit 2
    assert_eq!(run(&["aggregate", &e1, &e2, "--weights", "0.9,0.2"]).exit, 1);
    assert_eq!(run(&["aggregate", &e1, &e2, "--weights", "0.5,-0.5"]).exit, 1);
    let r = run(&["aggregate", &e1, &e2, "--weights", "0.5,oops"]);
    assert_eq!(r.exit, 2);
    assert!(r.stderr.contains("--weights"));
    assert_eq!(run(&["aggregate", &e1, &e2, "--weights", "1,0", "--by-decisiveness"]).exit, 2);

    // panel mean reproduces the group reference
    let r = run(&[
        "aggregate",
        &fixture("dm1.csv"),
        &fixture("dm2.csv"),
        &fixture("dm3.csv"),
        &fixture("dm4.csv"),
        "--format",
        "csv",
    ]);
    assert_eq!(r.exit, 0);
    assert_eq!(
        r.stdout,
        "object,1,2,3,4\nA,0.25,0.5,0.25,0\nB,0.25,0.25,0.5,0\nC,0.25,0.25,0.25,0.25\nD,0.25,0,0.25,0.5\n"
    );
    assert!(r.stderr.contains("column 3 sums to 2"), "the malformed member is flagged");
}

#[test]
fn decompose_accepts_only_doubly_stochastic_inputs() {
    let r = run(&["decompose", &fixture("uncertain_tie.csv")]);
    assert_eq!(r.exit, 0);
    assert_eq!(r.stdout, "0.500000: A B C D\n0.500000: B A C D\n");

    let r = run(&["decompose", &fixture("uncertain_tie.csv"), "--format", "csv"]);
    assert_eq!(r.stdout, "coefficient,order\n0.5,A B C D\n0.5,B A C D\n");

    // a row-stochastic matrix without column structure cannot be written as
    // a mixture of permutation matrices
    let r = run(&["decompose", &fixture("dm2.csv")]);
    assert_eq!(r.exit, 1);
    assert!(r.stderr.contains("column"), "states the column defect: {}", r.stderr);

    // the flag cannot override the validation mode for this command
    let r = run(&["decompose", &fixture("dm2.csv"), "--mode", "row"]);
    assert_eq!(r.exit, 1);
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();

    // 2: the file or arguments cannot be used at all
    assert_eq!(run(&["validate", "no_such_file.csv"]).exit, 2);
    assert_eq!(run(&["nonsense"]).exit, 2);
    assert_eq!(run(&["tau", &fixture("crisp_r1.csv")]).exit, 2);
    let ragged = write_temp(&dir, "ragged.csv", "object,1,2\nA,0.5,0.5\nB,1.0\n");
    assert_eq!(run(&["validate", ragged.to_str().unwrap()]).exit, 2);
    let bad_header = write_temp(&dir, "header.csv", "thing,1,2\nA,1,0\nB,0,1\n");
    assert_eq!(run(&["validate", bad_header.to_str().unwrap()]).exit, 2);
    let blank = write_temp(&dir, "blank.csv", "object,1,2\nA,1,0\n\nB,0,1\n");
    assert_eq!(run(&["validate", blank.to_str().unwrap()]).exit, 2);
    let words = write_temp(&dir, "words.csv", "object,1,2\nA,one,0\nB,0,1\n");
    let r = run(&["validate", words.to_str().unwrap()]);
    assert_eq!(r.exit, 2);
    assert!(
        r.stderr.contains(":2: not a number"),
        "parse errors carry the line number: {}",
        r.stderr
    );

    // 1: well-formed input whose content fails the requested check
    let dupe = write_temp(&dir, "dupe.csv", "object,1,2\nA,1,0\nA,0,1\n");
    assert_eq!(run(&["validate", dupe.to_str().unwrap()]).exit, 1);
    assert_eq!(run(&["validate", &fixture("ordering_input.csv"), "--mode", "strict"]).exit, 1);

    // 0: help and version are successful runs
    assert_eq!(run(&["--help"]).exit, 0);
    assert_eq!(run(&["--version"]).exit, 0);
    assert_eq!(run(&["order", "--help"]).exit, 0);
}

#[test]
fn tolerance_comes_from_flag_then_environment() {
    let dir = tempfile::tempdir().unwrap();
    // rows sum to one exactly; the first column is off by one millionth
    let near = write_temp(
        &dir,
        "near.csv",
        "object,1,2\nA,0.500001,0.499999\nB,0.5,0.5\n",
    );
    let near = near.to_str().unwrap();

    assert_eq!(run(&["validate", near, "--mode", "strict"]).exit, 1);
    assert_eq!(run(&["validate", near, "--mode", "strict", "--tol", "1e-5"]).exit, 0);
    assert_eq!(
        run_with_env(&["validate", near, "--mode", "strict"], &[("FUZZY_RANKINGS_TOL", "1e-5")]).exit,
        0
    );
    // an explicit flag beats the environment
    assert_eq!(
        run_with_env(
            &["validate", near, "--mode", "strict", "--tol", "1e-9"],
            &[("FUZZY_RANKINGS_TOL", "1e-5")]
        )
        .exit,
        1
    );

    // unusable tolerances are usage errors
    for bad in ["0", "-1e-9", "0.1", "abc"] {
        let r = run(&["validate", near, "--tol", bad]);
        assert_eq!(r.exit, 2, "--tol {bad} must be rejected");
        assert!(!r.stderr.is_empty());
    }
    let r = run_with_env(&["validate", near], &[("FUZZY_RANKINGS_TOL", "half")]);
    assert_eq!(r.exit, 2);
    assert!(r.stderr.contains("FUZZY_RANKINGS_TOL"));
}

#[test]
fn json_files_parse_and_digests_ignore_layout() {
    let r = run(&["validate", &fixture("expert_1.json")]);
    assert_eq!(r.exit, 0, "JSON input: {}", r.stderr);

    let csv_doc = report(&["validate", &fixture("expert_1.csv")]);
    let json_doc = report(&["validate", &fixture("expert_1.json")]);
    assert_eq!(
        csv_doc["inputs"][0]["digest"], json_doc["inputs"][0]["digest"],
        "the digest depends on the matrix, not the file syntax"
    );

    // shuffled whitespace and CRLF endings do not change the digest either
    let dir = tempfile::tempdir().unwrap();
    let spaced = write_temp(
        &dir,
        "spaced.csv",
        "object, 1, 2, 3, 4\r\nA, 0.60, 0.30, 0.10, 0.0\r\nB, 0.30, 0.30, 0.20, 0.20\r\nC, 0.10, 0.30, 0.40, 0.20\r\nD, 0.0, 0.10, 0.30, 0.60\r\n",
    );
    let spaced_doc = report(&["validate", spaced.to_str().unwrap()]);
    assert_eq!(csv_doc["inputs"][0]["digest"], spaced_doc["inputs"][0]["digest"]);

    let ii_csv = report(&["entropy", &fixture("expert_1.csv")]);
    let ii_json = report(&["entropy", &fixture("expert_1.json")]);
    assert_eq!(ii_csv["result"]["ii"], ii_json["result"]["ii"]);
}

#[test]
fn json_reports_conform_to_the_published_schema() {
    let schema_text = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json"),
    )
    .unwrap();
    let schema: serde_json::Value = serde_json::from_str(&schema_text).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();

    let dir = tempfile::tempdir().unwrap();
    let weights = write_temp(&dir, "w.csv", "0.25,0.75\n");
    let docs = [
        report(&["validate", &fixture("expert_1.csv")]),
        report(&["validate", &fixture("ordering_input.csv"), "--mode", "strict"]),
        report(&["validate", &fixture("penalty.csv"), "--kind", "penalty"]),
        report(&["tau", &fixture("crisp_r1.csv"), &fixture("crisp_r2.csv")]),
        report(&["diff", &fixture("expert_1.csv"), &fixture("expert_2.csv")]),
        report(&[
            "sim",
            &fixture("dm1.csv"),
            &fixture("dm3.csv"),
            "--penalty",
            &fixture("penalty.csv"),
        ]),
        report(&["order", &fixture("group_mean.csv")]),
        report(&["entropy", &fixture("uncertain_lean.csv")]),
        report(&[
            "aggregate",
            &fixture("expert_1.csv"),
            &fixture("expert_2.csv"),
            "--weights",
            weights.to_str().unwrap(),
        ]),
        report(&["decompose", &fixture("uncertain_lean.csv")]),
    ];
    for doc in &docs {
        let problems: Vec<String> = validator
            .iter_errors(doc)
            .map(|e| format!("{}: {e}", e.instance_path()))
            .collect();
        assert!(
            problems.is_empty(),
            "report for {} fails the schema:\n  {}",
            doc["command"],
            problems.join("\n  ")
        );
    }

    // the envelope always carries the resolved tolerance and input digests
    let doc = &docs[0];
    assert_eq!(doc["tolerance"]["eps_sum"], serde_json::json!(1e-9));
    assert!(doc["inputs"][0]["digest"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn closed_stdout_pipe_is_not_an_error() {
    // `fuzzy-rankings ... | head -1` must end quietly, not panic, when the
    // reader goes away
    let mut child = Command::new(bin())
        .args(["entropy", &fixture("expert_1.csv"), "--format", "json"])
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    drop(child.stdout.take()); // close the read end before consuming output
    let output = child.wait_with_output().unwrap();
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(!stderr.contains("panicked"), "broken pipe must not panic: {stderr}");
    assert_eq!(output.status.code(), Some(0), "stderr: {stderr}");
}

#[test]
fn diff_emits_a_reloadable_matrix() {
    let r = run(&["diff", &fixture("crisp_r1.csv"), &fixture("crisp_r2.csv"), "--format", "csv"]);
    assert_eq!(r.exit, 0);
    assert!(r.stdout.starts_with("object,1,2,3,4,5\nA,1,1,0,0,0\nB,1,1,0,0,0\n"));

    // the csv output is itself a well-formed matrix file
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "diff.csv", &r.stdout);
    // a difference matrix is not row-stochastic, so only parsing is checked
    let reread = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(reread.exit, 1, "parses, then fails stochasticity checks");
    let parse_failure = run(&["validate", "no_such.csv"]);
    assert_eq!(parse_failure.exit, 2, "unreadable files are a different failure class");
}
