//! End-to-end tests against the compiled binary: exit statuses, the JSON
//! report envelope, batch files, and determinism across worker counts.

use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordsemi"))
        .args(args)
        .output()
        .expect("binary launches")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn assert_envelope(report: &Value) {
    let obj = report.as_object().expect("report is an object");
    for key in ["config", "result", "violations", "witnesses", "timing-ms"] {
        assert!(obj.contains_key(key), "missing envelope key {key}: {report}");
    }
}

fn without_timing(mut report: Value) -> Value {
    report.as_object_mut().unwrap().remove("timing-ms");
    report
}

#[test]
fn verdict_reports_the_extremal_pair_and_exits_zero() {
    let out = run(&["verdict", "--set", "a;b", "--format", "json"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_envelope(&report);
    assert_eq!(report["violations"], 0);
    assert_eq!(report["config"]["instance"]["name"], "free_monoid");
    assert_eq!(report["config"]["seed"], 1);
    let verdict = &report["result"]["verdict"];
    assert_eq!(verdict["size"], 2);
    assert_eq!(verdict["square_size"], 4);
    assert_eq!(verdict["pairwise_commuting"], false);
    assert_eq!(verdict["theorem_consistent"], true);
}

#[test]
fn failed_bound_sets_violations_and_exit_status_one() {
    // Left-zero products collapse, so superadditivity has to fail.
    let out = run(&[
        "bound",
        "--instance",
        "left_zero",
        "--set",
        "p;q",
        "--set",
        "p;q",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_envelope(&report);
    assert_eq!(report["violations"], 1);
    assert_eq!(report["result"]["holds"], false);
    assert_eq!(report["result"]["bound"], 3);
    assert_eq!(report["result"]["actual"], 2);
    assert!(!report["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn unparseable_element_exits_two() {
    let out = run(&["verdict", "--set", "a;Z", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("error:"), "stderr was: {stderr}");
}

#[test]
fn unknown_flag_exits_two() {
    let out = run(&["verdict", "--set", "a;b", "--definitely-not-a-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_reports_are_identical_across_worker_counts() {
    let args = |jobs: &'static str| {
        vec![
            "scan", "theorem", "--kmin", "2", "--kmax", "3", "--max-word-len", "2", "--jobs",
            jobs, "--format", "json",
        ]
    };
    let one = run(&args("1"));
    let four = run(&args("4"));
    assert!(one.status.success() && four.status.success());
    let a = stdout_json(&one);
    let b = stdout_json(&four);
    assert_eq!(a["result"]["subsets_examined"], 56);
    assert_eq!(a["result"]["violations"], 0);
    let a = without_timing(a);
    let mut b = without_timing(b);
    // jobs is part of the echoed config; align it before comparing.
    b["config"]["jobs"] = a["config"]["jobs"].clone();
    assert_eq!(a, b, "scan output depends on worker count");
}

#[test]
fn batch_file_produces_an_array_of_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("runs.json");
    fs::write(
        &path,
        r#"[
            {"instance": {"name": "free_monoid", "alphabet_size": 2},
             "operation": {"op": "product", "sets": [["a", "b"], ["a"]]}},
            {"instance": {"name": "nat_add"},
             "operation": {"op": "laws", "trials": 50}}
        ]"#,
    )
    .unwrap();
    let out = run(&["batch", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let reports = stdout_json(&out);
    let arr = reports.as_array().expect("batch emits an array");
    assert_eq!(arr.len(), 2);
    for report in arr {
        assert_envelope(report);
        assert_eq!(report["violations"], 0);
    }
    assert_eq!(arr[0]["result"]["size"], 2);
    assert_eq!(arr[0]["result"]["product"], serde_json::json!(["aa", "ba"]));
}

#[test]
fn batch_with_a_failing_entry_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("runs.json");
    fs::write(
        &path,
        r#"[
            {"instance": {"name": "left_zero", "carrier": ["p", "q"]},
             "operation": {"op": "bound", "sets": [["p", "q"], ["p", "q"]]}}
        ]"#,
    )
    .unwrap();
    let out = run(&["batch", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let reports = stdout_json(&out);
    assert_eq!(reports.as_array().unwrap().len(), 1);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "verdict",
        "--set",
        "a;b",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty(), "report should go to the file, not stdout");
    let report: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_envelope(&report);
}

#[test]
fn text_format_prints_violation_and_timing_lines() {
    let out = run(&["verdict", "--set", "a;b"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("violations: 0"), "text output was: {text}");
    assert!(text.contains("timing-ms:"), "text output was: {text}");
}

#[test]
fn empty_word_is_periodic_with_index_and_period_one() {
    let out = run(&["period", "--element", "", "--depth", "6", "--format", "json"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["result"]["status"], "periodic");
    assert_eq!(report["result"]["index"], 1);
    assert_eq!(report["result"]["period"], 1);
}

#[test]
fn matrix_products_parse_and_render_as_json_rows() {
    let out = run(&[
        "product",
        "--instance",
        "upper_triangular",
        "--dim",
        "2",
        "--set",
        "[[1,1],[0,1]];[[2,1],[0,1]]",
        "--set",
        "[[1,2],[0,3]]",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["result"]["size"], 2);
    let product = report["result"]["product"].as_array().unwrap();
    let rendered: Vec<Value> =
        product.iter().map(|p| serde_json::from_str(p.as_str().unwrap()).unwrap()).collect();
    assert_eq!(rendered[0], serde_json::json!([["1", "5"], ["0", "3"]]));
    assert_eq!(rendered[1], serde_json::json!([["2", "7"], ["0", "3"]]));
}

#[test]
fn laws_on_the_semiring_instance_use_the_two_operation_battery() {
    let out = run(&[
        "laws",
        "--instance",
        "semiring",
        "--trials",
        "60",
        "--seed",
        "5",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["violations"], 0);
    let laws = report["result"]["laws"].as_array().unwrap();
    let names: Vec<&str> = laws.iter().map(|l| l["law"].as_str().unwrap()).collect();
    assert!(names.contains(&"left_distributivity"), "laws ran: {names:?}");
    assert!(names.contains(&"mul_translation_above_zero"), "laws ran: {names:?}");
    for law in laws {
        assert_eq!(law["failures"], 0, "law {} failed", law["law"]);
    }
}
