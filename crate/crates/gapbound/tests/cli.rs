//! End-to-end tests of the `gapbound` binary: exit codes, output formats,
//! and byte-level determinism.

use std::process::{Command, Output};

fn gapbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gapbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn paper_example_passes_with_zero_slack() {
    let out = gapbound(&["paper-example", "--k", "3", "--m", "2", "--order", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS"));
    assert!(text.contains("height = 3, #S1 = 2"));
}

#[test]
fn check_theorem_curved_parameter() {
    let out = gapbound(&[
        "check-theorem",
        "--f",
        "1/(1-t)",
        "--x",
        "t + t^3",
        "--point",
        "0",
        "--order",
        "40",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn polynomial_input_is_precondition_rejection() {
    let out = gapbound(&["gaps", "--f", "t^2", "--x", "t", "--point", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("polynomial"), "stderr: {err}");
}

#[test]
fn syntax_error_is_usage_error() {
    let out = gapbound(&["gaps", "--f", "1 + (t"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = gapbound(&["gaps", "--nope", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn normalize_gates_nonunit_inputs() {
    let rejected = gapbound(&["gaps", "--f", "t/(1-t)", "--x", "t"]);
    assert_eq!(rejected.status.code(), Some(2));
    let accepted = gapbound(&["gaps", "--f", "t/(1-t)", "--x", "t", "--normalize"]);
    assert_eq!(accepted.status.code(), Some(0));
}

#[test]
fn json_report_has_stable_fields() {
    let out = gapbound(&[
        "check-theorem",
        "--f",
        "1 + t^3/(1 - t^2)",
        "--order",
        "30",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for field in [
        "version",
        "f",
        "x",
        "point",
        "order",
        "height",
        "s1_count",
        "s2_count",
        "s2_sum",
        "supp_x_count",
        "rows",
        "lemma2",
        "prop_checks",
        "rr_check",
        "pass",
    ] {
        assert!(doc.get(field).is_some(), "missing field {field}");
    }
    assert_eq!(doc["pass"], serde_json::Value::Bool(true));
    assert_eq!(doc["height"], 3);
    assert_eq!(doc["s1_count"], 2);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows[0]["n"], 1);
    assert_eq!(rows[0]["a_n"], 3);
    assert_eq!(rows[0]["alpha_n"], "1");
    assert_eq!(rows[0]["slack"], 0);
    let lemma2 = &doc["lemma2"];
    assert!(lemma2.get("n").is_some() && lemma2.get("c").is_some());
    assert!(lemma2.get("hF").is_some() && lemma2.get("v_pF").is_some());
    let rr = &doc["rr_check"];
    assert_eq!(rr["lhs"], rr["rhs"]);
}

#[test]
fn csv_rows_have_fixed_columns() {
    let out = gapbound(&[
        "check-theorem",
        "--f",
        "1/(1-t)",
        "--order",
        "10",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,a_n,theorem_rhs,corollary_rhs,slack"
    );
    assert_eq!(lines.next().unwrap(), "1,1,1,1,0");
}

#[test]
fn rationals_serialize_as_fraction_strings() {
    let out = gapbound(&[
        "expand",
        "--f",
        "1/(2 - t)",
        "--order",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let terms = doc["terms"].as_array().unwrap();
    assert_eq!(terms[0]["coefficient"], "1/2");
    assert_eq!(terms[1]["coefficient"], "1/4");
}

#[test]
fn campaign_is_byte_deterministic() {
    let args = [
        "campaign",
        "--trials",
        "6",
        "--max-degree",
        "4",
        "--coeff-bound",
        "5",
        "--order",
        "24",
        "--x",
        "t",
        "--x",
        "t + t^3",
        "--seed",
        "99",
        "--format",
        "json",
    ];
    let a = gapbound(&args);
    let b = gapbound(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn campaign_rejects_zero_trials() {
    let out = gapbound(&["campaign", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_rr_and_prop_pass() {
    let rr = gapbound(&["check-rr", "--x", "t^2 - t"]);
    assert_eq!(rr.status.code(), Some(0));
    let prop = gapbound(&[
        "check-prop",
        "--f",
        "1/(1-t)",
        "--x",
        "t + t^3",
        "--n",
        "3",
    ]);
    assert_eq!(prop.status.code(), Some(0));
}

#[test]
fn lemma2_prints_kernel_vector() {
    let out = gapbound(&["lemma2", "--f", "1/(1-t)", "--x", "t", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[1, -1, 1]"), "got: {text}");
    assert!(text.contains("v_p(F) = 2"));
}

#[test]
fn expansion_point_can_be_rational() {
    let out = gapbound(&[
        "expand",
        "--f",
        "1/t",
        "--x",
        "t - 1",
        "--point",
        "1",
        "--order",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    // 1/t around t = 1 is 1 - (t-1) + (t-1)^2 - ...
    assert!(text.contains("x^0"), "got: {text}");
}

#[test]
fn invalid_sharp_family_shape_rejected() {
    let out = gapbound(&["paper-example", "--k", "2", "--m", "2"]);
    assert_eq!(out.status.code(), Some(1));
}
