use std::process::{Command, Output};

use serde_json::Value;

fn tapkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tapkit"))
        .args(args)
        .env_remove("TAPKIT_THREADS")
        .output()
        .expect("run tapkit")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = tapkit(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full)).unwrap()
}

#[test]
fn riley_text_and_json() {
    assert_eq!(
        ok(&["riley", "--k", "2", "--n", "1"]).trim(),
        "φ(2,y) = y - 3"
    );
    let v = json(&["riley", "--k", "2", "--n", "1"]);
    assert_eq!(v["degree"], 1);
    assert_eq!(v["coeffs"], serde_json::json!([-3, 1]));
}

#[test]
fn riley_degree_matches_formula() {
    for (k, n) in [(2, 3), (4, -2), (6, 1)] {
        let v = json(&["riley", "--k", &k.to_string(), "--n", &n.to_string()]);
        let p = (4 * (k / 2) * n - 1i64).unsigned_abs();
        assert_eq!(v["degree"].as_u64(), Some((p - 1) / 2), "J({k},{})", 2 * n);
    }
}

#[test]
fn json_round_trips() {
    for args in [
        &["riley", "--k", "4", "--n", "-3"][..],
        &["parabolic", "--k", "3", "--n", "2"],
        &["tap", "--k", "2", "--n", "2", "--root-index", "1"],
        &["analyze", "--two-bridge", "7/3"],
        &["p2", "100"],
    ] {
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        let text = ok(&full);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), text.trim(), "{args:?}");
    }
}

#[test]
fn big_coefficients_stay_exact() {
    let v = json(&["riley", "--k", "8", "--n", "-4"]);
    let coeffs = v["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len() as u64, v["degree"].as_u64().unwrap() + 1);
    assert!(coeffs.iter().all(|c| c.is_number()));
    assert_eq!(
        coeffs.last().unwrap().to_string().trim_start_matches('-'),
        "1"
    );
}

#[test]
fn p2_lists_primes() {
    assert_eq!(ok(&["p2", "20"]).trim(), "3, 5, 11, 13, 19");
    assert_eq!(json(&["p2", "20"]), serde_json::json!([3, 5, 11, 13, 19]));
}

#[test]
fn tap_reports_span_and_monicity() {
    let v = json(&["tap", "--k", "1", "--n", "3"]);
    assert_eq!(v["span"], 6);
    assert_eq!(v["monic"], true);
    let v = json(&["tap", "--k", "4", "--n", "2"]);
    assert_eq!(v["span"], 2);
}

#[test]
fn analyze_detects_genus_and_fiberedness() {
    let v = json(&["analyze", "--k", "3", "--n", "-2"]);
    assert_eq!(v["genus"], 2);
    assert_eq!(v["fibered"], false);
    assert_eq!(v["assertion"], "asserted");
    let v = json(&["analyze", "--k", "3", "--n", "1"]);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["fibered"], true);
    let v = json(&["analyze", "--k", "4", "--n", "2"]);
    assert_eq!(v["assertion"], "report-only");
    assert_eq!(v["p"], 15);
}

#[test]
fn sweep_csv_header_and_rows() {
    let text = ok(&["--format", "csv", "sweep", "--kmax", "2", "--nmax", "1"]);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        reader
            .headers()
            .unwrap()
            .iter()
            .collect::<Vec<_>>()
            .join(","),
        "spec,k,n,root_index,y_re,y_im,span,lead_re,lead_im,monic,genus_detected,fibered_detected"
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.len() == 12));
    assert!(rows.iter().any(|r| &r[0] == "J(2,-2)"));
}

#[test]
fn verify_small_grid_passes() {
    let text = ok(&["verify", "--kmax", "3", "--nmax", "2", "--pmax", "50"]);
    assert_eq!(text.matches("[PASS]").count(), 8, "{text}");
    assert!(!text.contains("[FAIL]"));
    let v = json(&["verify", "--kmax", "2", "--nmax", "1", "--pmax", "20"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn threads_flag_and_env() {
    let base = ok(&["p2", "50"]);
    assert_eq!(ok(&["--threads", "1", "p2", "50"]), base);
    let out = Command::new(env!("CARGO_BIN_EXE_tapkit"))
        .args(["analyze", "--k", "2", "--n", "1"])
        .env("TAPKIT_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), ok(&["analyze", "--k", "2", "--n", "1"]));
    let out = Command::new(env!("CARGO_BIN_EXE_tapkit"))
        .args(["p2", "10"])
        .env("TAPKIT_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["riley", "--k", "0", "--n", "1"][..],
        &["riley", "--k", "2", "--n", "0"],
        &["riley", "--k", "2"],
        &["riley", "--two-bridge", "6/1"],
        &["riley", "--two-bridge", "banana"],
        &["tap", "--k", "2", "--n", "1", "--root-index", "9"],
        &["--phi-tol", "-1", "p2", "10"],
        &["verify", "--kmax", "0"],
        &["frobnicate"],
    ] {
        assert_eq!(tapkit(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn trivial_knot_has_no_parabolic_roots() {
    let v = json(&["analyze", "--k", "1", "--n", "1"]);
    assert_eq!(v["genus"], 0);
    assert_eq!(v["roots"], serde_json::json!([]));
}
