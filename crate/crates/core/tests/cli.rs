use std::process::Command;

use serde_json::Value;
use tropical_entropy::cli::{run, EXIT_BUDGET, EXIT_INPUT, EXIT_OK};

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn tropent(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tropent").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = tropent(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn dim_of_unit_square() {
    let v = json(&["dim", "--poly", &data("unit_square.json"), "--N", "3"]);
    assert_eq!(v["dim"], 7);
    assert_eq!(v["complete"], true);
    assert_eq!(v["witness_pattern"].as_array().unwrap().len(), 4);
}

#[test]
fn dim_of_radical_family() {
    let v = json(&["dim", "--poly", &data("unit_square.json"), "--N", "3", "--radical"]);
    assert_eq!(v["dim"], 5);
}

#[test]
fn dim_of_system_file() {
    assert_eq!(json(&["dim", "--system", &data("empty_system.json")])["dim"], 9);
}

#[test]
fn budget_exhaustion_exits_two() {
    let (code, out, _) = tropent(&["dim", "--poly", &data("unit_square.json"), "--N", "5", "--budget", "3"]);
    assert_eq!(code, EXIT_BUDGET);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["complete"], false);
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(tropent(&["dim", "--poly", &data("missing.json"), "--N", "2"]).0, EXIT_INPUT);
    assert_eq!(tropent(&["dim", "--poly", &data("unit_square.json")]).0, EXIT_INPUT);
    assert_eq!(tropent(&["entropy", "--poly", &data("unit_square.json"), "--N-max", "0"]).0, EXIT_INPUT);
    assert_eq!(
        tropent(&["witness-verify", "--family", "spiral", "--N", "3", "--poly", &data("unit_square.json")]).0,
        EXIT_INPUT
    );
    assert_eq!(tropent(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(tropent(&["--help"]).0, EXIT_OK);
}

#[test]
fn entropy_csv() {
    let (code, out, _) = tropent(&["entropy", "--poly", &data("double_root.json"), "--N-max", "3", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "N,dim,ratio_exact,ratio_decimal,status",
            "1,1,1,1,empty_window",
            "2,1,1/2,0.5,complete",
            "3,1,1/3,0.3333333333333333,complete"
        ]
    );
}

#[test]
fn entropy_json_with_witness() {
    let v = json(&["entropy", "--poly", &data("unit_square.json"), "--N-max", "4", "--witness", "even-column"]);
    assert_eq!(v["lower"], "1/2");
    assert_eq!(v["upper"], "11/16");
    assert_eq!(v["consistent"], true);
    assert_eq!(v["upper_sequence"][3]["dim"], 11);
}

#[test]
fn entropy_partial_exits_two() {
    let (code, _, _) = tropent(&["entropy", "--poly", &data("unit_square.json"), "--N-max", "3", "--budget", "1"]);
    assert_eq!(code, EXIT_BUDGET);
}

#[test]
fn sweep_finds_counterexample() {
    let v = json(&["sweep", "--poly", &data("unit_square.json"), "--point", &data("slope_3_1.json")]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["outcome"]["violated_at"], serde_json::json!([0, 0]));
}

#[test]
fn radical_membership() {
    let v = json(&["radical", "--g", &data("unit_square_dilated.json"), "--f", &data("unit_square.json")]);
    assert_eq!(v["member"], true);
    let v = json(&["radical", "--g", &data("triangle.json"), "--f", &data("unit_square.json")]);
    assert_eq!(v["member"], false);
    let v = json(&["radical", "--g", &data("unit_square.json"), "--points", &data("points.json")]);
    assert_eq!(v["member"], true);
}

#[test]
fn fit_and_probe() {
    let v = json(&[
        "fit",
        "--forms",
        &data("two_lines.json"),
        "--point",
        &data("roof_4.json"),
        "--threshold",
        "0",
        "--probe",
    ]);
    assert_eq!(v["fit"]["offsets"], serde_json::json!(["0", "-2"]));
    assert_eq!(v["fit"]["deficiency"], serde_json::json!([]));
    assert!(v["probe"]["hit"].is_null());
}

#[test]
fn witness_verify() {
    let v =
        json(&["witness-verify", "--family", "diagonal", "--N", "4", "--poly", &data("unit_square.json"), "--radical"]);
    assert_eq!((v["bound"].clone(), v["verified"].clone()), (Value::from(5), Value::Bool(true)));
    let v = json(&[
        "witness-verify",
        "--family",
        "even-column",
        "--N",
        "4",
        "--poly",
        &data("unit_square.json"),
        "--radical",
    ]);
    assert_eq!(v["verified"], false);
}

#[test]
fn selftest_passes() {
    let (code, out, _) = tropent(&["selftest"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn single_worker_output_is_reproducible() {
    let args = ["dim", "--poly", &data("unit_square.json"), "--N", "4", "--workers", "1"];
    let strip = |s: String| {
        let mut v: Value = serde_json::from_str(&s).unwrap();
        v["elapsed_ms"] = Value::Null;
        v
    };
    assert_eq!(strip(tropent(&args).1), strip(tropent(&args).1));
}

#[test]
fn env_overrides_budget_and_workers() {
    let bin = env!("CARGO_BIN_EXE_tropent");
    let status = Command::new(bin)
        .args(["dim", "--poly", &data("unit_square.json"), "--N", "5"])
        .env("TROPENT_BUDGET", "3")
        .env("TROPENT_WORKERS", "1")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_BUDGET));

    let bad = Command::new(bin)
        .args(["dim", "--poly", &data("unit_square.json"), "--N", "2"])
        .env("TROPENT_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_INPUT));
}
