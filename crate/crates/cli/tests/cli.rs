//! End-to-end runs of the `conformal-em` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conformal-em"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (out.status.code().unwrap(), v)
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("conformal-em-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn build_reports_exact_scalar_curvature() {
    let (code, v) = json(&[
        "build", "--k", "1", "--a", "1", "--b", "2", "--branch", "first",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["outputs"]["invariants"]["s_h"]["exact"], "240/13");
    assert_eq!(v["summary"]["pass"], true);
}

#[test]
fn build_accepts_exact_decimals() {
    let (code, v) = json(&["build", "--k", "2", "--a", "0.5", "--b", "7/4"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["solution"]["a"]["exact"], "1/2");
}

#[test]
fn second_branch_needs_k1() {
    let out = run(&[
        "build", "--k", "3", "--a", "1", "--b", "2", "--branch", "second",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("k = 1"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(
        code(&["build", "--k", "1", "--a", "2", "--b", "1", "--branch", "first"]),
        1
    );
    assert_eq!(code(&["build", "--k", "1", "--a", "x", "--b", "2"]), 1);
    assert_eq!(
        code(&["build", "--k", "1", "--a", "1", "--b", "2", "--branch", "third"]),
        1
    );
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(
        code(&["verify", "--k", "1", "--a", "1", "--b", "2", "--tol", "-1"]),
        1
    );
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn verify_passes_and_negative_control_fails() {
    let (ok, v) = json(&[
        "verify",
        "--k",
        "1",
        "--a",
        "1",
        "--b",
        "2",
        "--samples",
        "16",
    ]);
    assert_eq!(ok, 0);
    assert_eq!(v["outputs"]["mode"], "einstein-maxwell");
    for key in [
        "einstein_maxwell",
        "maxwell_df",
        "maxwell_dstar_f",
        "constant_scalar",
    ] {
        assert!(
            v["outputs"]["residuals"][key].as_f64().unwrap() < 1e-8,
            "{key}"
        );
    }
    let (bad, v) = json(&[
        "verify",
        "--k",
        "1",
        "--a",
        "1",
        "--b",
        "2",
        "--samples",
        "16",
        "--perturb-alpha",
        "0.01",
    ]);
    assert_eq!(bad, 2);
    let r = &v["outputs"]["residuals"];
    let worst = ["maxwell_df", "maxwell_dstar_f", "constant_scalar"]
        .iter()
        .map(|k| r[k].as_f64().unwrap())
        .fold(0.0, f64::max);
    assert!(worst > 1e-3);
}

#[test]
fn verify_at_page_point_uses_einstein_mode() {
    let (code, v) = json(&[
        "verify",
        "--k",
        "1",
        "--a",
        "1",
        "--b",
        "1.784357981032617",
        "--samples",
        "8",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["mode"], "einstein");
}

#[test]
fn verify_full_tensor_rows() {
    let (_, v) = json(&[
        "verify",
        "--k",
        "2",
        "--a",
        "1",
        "--b",
        "3",
        "--samples",
        "4",
        "--full-tensor",
    ]);
    let rows = v["outputs"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["ricci_h"].as_array().unwrap().len(), 4);
}

#[test]
fn enumerate_lists_three_above_nine() {
    let (code, v) = json(&["enumerate", "--u", "10", "--v", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["count"], 3);
    let csv = temp("enumerate.csv");
    assert_eq!(
        code_with_csv(&["enumerate", "--u", "10", "--v", "1"], &csv),
        0
    );
    let body = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(body.lines().count(), 4);
    assert!(body.starts_with("index,branch,a,b,alpha,s_h,sv"));
    let (_, v) = json(&["enumerate", "--u", "9", "--v", "1"]);
    assert_eq!(v["outputs"]["count"], 1);
}

fn code_with_csv(args: &[&str], path: &std::path::Path) -> i32 {
    let mut all = args.to_vec();
    let p = path.to_str().unwrap();
    all.extend(["--csv", p]);
    code(&all)
}

#[test]
fn page_point() {
    let (code, v) = json(&["page"]);
    assert_eq!(code, 0);
    let uv = v["outputs"]["u_over_v"].as_f64().unwrap();
    assert!((uv - 3.1839334).abs() < 1e-6);
    assert!(v["outputs"]["z_decimal"]
        .as_str()
        .unwrap()
        .starts_with("1.784357981"));
}

#[test]
fn moduli_component_bound() {
    let (code, v) = json(&["moduli", "--d", "15", "--f", "1"]);
    assert_eq!(code, 0);
    assert!(v["outputs"]["component_lower_bound"].as_u64().unwrap() >= 3);
}

#[test]
fn sweep_rows_in_grid_order() {
    let out = run(&[
        "sweep", "--from", "1.5", "--to", "4", "--steps", "6", "--csv", "-",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = String::from_utf8(out.stdout).unwrap();
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("parameter,sv,s_h,v_h,einstein_residual"));
    let params: Vec<f64> = lines
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(params.len(), 6);
    assert!(params.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(params[0], 1.5);
    assert_eq!(params[5], 4.0);
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = [
        "verify",
        "--k",
        "3",
        "--a",
        "2/3",
        "--b",
        "5",
        "--samples",
        "12",
        "--json",
        "-",
    ];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(text.contains("e0") || text.contains("e-"));
}

#[test]
fn json_file_output() {
    let path = temp("page.json");
    let out = run(&["page", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "page");
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
}
