use std::collections::BTreeMap;
use std::process::{Command, Output};

use jack_laurent::laurent::TermJson;
use jack_laurent::Lsf;
use serde::{Deserialize, Serialize};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jack-laurent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_p11_json() {
    let o = run(&["compute", "--lambda", "1", "--mu", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["alpha"]["lambda"], serde_json::json!([1]));
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["coeff"], "(p0)/(-1 - k + k*p0)");
    assert_eq!(terms[1]["exponents"], serde_json::json!({"-1": 1, "1": 1}));
    assert_eq!(v["eigenvalues"]["1"], "0");
    assert_eq!(v["provenance"], serde_json::json!(["mu+(1,1)", "lambda+(1,1)"]));
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComputeJson {
    alpha: AlphaJson,
    terms: Vec<TermJson>,
    eigenvalues: BTreeMap<String, String>,
    provenance: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlphaJson {
    lambda: Vec<usize>,
    mu: Vec<usize>,
}

#[test]
fn compute_json_round_trips() {
    let o = run(&["compute", "--lambda", "1,1", "--mu", "1", "--format", "json"]);
    let text = stdout(&o);
    let v: ComputeJson = serde_json::from_str(&text).unwrap();
    let mut again = serde_json::to_string_pretty(&v).unwrap();
    again.push('\n');
    assert_eq!(again, text);
    let f = Lsf::from_json(&v.terms).unwrap();
    assert_eq!(f.to_json(), v.terms);
    assert_eq!(
        f,
        Lsf::parse("(1/2)*p1^2*p-1 - (1/2)*p2*p-1 + (p0 - 1)/(k*p0 - 2*k - 1)*p1").unwrap()
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["compute", "--lambda", "2", "--mu", "1", "--format", "json"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn pole_exits_with_singular_code() {
    let o = run(&["compute", "--lambda", "1", "--mu", "1", "--k", "1", "--p0", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["compute", "--lambda", "1", "--k", "2"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--lambda", "1,2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["finite-n", "--chi", "1,0", "--N", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["compute", "--mode", "rational", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--k"));
}

#[test]
fn rational_mode_matches_specialization() {
    let base = [
        "compute", "--lambda", "2,1", "--mu", "1", "--k", "-2/3", "--p0", "5", "--format", "json",
    ];
    let sym = stdout(&run(&base));
    let mut rat = base.to_vec();
    rat.extend(["--mode", "rational"]);
    assert_eq!(stdout(&run(&rat)), sym);
}

#[test]
fn verify_suites_pass() {
    for (suite, size) in [("pieri", "3"), ("schur", "4"), ("eigen", "2")] {
        let o = run(&["verify", "--suite", suite, "--max-size", size, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn eigen_suite_reports_table() {
    let o = run(&["verify", "--suite", "eigen", "--max-size", "2"]);
    assert!(stdout(&o).contains("PASS eigen/eigenvalues_r_le_3"));
}

#[test]
fn finite_n_example() {
    let o = run(&[
        "finite-n", "--chi", "1,0,-1", "--N", "3", "--k", "-1", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"], serde_json::json!([[[1, 0, -1], "1"], [[0, 0, 0], "2"]]));
    assert_eq!(v["norm"], v["torus_norm"]);
}

#[test]
fn formulas() {
    let o = run(&["formula", "e", "--lambda", "1", "--mu", "1"]);
    assert_eq!(stdout(&o).trim(), "2 + 2*k - 2*k*p0");
    let o = run(&["formula", "v", "--lambda", "1", "--box", "1,2", "--k", "-1/2"]);
    assert_eq!(stdout(&o).trim(), "1");
    assert_eq!(run(&["formula", "hc", "--lambda", "1"]).status.code(), Some(2));
}

#[test]
fn schur_and_pieri_and_eval() {
    let o = run(&["schur", "--lambda", "1", "--mu", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(-1) + p-1*p1");
    assert_eq!(run(&["pieri", "--lambda", "1", "--mu", "1"]).status.code(), Some(0));
    assert_eq!(run(&["eval", "--lambda", "2", "--mu", "1"]).status.code(), Some(0));
    let o = run(&[
        "norm", "--lambda", "1", "--mu", "1", "--k", "-1", "--p0", "3", "--torus",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn apply_op_on_text() {
    let o = run(&["apply-op", "--op", "L", "--r", "1", "--element", "p2*p-1"]);
    assert_eq!(stdout(&o).trim(), "p-1*p2");
    let o = run(&["apply-op", "--op", "H", "--r", "2", "--element", "p-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn conjectures_write_report() {
    let path = std::env::temp_dir().join(format!("jl-report-{}.json", std::process::id()));
    let o = run(&["conjectures", "--max-size", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["max_size"], 2);
    assert_eq!(v["reports"].as_array().unwrap().len(), 4);
    let _ = std::fs::remove_file(path);
}
