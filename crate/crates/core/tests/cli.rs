use std::process::{Command, Output};

use serde_json::Value;

fn sylvdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sylvdet")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = sylvdet(&all);
    (code(&o), serde_json::from_slice(&o.stdout).expect("valid JSON"))
}

#[test]
fn eval_sylvester_d() {
    let o = sylvdet(&["eval", "--family", "sylvester-d", "--dim", "4"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("closed form: (t+3)(t+1)(t-1)(t-3)"), "{s}");
    assert!(s.contains("match: true"));
}

#[test]
fn eval_krawtchouk() {
    let o = sylvdet(&["eval", "--family", "krawtchouk", "--dim", "3", "--param", "p=1/3"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("closed form: t(t+1)(t+2)"), "{s}");
    assert!(s.contains("t = λ(x) = -x"));
}

#[test]
fn eval_dual_hahn_dim1() {
    let o = sylvdet(&["eval", "--family", "dual-hahn", "--dim", "1", "--param", "gamma=1/2", "--param", "delta=1/3"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("closed form: t\n"), "{s}");
    assert!(s.contains("-x(x + 11/6)"), "{s}");
}

#[test]
fn verify_paper_literal_dual_hahn_fails() {
    let o = sylvdet(&["verify", "--family", "dual-hahn", "--dim", "1", "--paper-literal"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("degree 2 vs 1"));
}

#[test]
fn verify_sylvester_a_sweep() {
    let (c, v) = json(&["verify", "--family", "sylvester-a", "--max-dim", "12"]);
    assert_eq!(c, 0);
    assert_eq!(v["summary"]["total"], 12);
    assert!(v["cases"].as_array().unwrap().iter().all(|c| c["a_family"] == true));
}

#[test]
fn verify_exit_code_matches_summary() {
    let (c, v) = json(&["verify", "--family", "q-racah", "--dims", "2..3", "--paper-literal", "--samples", "2"]);
    assert_eq!(c, 1);
    assert!(v["summary"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn reduce_trace_sylvester_d() {
    let o = sylvdet(&["reduce", "--family", "sylvester-d", "--dim", "3", "--trace"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("leading eigenvalues: [2, -2] ok"), "{s}");
    assert!(s.contains("  M:\n    [ 0 ]"), "{s}");
}

#[test]
fn reduce_unsupported_exits_2() {
    for family in ["hahn", "racah", "sylvester-a"] {
        let o = sylvdet(&["reduce", "--family", family, "--dim", "4"]);
        assert_eq!(code(&o), 2, "{family}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("no block reduction"));
    }
}

#[test]
fn reduce_qracah_echoes_shift() {
    let (c, v) = json(&["reduce", "--family", "q-racah", "--dim", "3", "--seed", "7"]);
    assert_eq!(c, 0);
    let case = &v["cases"][0];
    assert_eq!(case["zero_block"], "lower-left");
    assert!(case["shift"]["scale"].is_string());
    assert!(case["shift"]["offset"].is_string());
    assert!(case.get("witness").is_none());
}

#[test]
fn identity_sweep_and_variants() {
    let o = sylvdet(&["identity", "--max-n", "8", "--trials", "20", "--seed", "7"]);
    assert_eq!(code(&o), 0);
    let o = sylvdet(&["identity", "--trials", "0"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("vacuous"));
    assert!(stdout(&o).contains("vacuous"));
    let o = sylvdet(&["identity", "--variant", "cN1", "--max-n", "3"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn tables() {
    let s = stdout(&sylvdet(&["table", "--family", "sylvester-a", "--dims", "1..3"]));
    let rows: Vec<&str> = s.lines().skip(1).map(|l| l.split('\t').nth(3).unwrap()).collect();
    assert_eq!(rows, ["t", "(t-1)^2", "(t-2)^3"]);
    let s = stdout(&sylvdet(&["table", "--family", "krawtchouk", "--dims", "1..2"]));
    let rows: Vec<&str> = s.lines().skip(1).map(|l| l.split('\t').nth(3).unwrap()).collect();
    assert_eq!(rows, ["t", "t(t+1)"]);
}

#[test]
fn golden_table() {
    let o = sylvdet(&["table", "--family", "sylvester-d", "--dims", "1..6"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), include_str!("golden/table_sylvester_d_1_6.txt"));
}

#[test]
fn json_shape_and_determinism() {
    let args = ["verify", "--family", "all", "--max-dim", "4", "--samples", "2", "--seed", "5", "--format", "json"];
    let a = sylvdet(&args);
    let b = sylvdet(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    for key in ["command", "config", "cases", "summary"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["command"], "verify");
    let case = &v["cases"][0];
    for key in ["family", "dim", "params", "charpoly", "closed_form", "oracle", "closed_match", "oracle_match"] {
        assert!(case.get(key).is_some(), "{key}");
    }
    for c in v["cases"].as_array().unwrap() {
        assert!(c["charpoly"].as_array().unwrap().iter().all(Value::is_string));
    }
    // order: family, then dim, then seed
    let keys: Vec<(String, u64)> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["family"].as_str().unwrap().to_string(), c["dim"].as_u64().unwrap()))
        .collect();
    assert_eq!(keys.first().unwrap().0, "sylvester-d");
    assert!(keys.windows(2).all(|w| w[0].0 != w[1].0 || w[0].1 <= w[1].1));
}

#[test]
fn out_path() {
    let dir = std::env::temp_dir().join(format!("sylvdet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.txt");
    let o = sylvdet(&["table", "--family", "sylvester-d", "--dims", "1..6", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), include_str!("golden/table_sylvester_d_1_6.txt"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["eval", "--family", "nope", "--dim", "2"],
        &["eval", "--family", "krawtchouk", "--dim", "2", "--param", "p=1/0"],
        &["eval", "--family", "krawtchouk", "--dim", "2", "--param", "q=1/3"],
        &["eval", "--family", "sylvester-d"],
        &["eval", "--family", "all", "--dim", "2"],
        &["eval", "--family", "sylvester-d", "--dim", "0"],
        &["eval", "--family", "hahn", "--dim", "3", "--param", "alpha=-1", "--param", "beta=0"],
        &["verify", "--dim", "2", "--max-dim", "3"],
        &["verify", "--samples", "0"],
        &["identity", "--dim", "3"],
        &["bogus"],
        &["verify", "--family", "racah", "--dim", "3", "--paper-literal"],
        &["reduce", "--family", "sylvester-d", "--dim", "2"],
    ];
    for args in cases {
        assert_eq!(code(&sylvdet(args)), 2, "{args:?}");
    }
}
