use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_coalg-lab"));
    c.env_remove("COALG_LAB_BUDGET");
    c
}

fn specs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write_spec(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report on stdout")
}

fn check<'a>(r: &'a Value, target: &str, name: &str) -> &'a Value {
    r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["target"] == target && c["check"] == name)
        .unwrap_or_else(|| panic!("no {target}/{name}"))
}

#[test]
fn divided_power_spec_passes() {
    let spec = specs_dir().join("divided_power_5.json");
    let out = run(&["run", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let dims: Vec<u64> = check(&r, "dc5", "coradical_filtration")["result"]["dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d.as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 2, 3, 4, 5, 6]);
    assert_eq!(r["status"], "pass");
}

#[test]
fn repeated_simple_comodule_exits_with_a_stephenson_witness() {
    let spec = specs_dir().join("repeated_simple_gf2.json");
    let out = run(&["run", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let c = check(&r, "dc1", "is_distributive");
    assert_eq!(c["status"], "fail");
    assert_eq!(c["witness"]["witnesses"][0]["kind"], "stephenson");
    assert_eq!(c["witness_revalidated"], true);
    // the coproduct has two non-isomorphic simples and stays distributive
    assert_eq!(check(&r, "dc1_dc1", "is_distributive")["verdict"], "yes");
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let unknown = write_spec(
        dir.path(),
        "unknown.json",
        r#"{"field": "Q", "constructions": [{"name": "x", "kind": "hopf_algebra"}]}"#,
    );
    let out = run(&["run", unknown.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hopf_algebra"));

    let bad = write_spec(
        dir.path(),
        "bad.json",
        r#"{"field": "Q", "constructions": [{"name": "x", "kind": "divided_power", "params": {"n": -1}}]}"#,
    );
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("constructions[0].params.n"));

    let field = write_spec(dir.path(), "field.json", r#"{"field": "GF(4)", "constructions": []}"#);
    assert_eq!(run(&["run", field.to_str().unwrap()]).status.code(), Some(2));

    let missing = dir.path().join("absent.json");
    assert_eq!(run(&["run", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn validate_and_explain() {
    let spec = specs_dir().join("golden_tables.json");
    let out = run(&["validate", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok: 10 constructions"));

    let out = run(&["explain", "cotensor_truncated"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"automorphism\""));
    let out = run(&["explain", "verify"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["explain", "cofree"]).status.code(), Some(2));
}

#[test]
fn quiver_files() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "quivers.json",
        r#"{"field": "GF(3)",
            "constructions": [
              {"name": "dc2", "kind": "divided_power", "params": {"n": 2}},
              {"name": "three", "kind": "truncated_path_coalgebra", "params": {"quiver": {"isolated": 3}, "n": 0}},
              {"name": "a2", "kind": "truncated_path_coalgebra", "params": {"quiver": "a2", "n": 1}}
            ],
            "analyses": [
              {"target": "dc2", "checks": ["ext_quiver"]},
              {"target": "three", "checks": ["ext_quiver"]},
              {"target": "a2", "checks": ["ext_quiver"]}
            ],
            "outputs": {"quivers": {"a2": "path.dot"}}}"#,
    );
    let out_dir = dir.path().join("out");
    let out = run(&["run", spec.to_str().unwrap(), "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(
        fs::read_to_string(out_dir.join("dc2.dot")).unwrap(),
        "digraph ext_quiver {\n  S0 [label=\"S0:dim1\"];\n  S0 -> S0;\n}\n"
    );
    let three = fs::read_to_string(out_dir.join("three.dot")).unwrap();
    assert_eq!(three.matches("[label=").count(), 3);
    assert!(!three.contains("->"));
    let a2 = fs::read_to_string(out_dir.join("path.dot")).unwrap();
    assert_eq!(a2.matches("[label=").count(), 2);
    assert_eq!(a2.matches("->").count(), 1);
    assert!(a2.contains("S0 -> S1;"));
    let r: Value = serde_json::from_str(&fs::read_to_string(out_dir.join("report.json")).unwrap()).unwrap();
    assert_eq!(r["quivers"].as_array().unwrap().len(), 3);
}

#[test]
fn small_budget_degrades() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "budget.json",
        r#"{"field": "GF(2)",
            "constructions": [{"name": "dc3", "kind": "divided_power", "params": {"n": 3}}],
            "analyses": [{"target": "dc3", "checks": ["is_distributive"]}]}"#,
    );
    let path = spec.to_str().unwrap();
    assert_eq!(run(&["run", path]).status.code(), Some(0));
    let out = run(&["run", path, "--budget", "4"]);
    assert_eq!(out.status.code(), Some(3));
    let r = report(&out);
    assert_eq!(r["budget"], 4);
    assert_eq!(check(&r, "dc3", "is_distributive")["partial"], true);

    let out = bin().args(["run", path]).env("COALG_LAB_BUDGET", "4").output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = bin().args(["run", path, "--budget", "64"]).env("COALG_LAB_BUDGET", "4").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = bin().args(["run", path]).env("COALG_LAB_BUDGET", "lots").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_table_fails_with_axiom_witness() {
    let dir = tempfile::tempdir().unwrap();
    // Δ(e0) = e0⊗e0, Δ(e1) = e0⊗e0 breaks the counit law
    let spec = write_spec(
        dir.path(),
        "table.json",
        r#"{"field": "Q",
            "constructions": [{"name": "c", "kind": "coalgebra_table", "params": {"table": {
              "field": "Q", "dim": 2, "counit": ["1", "0"],
              "comult": [[["1", "0"], ["0", "0"]], [["1", "0"], ["0", "0"]]]}}}],
            "analyses": [{"target": "c", "checks": ["verify", "is_chain"]}]}"#,
    );
    let out = run(&["run", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let v = check(&r, "c", "verify");
    assert_eq!(v["witness"]["kind"], "axiom_violations");
    assert_eq!(v["witness_revalidated"], true);
    assert_eq!(check(&r, "c", "is_chain")["status"], "fail");
}
