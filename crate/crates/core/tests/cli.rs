use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn cfa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfa")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let o = cfa(&all);
    let v = serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)));
    (code(&o), v)
}

#[test]
fn check_builtin_passes() {
    let (c, v) = json(&["check", "-a", "vir"]);
    assert_eq!(c, 0);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn check_reports_violation_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.cfa");
    fs::write(&p, "algebra bad {\n  even a, b;\n  [a 0 a] = d b;\n  [a 1 a] = 2 b;\n  [b 0 b] = d b;\n  [b 1 b] = 2 b;\n}\n").unwrap();
    let (c, v) = json(&["check", "-a", p.to_str().unwrap()]);
    assert_eq!(c, 1);
    assert_eq!(v["status"], "fail");
    assert!(v["violations"].as_array().unwrap().iter().all(|x| x["axiom"] == "jacobi"), "{v}");
    let skew = dir.path().join("skew.cfa");
    fs::write(&skew, "algebra bad {\n  even L;\n  [L 0 L] = d L;\n  [L 1 L] = 3 L;\n}\n").unwrap();
    assert_eq!(code(&cfa(&["check", "-a", skew.to_str().unwrap()])), 2);
}

#[test]
fn unknown_inputs_exit_2() {
    let o = cfa(&["check", "-a", "no-such-algebra"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("broken.cfa");
    fs::write(&p, "algebra x {\n  even L;\n  [L 0 Q] = L;\n}\n").unwrap();
    let o = cfa(&["check", "-a", p.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("3:"), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn table_round_trips_through_a_file() {
    let o = cfa(&["table", "-a", "w1"]);
    assert_eq!(code(&o), 0);
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("w1.cfa");
    fs::write(&p, &o.stdout).unwrap();
    let (c, _) = json(&["check", "-a", p.to_str().unwrap()]);
    assert_eq!(c, 0);
    let (_, a) = json(&["table", "-a", "w1"]);
    let (_, b) = json(&["table", "-a", p.to_str().unwrap()]);
    assert_eq!(a["products"], b["products"]);
}

#[test]
fn simplicity_exit_codes() {
    let (c, v) = json(&["simple", "-a", "current-gl2"]);
    assert_eq!(c, 1);
    assert!(v["ideal"].is_object() || v["ideal"].is_array(), "{v}");
    assert_eq!(code(&cfa(&["simple", "-a", "vir"])), 0);
}

#[test]
fn structure_verdicts() {
    assert_eq!(code(&cfa(&["nilpotent", "-a", "current-h3"])), 0);
    assert_eq!(code(&cfa(&["solvable", "-a", "current-borel"])), 0);
    assert_eq!(code(&cfa(&["solvable", "-a", "vir"])), 1);
}

#[test]
fn h2_and_extension() {
    let (c, v) = json(&["h2", "-a", "vir"]);
    assert_eq!(c, 0);
    assert_eq!(v["dim"], 1);
    let dir = tempfile::tempdir().unwrap();
    let coc = dir.path().join("c.cfa");
    fs::write(&coc, "cocycle virc over vir {\n  (L 3 L) = 1/12;\n}\n").unwrap();
    let out = dir.path().join("ext.cfa");
    let o = cfa(&["extend", "-a", "vir", "--cocycle", coc.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let (c, _) = json(&["check", "-a", out.to_str().unwrap()]);
    assert_eq!(c, 0);
    let (_, t) = json(&["table", "-a", out.to_str().unwrap()]);
    assert_eq!(t["generators"].as_array().unwrap().len(), 2);
    let p3 = t["products"].as_array().unwrap().iter().find(|p| p["n"] == 3).expect("3-product");
    assert_eq!(p3["rhs"]["C"][0]["re"], "1/12");
}

#[test]
fn modes_window() {
    let (c, v) = json(&["modes", "-a", "vir", "--window", "-3..3", "--check-jacobi"]);
    assert_eq!(c, 0);
    assert_eq!(v["status"], "pass");
    let (c, _) = json(&["modes", "-a", "vir", "--module", "mad:1/2:2", "--check-jacobi"]);
    assert_eq!(c, 0);
}

#[test]
fn module_commands() {
    assert_eq!(code(&cfa(&["module", "check", "-m", "mad:1/2:2"])), 0);
    assert_eq!(code(&cfa(&["module", "irreducible", "-m", "mad:1:2"])), 0);
    assert_eq!(code(&cfa(&["module", "irreducible", "-m", "mad:1:0"])), 1);
    assert_eq!(code(&cfa(&["module", "split", "-m", "ext-torsion:0:1"])), 1);
    let (c, v) = json(&["module", "to-gc", "-m", "mad:0:1"]);
    assert_eq!(c, 0);
    assert_eq!(v["faithful"], true);
    assert_eq!(code(&cfa(&["module", "check", "-m", "mad:q:1"])), 2);
}
