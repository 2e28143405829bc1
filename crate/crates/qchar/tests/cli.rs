use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn qchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qchar")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qchar-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn normal_forms() {
    let o = qchar(&["nf", "builtin:T", "Y*X"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q^(-1)*X*Y + (q - q^(-1))*Z");
    assert_eq!(stdout(&qchar(&["nf", "builtin:Oq-sigma", "a.2.2 * a.1.2"])).trim(), "q^2*a.1.2*a.2.2");
    assert_eq!(stdout(&qchar(&["nf", "builtin:Oq-sigma", "1"])).trim(), "1");
    assert_eq!(qchar(&["nf", "builtin:T", "W*X"]).status.code(), Some(2));
    assert_eq!(qchar(&["nf", "builtin:T", "X +"]).status.code(), Some(2));
    assert_eq!(qchar(&["nf", "builtin:Nope", "X"]).status.code(), Some(2));
}

#[test]
fn confluence_exit_codes() {
    let o = qchar(&["confluence", "builtin:Oq-sigma"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("8 ambiguities (8 overlap, 0 inclusion)"));
    assert_eq!(qchar(&["confluence", "builtin:GB", "--family-bound", "3"]).status.code(), Some(0));
    assert_eq!(qchar(&["confluence", "builtin:Oq-tau-printed"]).status.code(), Some(1));
    assert_eq!(qchar(&["confluence", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn corrupted_file_reports_a_witness() {
    let text = stdout(&qchar(&["print", "builtin:T"]));
    let bad = text.replace("rule ZY: Z*Y -> q^(-1)*Y*Z + (-q^(-2) + q^(-4))*X", "rule ZY: Z*Y -> Y*Z + X");
    assert_ne!(bad, text);
    let p = scratch("bad_t.qp", &bad);
    let o = qchar(&["confluence", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL") && out.contains("left:") && out.contains("right:"));
    let good = scratch("good_t.qp", &text);
    assert_eq!(qchar(&["confluence", good.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn morphisms() {
    let o = qchar(&["check-hom", "builtin:Phi"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("REL") && l.ends_with("OK")).count(), 4);
    assert_eq!(qchar(&["check-hom", "builtin:beta"]).status.code(), Some(0));
    let defn = qchar(&["check-hom", "builtin:GE-variant-defn"]).status.code();
    let summary = qchar(&["check-hom", "builtin:GE-variant-summary"]).status.code();
    assert_eq!((defn, summary), (Some(0), Some(1)));
    assert_eq!(qchar(&["check-hom", "builtin:nothing"]).status.code(), Some(2));
}

#[test]
fn morphism_files() {
    let text = stdout(&qchar(&["print", "builtin:gamma"]));
    assert!(text.starts_with("morphism gamma\n"));
    let p = scratch("gamma.qm", &text);
    assert_eq!(qchar(&["check-hom", p.to_str().unwrap()]).status.code(), Some(0));
    let bad = scratch("gamma_bad.qm", &text.replace("scalar q -> q^2", "scalar q -> q"));
    assert_eq!(qchar(&["check-hom", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn hilbert_series() {
    let o = qchar(&["hilbert", "s04", "--max-t", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().filter(|l| l.contains(':')).all(|l| l.contains("1, 3, 9, 20, 42")));
    assert!(out.trim_end().ends_with("PASS"));
    let out = stdout(&qchar(&["hilbert", "t11", "--max-t", "6"]));
    assert!(out.contains("counted:           1, 2, 4, 6, 9, 12, 16"));
    let o = qchar(&["hilbert", "t11", "--max-t", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().next().unwrap().ends_with(" 1"));
    assert_eq!(qchar(&["hilbert", "t11", "--max-t", "17"]).status.code(), Some(2));
}

#[test]
fn suite_subsets_and_missing_entries() {
    let o = qchar(&["suite", "--only", "confluence"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 5);
    assert!(out.contains("5/5 criteria pass"));
    assert_eq!(qchar(&["suite", "--only", "3", "--without", "T"]).status.code(), Some(2));
    assert_eq!(qchar(&["suite", "--only", "bogus"]).status.code(), Some(2));
}

#[test]
fn full_suite_reports_the_two_obstructions() {
    let o = qchar(&["suite"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let fails: Vec<&str> = out.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(fails.len(), 2, "{}", out);
    assert!(fails[0].starts_with("FAIL  7") && fails[1].starts_with("FAIL  8"));
    assert!(out.contains("12/14 criteria pass"));
}

#[test]
fn json_output() {
    let o = qchar(&["--format", "json", "hilbert", "t11", "--max-t", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["rows"][0]["coeffs"], serde_json::json!([1, 2, 4, 6]));
    let o = qchar(&["confluence", "builtin:T", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["overlaps"], 1);
}

#[test]
fn build_and_list() {
    let o = qchar(&["build", "--pattern", "1,3,2,4", "--det", "printed", "--name", "A-t11"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), stdout(&qchar(&["print", "builtin:A-t11"])));
    let p = scratch("s04.qp", &stdout(&qchar(&["build", "--pattern", "1,2,3,4,5,6"])));
    assert_eq!(qchar(&["confluence", p.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(qchar(&["build", "--pattern", "1,2,1,2"]).status.code(), Some(2));
    let list = stdout(&qchar(&["--list"]));
    for n in ["Oq-sigma", "Oq-tau", "A-s04", "A-t11", "B", "T", "GB", "Sk-s04", "Sk-t11", "SH-A1", "SH-CC1", "Usu2", "Ab-s04", "Ab-t11"] {
        assert!(list.lines().any(|l| l.split_whitespace().next() == Some(n)), "{}", n);
    }
    for n in ["Phi", "Psi", "alpha", "beta", "gamma", "delta", "iota", "kappa", "mu", "nu"] {
        assert!(list.lines().any(|l| l.split_whitespace().next() == Some(n)), "{}", n);
    }
    assert_eq!(qchar(&[]).status.code(), Some(2));
}
