//! End-to-end runs of the `subfree` binary.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn subfree(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_subfree"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(r: &Run) -> Value {
    let v: Value = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stdout));
    // Reports are canonical: re-serialising reproduces them exactly.
    assert_eq!(serde_json::to_string_pretty(&v).unwrap(), r.stdout.trim_end());
    v
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const TWO_TRIANGLES: &str = "6\n0 1\n1 2\n0 2\n2 3\n3 4\n4 5\n3 5\n";

#[test]
fn solve_fvs_json() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "g.txt", TWO_TRIANGLES);
    let r = subfree(&["solve", "fvs", s(&g), "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["problem"], "fvs");
    assert_eq!(v["value"], 2);
    assert_eq!(v["validation"]["ok"], true);

    let human = subfree(&["solve", "fvs", s(&g)]);
    assert!(human.stdout.contains("value: 2"));
}

#[test]
fn decisions_answered_no_exit_1() {
    let dir = TempDir::new().unwrap();
    let k4 = subfree(&["gen", "complete", "--n", "4"]).stdout;
    let g = file(&dir, "k4.txt", &k4);
    let r = subfree(&["solve", "colouring", s(&g), "--k", "3", "--json"]);
    assert_eq!(r.code, 1);
    assert_eq!(json(&r)["decision"], false);

    let r = subfree(&["solve", "ifvs", "--subcubic", s(&g)]);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout.trim(), "NO-IFVS(K4)");

    let r = subfree(&["oracle", "matchingcut", s(&g)]);
    assert_eq!(r.code, 1);
}

#[test]
fn subcubic_ifvs_prints_set() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "p.txt", &subfree(&["gen", "petersen"]).stdout);
    let r = subfree(&["solve", "ifvs", "--subcubic", s(&p)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("size: 3"));
    assert!(r.stdout.contains("degree3Only: true"));
}

#[test]
fn disconnected_matching_cut_is_invalid() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "g.txt", "4\n0 1\n2 3\n");
    let r = subfree(&["solve", "matchingcut", s(&g)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("connected"), "{}", r.stderr);
    let r = subfree(&["solve", "matchingcut", s(&g), "--json"]);
    assert_eq!(r.code, 2);
    assert_eq!(json(&r)["error"]["kind"], "validation");
}

#[test]
fn capacity_and_parse_errors() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k8.txt", &subfree(&["gen", "complete", "--n", "8"]).stdout);
    let r = subfree(&["oracle", "fvs", s(&g), "--oracle-cap", "5", "--json"]);
    assert_eq!(r.code, 3);
    let v = json(&r);
    assert_eq!(v["error"]["kind"], "capacity");
    assert_eq!(v["exit_code"], 3);

    let bad = file(&dir, "bad.txt", "3\n0 7\n");
    assert_eq!(subfree(&["solve", "fvs", s(&bad)]).code, 2);
    assert_eq!(subfree(&["solve", "fvs", "/nonexistent/graph.txt"]).code, 2);
    assert_eq!(subfree(&["solve", "colouring", s(&g)]).code, 2);
}

#[test]
fn reduce_writes_graph_and_sidecar() {
    let dir = TempDir::new().unwrap();
    let cnf = file(&dir, "f.cnf", "p cnf 2 3\n1 2 0\n1 -2 0\n2 -1 0\n");
    let out = dir.path().join("g.txt");
    let r = subfree(&["reduce", s(&cnf), "-o", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let sidecar: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("g.txt.json")).unwrap()).unwrap();
    assert_eq!(sidecar["threshold"], 8);
    assert_eq!(sidecar["literal_map"].as_array().unwrap().len(), 6);

    let r = subfree(&["check", s(&out), "--spider", "2,2,2,2"]);
    assert_eq!(r.stdout.trim(), "FREE");
    let r = subfree(&["check", s(&out), "--spider", "1,1,1,1"]);
    assert!(r.stdout.starts_with("CONTAINS"));

    let r = subfree(&["verify-reduction", s(&cnf), "--json"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = json(&r);
    assert_eq!(v["satisfiable"], true);
    assert_eq!(v["min_fvs"], 8);
}

#[test]
fn analyze_and_classify() {
    let dir = TempDir::new().unwrap();
    let k5 = file(&dir, "k5.txt", &subfree(&["gen", "complete", "--n", "5"]).stdout);
    let r = subfree(&["analyze", s(&k5), "--q", "2", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["decomposition"]["parts"][0]["kind"], "t_type");
    assert_eq!(v["structure"]["quadratic"]["status"], "holds");

    let h = file(&dir, "h.txt", &subfree(&["gen", "spider", "--spider", "2,2,2,2"]).stdout);
    let v = json(&subfree(&["classify-h", s(&h), "--json"]));
    let fvs = v["problems"].as_array().unwrap().iter().find(|p| p["problem"] == "fvs").unwrap();
    assert_eq!(fvs["complexity"], "np_complete");
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "g.txt", &subfree(&["gen", "block-bridge", "--n", "14", "--seed", "3"]).stdout);
    for problem in ["fvs", "ifvs", "cvc", "matchingcut"] {
        let a = subfree(&["solve", problem, s(&g), "--json"]);
        let b = subfree(&["solve", problem, s(&g), "--json"]);
        assert_eq!(a.stdout, b.stdout);
        json(&a);
    }
    let dot = subfree(&["gen", "cycle", "--n", "4", "--format", "dot"]).stdout;
    assert!(dot.starts_with("graph"));
}
