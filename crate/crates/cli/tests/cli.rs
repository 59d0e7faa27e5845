use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const SAMPLE_GRAPH: &str = "0 1\n1 2\n2 3\n3 4\n4 5\n4 6\n6 7\n6 8\n6 9\n9 10\n9 11\n9 12\n";
const SAMPLE_WALK: &str = "1 2 3 2 3 4 3 4 6\n";

fn irregwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_irregwalk")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn put(&self, name: &str, body: &str) -> String {
        let p: PathBuf = self.0.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    }
}

#[test]
fn verify_sample_walk() {
    let f = Files::new();
    let (g, w) = (f.put("g.txt", SAMPLE_GRAPH), f.put("w.txt", SAMPLE_WALK));
    let o = irregwalk(&["verify", "--graph", &g, "--walk", &w]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("length 8"));
}

#[test]
fn verify_reports_conflicts() {
    let f = Files::new();
    let (g, w) = (f.put("k3.txt", "0 1\n1 2\n0 2\n"), f.put("w.txt", ""));
    let o = irregwalk(&["verify", "--graph", &g, "--walk", &w, "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["conflicts"].as_array().unwrap().len(), 3);
    assert_eq!(v["schema"], 1);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let f = Files::new();
    let (g, w) = (f.put("g.txt", SAMPLE_GRAPH), f.put("w.txt", "1 2 x\n"));
    let o = irregwalk(&["verify", "--graph", &g, "--walk", &w]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
    assert_eq!(irregwalk(&["solve", "--gen", "path:4"]).status.code(), Some(2));
    assert_eq!(irregwalk(&["solve", "--gen", "complete:2", "--method", "exact"]).status.code(), Some(2));
}

#[test]
fn solve_path_closed_form() {
    let o = irregwalk(&["solve", "--gen", "path:10", "--method", "closed-form", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 10);
    assert_eq!(v["walk"].as_array().unwrap().len(), 11);
    assert!(v.get("time_ms").is_none());
}

#[test]
fn tree_and_exact_agree() {
    for seed in ["1", "2", "3"] {
        let get = |method: &str| {
            let o = irregwalk(&["solve", "--gen", "tree:11", "--seed", seed, "--method", method, "--json"]);
            let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
            v["value"].clone()
        };
        assert_eq!(get("tree"), get("exact"));
    }
}

#[test]
fn reports_are_reproducible() {
    let args = ["solve", "--gen", "gnp:9,0.35", "--seed", "5", "--method", "chromatic", "--json"];
    assert_eq!(stdout(&irregwalk(&args)), stdout(&irregwalk(&args)));
    let bench = ["bench", "--gen", "gnp:7,0.5", "--samples", "4", "--seed", "2", "--json"];
    let one = Command::new(env!("CARGO_BIN_EXE_irregwalk")).args(bench).env("IRREGWALK_WORKERS", "1").output().unwrap();
    assert_eq!(stdout(&one), stdout(&irregwalk(&bench)));
}

#[test]
fn exhausted_budget_is_negative() {
    let o = irregwalk(&["solve", "--gen", "cube", "--method", "exact", "--budget", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dot_export_counts_arcs() {
    let f = Files::new();
    let (g, w) = (f.put("g.txt", SAMPLE_GRAPH), f.put("w.txt", SAMPLE_WALK));
    let with_walk = stdout(&irregwalk(&["export-dot", "--graph", &g, "--walk", &w]));
    let plain = stdout(&irregwalk(&["export-dot", "--graph", &g]));
    let arcs = |s: &str| s.matches("->").count();
    assert_eq!(arcs(&with_walk), 12 + 8);
    assert_eq!(arcs(&plain), 12);
    assert!(with_walk.contains("label=\"8\""));
}

#[test]
fn solve_writes_dot() {
    let f = Files::new();
    let out = f.0.path().join("w.dot");
    let o = irregwalk(&["solve", "--gen", "cycle:6", "--method", "exact", "--dot", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(out).unwrap();
    assert_eq!(dot.matches("->").count(), 6 + 6);
}

#[test]
fn gadget_round_trip() {
    let f = Files::new();
    let out = f.0.path().join("gadget.txt");
    let o = irregwalk(&["gadget", "--gen", "kbip:3,3", "--exact", "--json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 81);
    assert_eq!(v["exact_value"], 6);
    assert_eq!(v["exact_restriction_hamiltonian"], true);
    let g = irregwalk_core::io::parse_edge_list(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(g.n(), 81);
    assert_eq!(irregwalk(&["gadget", "--gen", "complete:3"]).status.code(), Some(2));
}

#[test]
fn normalize_path_walk() {
    let f = Files::new();
    let w = f.put("w.txt", "3 4 3 4 5 4 5 6\n");
    let o = irregwalk(&["normalize", "--gen", "path:8", "--walk", &w, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["path"]["low"], 3);
    assert_eq!(v["path"]["high"], 6);
    assert_eq!(v["path"]["parity_conditions"], true);
    assert_eq!(v["admissible"], true);
}

#[test]
fn bench_flags_nothing_on_spiders() {
    let o = irregwalk(&["bench", "--gen", "spider:3..4,2..4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("counterexamples to ML <= 3m: 0"));
    assert!(s.contains("bound violations: 0"));
}
