mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::*;
use domsum::{parse_graph6, Graph};
use serde_json::Value;

const GOLDEN: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden");

fn domsum(args: &[&str]) -> Output {
    domsum_with_env(args, None)
}

fn domsum_with_env(args: &[&str], cap: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_domsum"));
    cmd.args(args).env_remove("DOMSUM_CAP");
    if let Some(cap) = cap {
        cmd.env("DOMSUM_CAP", cap);
    }
    cmd.output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    if let Some(t) = v.get_mut("wall_time_seconds") {
        *t = Value::from(0.0);
    }
    v
}

fn golden(name: &str) -> Value {
    let text = std::fs::read_to_string(Path::new(GOLDEN).join(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn json_outputs_match_golden_files() {
    let cases: &[(&[&str], &str)] = &[
        (&["count", "--family", "cycle:5", "--json"], "count_cycle5.json"),
        (&["count", "--family", "star:4", "--json"], "count_star4.json"),
        (&["count", "--g6", "D?{", "--json"], "count_g6_star.json"),
        (&["bounds", "--family", "cycle:5", "--json"], "bounds_cycle5.json"),
        (&["edge-moves", "--family", "cycle:5", "--json"], "edge_moves_cycle5.json"),
        (&["induction", "--family", "star:3", "--json"], "induction_star3.json"),
        (&["multipartite", "--n", "5", "--json"], "multipartite_5.json"),
        (&["gap", "--n-min", "4", "--n-max", "5", "--json"], "gap_4_5.json"),
        (&["verify", "--n", "5", "--json"], "verify_5.json"),
    ];
    for (args, file) in cases {
        assert_eq!(json(&domsum(args)), golden(file), "{args:?}");
    }
}

#[test]
fn golden_numbers_agree_with_oracle() {
    for file in ["count_cycle5.json", "count_star4.json", "count_g6_star.json"] {
        let v = golden(file);
        let g = parse_graph6(v["graph"].as_str().unwrap()).unwrap();
        assert_eq!(v["sum"].as_u64().unwrap() as u128, domination_sum(&g));
        assert_eq!(v["upsilon"].as_u64().unwrap() as u128, naive_upsilon(&g));
    }
    assert_eq!(golden("count_cycle5.json")["sum"], 42);
    assert_eq!(golden("count_star4.json")["sum"], 32);

    let moves = golden("edge_moves_cycle5.json");
    let base = parse_graph6(moves["base"].as_str().unwrap()).unwrap();
    for m in moves["moves"].as_array().unwrap() {
        let (u, v) = (m["u"].as_u64().unwrap() as usize, m["v"].as_u64().unwrap() as usize);
        let mut h = base.clone();
        h.toggle_edge(u, v);
        assert_eq!(m["sum"].as_u64().unwrap() as u128, domination_sum(&h));
    }

    let verify = golden("verify_5.json");
    assert_eq!(verify["current_max"], 44);
    assert_eq!(verify["witnesses"].as_array().unwrap().len(), 2);
}

#[test]
fn input_paths_agree() {
    let g6 = json(&domsum(&["count", "--g6", "D?{", "--json"]));
    let edges = json(&domsum(&["count", "--n", "5", "--edges", "0-4,1-4,2-4,3-4", "--json"]));
    assert_eq!(g6, edges);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.g6");
    std::fs::write(&file, "D?{\n").unwrap();
    let from_file = json(&domsum(&["count", "--file", file.to_str().unwrap(), "--json"]));
    assert_eq!(g6, from_file);
}

#[test]
fn human_output_uses_plain_integers() {
    let out = domsum(&["count", "--family", "bipartite:13,13"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let expected = 2 * ((1u128 << 13) - 1) * ((1u128 << 13) - 1) + 2;
    assert!(text.contains(&format!("sum         {expected} = 2^26 + ")), "{text}");
    assert!(!text.contains("e+"));

    let out = domsum(&["bounds", "--family", "bipartite:5,5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("conjecture_value   1924"), "{text}");
    assert!(text.contains("theorem1_bound     2000"), "{text}");
    assert!(text.contains("] ok"), "{text}");

    let text = String::from_utf8(domsum(&["bounds", "--family", "star:9"]).stdout).unwrap();
    assert!(text.contains("violated"), "{text}");
}

#[test]
fn parse_errors_exit_2_and_name_the_token() {
    for (args, needle) in [
        (vec!["count", "--family", "wheel:5"], "wheel"),
        (vec!["count", "--family", "cycle:x"], "\"x\""),
        (vec!["count", "--g6", "D!!"], "graph6"),
        (vec!["count", "--n", "3", "--edges", "0-1,1~2"], "1~2"),
        (vec!["count", "--n", "3", "--edges", "0-3"], "3"),
        (vec!["count"], "required"),
        (vec!["count", "--family", "cycle:5", "--g6", "D?{"], "cannot be used"),
        (vec!["frobnicate"], "unrecognized"),
    ] {
        let out = domsum(&args);
        assert_eq!(code(&out), 2, "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn bad_file_line_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.g6");
    std::fs::write(&file, "C~\nC!!\n").unwrap();
    let out = domsum(&["verify", "--n", "4", "--g6-file", file.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));
}

#[test]
fn cap_violations_exit_3() {
    assert_eq!(code(&domsum(&["count", "--family", "empty:27"])), 3);
    assert_eq!(code(&domsum_with_env(&["count", "--family", "cycle:5"], Some("4"))), 3);
    assert_eq!(code(&domsum_with_env(&["count", "--family", "empty:27"], Some("27"))), 0);
    assert_eq!(code(&domsum_with_env(&["count", "--family", "cycle:5"], Some("lots"))), 2);
    let out = domsum_with_env(&["bounds", "--family", "cycle:5"], Some("4"));
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout).unwrap().contains("above counting cap"));
}

#[test]
fn checkpoint_mismatch_exits_5() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("run.ckpt");
    let c = ckpt.to_str().unwrap();
    assert_eq!(code(&domsum(&["verify", "--n", "5", "--checkpoint", c])), 0);
    assert_eq!(code(&domsum(&["verify", "--n", "5", "--checkpoint", c])), 0);
    assert_eq!(code(&domsum(&["verify", "--n", "6", "--checkpoint", c])), 5);
    assert_eq!(code(&domsum(&["verify", "--n", "5", "--mode", "discover", "--checkpoint", c])), 5);
}

#[test]
fn unwritable_checkpoint_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("missing").join("run.ckpt");
    let out = domsum(&["verify", "--n", "4", "--checkpoint", ckpt.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8(out.stderr).unwrap().contains("checkpoint"));
}

#[test]
fn worker_count_gives_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for workers in ["1", "2", "8"] {
        let path = dir.path().join(format!("report{workers}.json"));
        let out = domsum(&["verify", "--n", "6", "--workers", workers, "--chunk-size", "16", "--report", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        v["wall_time_seconds"] = Value::from(0.0);
        reports.push(serde_json::to_string_pretty(&v).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[0], reports[2]);
}

#[test]
fn verify_sources_and_modes() {
    let v = json(&domsum(&["verify", "--n", "6", "--json"]));
    assert_eq!(v["current_max"], 100);
    assert_eq!(v["matched"], true);
    let witnesses: Vec<Graph> = v["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| parse_graph6(w.as_str().unwrap()).unwrap())
        .collect();
    let h = Graph::complete_bipartite(3, 3).unwrap();
    assert!(witnesses.iter().any(|w| domsum::canon::are_isomorphic(w, &h)));
    assert!(witnesses.iter().any(|w| domsum::canon::are_isomorphic(w, &h.complement())));

    let labeled = json(&domsum(&["verify", "--n", "5", "--labeled", "--pair-complements", "--no-prune", "--json"]));
    assert_eq!(labeled["current_max"], 44);
    assert_eq!(labeled["graphs_pruned"], 0);
    assert_eq!(labeled["graphs_seen"], 512);

    let discover = json(&domsum(&["verify", "--n", "5", "--mode", "discover", "--json"]));
    assert_eq!(discover["current_max"], 44);
    assert_eq!(discover["mode"], "discover");
}
