use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

use serde_json::Value;

fn scratch(contents: &str) -> PathBuf {
    static NEXT: AtomicUsize = AtomicUsize::new(0);
    let k = NEXT.fetch_add(1, Ordering::Relaxed);
    let path = std::env::temp_dir().join(format!("tecc-cli-{}-{k}.txt", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn tecc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tecc")).args(args).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn k23_verifies_and_is_three_edge_connected() {
    let f = scratch("c K2^3\np 2 3\ne 1 2\ne 1 2\ne 1 2\n");
    let out = tecc(&["decompose", "--json", "--certify", "--verify", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["is_three_edge_connected"], Value::Bool(true));
    let cert = v["components"][0]["certificate"].as_array().unwrap();
    assert_eq!(cert.len(), 2);
    assert_eq!(cert[0]["tag"], "K23_SEED");
}

#[test]
fn path_lists_bridges() {
    let f = scratch("p 3 2\ne 1 2\ne 2 3\n");
    let out = tecc(&["decompose", "--json", "--verify", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["is_three_edge_connected"], Value::Bool(false));
    assert_eq!(v["bridges"], serde_json::json!([[0, 1, 0], [1, 2, 1]]));
}

#[test]
fn corrupted_header_exits_2() {
    let f = scratch("p two 3\ne 1 2\n");
    let out = tecc(&["decompose", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_of_range_vertex_names_the_line() {
    let f = scratch("p 2 1\ne 1 3\n");
    let out = tecc(&["decompose", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex index out of range, line 2"));
}

#[test]
fn missing_file_exits_1() {
    let out = tecc(&["decompose", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_is_reproducible_and_key_sorted() {
    let f = scratch("p 4 5\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ne 1 3\n");
    let a = tecc(&["decompose", "--json", "--certify", "--cactus", f.to_str().unwrap()]);
    let b = tecc(&["decompose", "--json", "--certify", "--cactus", f.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let keys: Vec<usize> = ["\"bridges\"", "\"cacti\"", "\"components\"", "\"is_three_edge_connected\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn self_loops_keep_input_edge_ids() {
    let f = scratch("p 3 4\ne 2 2\ne 1 2\ne 2 3\ne 3 1\n");
    let out = tecc(&["decompose", "--json", "--certify", "--cactus", "--verify", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["cacti"][0]["cycles"].as_array().unwrap().len(), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("removed 1 self-loop"));
}

#[test]
fn gen_random_is_deterministic() {
    let a = tecc(&["gen-random", "--n", "5", "--m", "8", "--seed", "1"]);
    let b = tecc(&["gen-random", "--n", "5", "--m", "8", "--seed", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("p 5 8\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 8);
}

#[test]
fn gen_random_edge_cases() {
    let one = String::from_utf8(tecc(&["gen-random", "--n", "1", "--m", "0"]).stdout).unwrap();
    assert!(one.contains("p 1 0\n"));
    let four = String::from_utf8(tecc(&["gen-random", "--n", "4", "--m", "0"]).stdout).unwrap();
    assert!(four.contains("p 4 0\n"));
    let f = scratch(&four);
    let v = json_of(&tecc(&["decompose", "--json", f.to_str().unwrap()]));
    assert_eq!(v["components"].as_array().unwrap().len(), 4);
}

#[test]
fn gen_random_round_trips_through_decompose() {
    let out = std::env::temp_dir().join(format!("tecc-cli-{}-gen.txt", std::process::id()));
    let o = out.to_str().unwrap();
    assert_eq!(tecc(&["gen-random", "--n", "9", "--m", "16", "--seed", "3", "-o", o]).status.code(), Some(0));
    let r = tecc(&["decompose", "--verify", "--cactus", o]);
    assert_eq!(r.status.code(), Some(0), "{}", String::from_utf8_lossy(&r.stderr));
}

#[test]
fn oracle_on_triangle() {
    let f = scratch("p 3 3\ne 1 2\ne 2 3\ne 3 1\n");
    let out = tecc(&["oracle", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        json_of(&out),
        serde_json::json!({"bridges": [], "cut_pairs": [[0, 1], [0, 2], [1, 2]], "three_ecc": [[0], [1], [2]]})
    );
}

#[test]
fn oracle_on_k4() {
    let f = scratch("p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    let v = json_of(&tecc(&["oracle", f.to_str().unwrap()]));
    assert_eq!(v["cut_pairs"], serde_json::json!([]));
    assert_eq!(v["three_ecc"], serde_json::json!([[0, 1, 2, 3]]));
}

#[test]
fn oracle_refuses_large_graphs() {
    let mut text = String::from("p 50 49\n");
    for v in 2..=50 {
        text.push_str(&format!("e 1 {v}\n"));
    }
    let f = scratch(&text);
    assert_eq!(tecc(&["oracle", f.to_str().unwrap()]).status.code(), Some(4));
    let out = Command::new(env!("CARGO_BIN_EXE_tecc"))
        .args(["oracle", f.to_str().unwrap()])
        .env("TECC_ORACLE_MAX_N", "60")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn in_process_run_matches_binary() {
    let f = scratch("p 2 3\ne 1 2\ne 1 2\ne 1 2\n");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = tecc::cli::run(["tecc", "decompose", "--json", f.to_str().unwrap()], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, tecc(&["decompose", "--json", f.to_str().unwrap()]).stdout);
}
