use arlab_core::colorings::{self, EdgeColoring};
use arlab_core::graph::io;
use std::path::Path;
use std::process::{Command, Output};

fn arlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arlab")).args(args).env_remove("ARLAB_WORKERS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn construct_friendship_graph6() {
    let o = arlab(&["construct", "friendship", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "D{c\n");
}

#[test]
fn construct_two_cliques_coloring() {
    let o = arlab(&["construct", "coloring-two-cliques", "--n", "27", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let c = colorings::from_json(&stdout(&o)).unwrap();
    assert_eq!(c.r(), 7);
    assert_eq!(json(&o)["r"], 7);
}

#[test]
fn construct_ex_friendship() {
    let o = arlab(&["construct", "ex-friendship", "--n", "20", "--k", "2"]);
    let g = io::from_graph6(stdout(&o).trim()).unwrap();
    assert_eq!(g.edge_count(), 101);
    let o = arlab(&["construct", "ex-friendship", "--n", "20", "--k", "2", "--format", "json"]);
    assert_eq!(io::from_json(&stdout(&o)).unwrap(), g);
}

#[test]
fn construct_h_member() {
    let o = arlab(&["construct", "h-member", "--nu", "3", "--delta", "3", "--c-order", "5", "--y-degrees", "1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(io::from_graph6(stdout(&o).trim()).unwrap().edge_count(), 10);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(arlab(&["construct", "turan", "--k", "2"]).status.code(), Some(2));
    assert_eq!(arlab(&["construct", "coloring-two-cliques", "--n", "27", "--k", "4"]).status.code(), Some(2));
    assert_eq!(arlab(&["construct", "friendship", "--k", "2", "--format", "md"]).status.code(), Some(2));
    assert_eq!(arlab(&["construct", "unknown-kind"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"n\": 3");
    let o = arlab(&["verify", &bad, "--check", "rainbow-free", "--targets", "F2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_rainbow_free_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let o = arlab(&["construct", "coloring-two-cliques", "--n", "27", "--k", "3"]);
    let file = write(dir.path(), "two.json", &stdout(&o));
    let o = arlab(&["verify", &file, "--check", "rainbow-free", "--targets", "K1,4;4K2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["passed"], true);
    assert_eq!(json(&o)["schema"], "v1");
}

#[test]
fn verify_rainbow_hit_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k7.json", &colorings::to_json(&EdgeColoring::rainbow(7)));
    let o = arlab(&["verify", &file, "--check", "rainbow-free", "--targets", "F3"]);
    assert_eq!(o.status.code(), Some(1));
    let report = json(&o);
    assert_eq!(report["certificate"]["embedding"]["edges"].as_array().unwrap().len(), 9);
}

#[test]
fn verify_membership_and_structure() {
    let dir = tempfile::tempdir().unwrap();
    let o = arlab(&["construct", "d-member", "--k", "4"]);
    let file = write(dir.path(), "d4.g6", &stdout(&o));
    let o = arlab(&["verify", &file, "--check", "membership", "--family", "D", "--k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = arlab(&["verify", &file, "--check", "membership", "--family", "F", "--nu", "3", "--delta", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = arlab(&["verify", &file, "--check", "membership", "--family", "E", "--nu", "3", "--delta", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = arlab(&["verify", &file, "--check", "ge-structure"]);
    assert_eq!(o.status.code(), Some(0));
    let o = arlab(&["verify", &file, "--check", "factor-critical"]);
    assert_eq!(o.status.code(), Some(1));
    let c5 = write(dir.path(), "c5.json", r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]}"#);
    assert_eq!(arlab(&["verify", &c5, "--check", "factor-critical"]).status.code(), Some(0));
}

#[test]
fn oracle_values() {
    let o = arlab(&["oracle", "ar", "--n", "5", "--family", "F2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["value"], 8);
    let o = arlab(&["oracle", "f", "--nu", "2", "--delta", "2"]);
    let report = json(&o);
    assert_eq!(report["value"], 6);
    assert_eq!(report["caps"]["vertices"], 12);
    let witnesses = report["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 1);
    let g = io::from_graph6(witnesses[0]["graph6"].as_str().unwrap()).unwrap();
    assert_eq!(g.components().len(), 2);
    assert_eq!(g.edge_count(), 6);
    let o = arlab(&["oracle", "ex", "--n", "7", "--pattern", "F2"]);
    assert_eq!(json(&o)["value"], 13);
    let o = arlab(&["oracle", "lemma-aa", "--n", "6", "--k", "1"]);
    assert_eq!(json(&o)["value"], 0);
}

#[test]
fn capped_oracles_exit_three() {
    let o = arlab(&["oracle", "ar", "--n", "5", "--family", "F2", "--cap-partitions", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["status"], "capped");
    let o = arlab(&["oracle", "f", "--nu", "2", "--delta", "2", "--cap-vertices", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = arlab(&["oracle", "extremal-set", "--nu", "3", "--delta", "3", "--cap-vertices", "10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("schema,"));
}

#[test]
fn reports_are_deterministic_across_workers() {
    let one = arlab(&["report", "families", "--workers", "1"]);
    let many = arlab(&["report", "families", "--workers", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_arlab"))
        .args(["report", "families"])
        .env("ARLAB_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(env.stdout, one.stdout);
    assert!(stdout(&one).contains("schema: v1"));
}

#[test]
fn report_acceptance_passes() {
    let o = arlab(&["report", "acceptance", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains(",PASS,")).count(), 11);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let o = arlab(&["oracle", "f", "--nu", "1", "--delta", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.contains("\"schema\": \"v1\""));
}
