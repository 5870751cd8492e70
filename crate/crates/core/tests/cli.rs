use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use scds::graph::named;
use scds::io;
use serde_json::Value;
use tempfile::TempDir;

fn scds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scds")).args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn graph_file(dir: &TempDir, name: &str, g: &scds::Graph) -> String {
    write(dir, name, &io::write_graph(g))
}

#[test]
fn solve_scds_on_small_graphs() {
    let dir = TempDir::new().unwrap();
    for (name, g, size) in [("p3", named::path(3), 3), ("c4", named::cycle(4), 3)] {
        let f = graph_file(&dir, name, &g);
        let out = scds(&["solve", "--problem", "scds", "--input", &f]);
        assert_eq!(out.status.code(), Some(0));
        let v = stdout_json(&out);
        assert_eq!(v["size"], size);
        assert_eq!(v["problem"], "scds");
        assert_eq!(v["witness"].as_array().unwrap().len(), size);
    }
}

#[test]
fn solve_json_fields_are_alphabetical() {
    let dir = TempDir::new().unwrap();
    let f = graph_file(&dir, "c4", &named::cycle(4));
    let out = scds(&["solve", "--problem", "scds", "--input", &f]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"explored":12,"problem":"scds","size":3,"witness":[0,1,2]}"#
    );
}

#[test]
fn solve_other_problems() {
    let dir = TempDir::new().unwrap();
    let f = graph_file(&dir, "c5", &named::cycle(5));
    for (problem, size) in [("ds", 2), ("cds", 3), ("vc", 3), ("scds", 4)] {
        let v = stdout_json(&scds(&["solve", "--problem", problem, "--input", &f]));
        assert_eq!(v["size"], size, "{problem}");
    }
    let sc = write(&dir, "cover", "3 3 2\n2 0 1\n1 2\n2 1 2\n");
    let v = stdout_json(&scds(&["solve", "--problem", "setcover", "--input", &sc]));
    assert_eq!(v["size"], 2);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad", "3 2\n0 1\n1 x\n");
    assert_eq!(scds(&["solve", "--problem", "scds", "--input", &bad]).status.code(), Some(2));
    let missing = dir.path().join("absent").to_string_lossy().into_owned();
    assert_eq!(scds(&["solve", "--problem", "ds", "--input", &missing]).status.code(), Some(2));
    let split = write(&dir, "split", "4 2\n0 1\n2 3\n");
    assert_eq!(scds(&["solve", "--problem", "scds", "--input", &split]).status.code(), Some(4));
    let c8 = graph_file(&dir, "c8", &named::cycle(8));
    let out = scds(&["solve", "--problem", "scds", "--input", &c8, "--budget", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_outcomes() {
    let dir = TempDir::new().unwrap();
    let c4 = graph_file(&dir, "c4", &named::cycle(4));
    let ok = scds(&["verify", "--input", &c4, "--set", "0,1,2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout_json(&ok)["defenders"]["3"], "0");

    let no = scds(&["verify", "--input", &c4, "--set", "0,1"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout_json(&no)["vertex"], 2);

    assert_eq!(scds(&["verify", "--input", &c4, "--set", "0,9"]).status.code(), Some(2));

    let ds = scds(&["verify", "--input", &c4, "--set", "0,2", "--problem", "ds"]);
    assert_eq!(ds.status.code(), Some(0));
    let cds = scds(&["verify", "--input", &c4, "--set", "0,2", "--problem", "cds"]);
    assert_eq!(cds.status.code(), Some(1));
}

#[test]
fn approx_reports_the_bound() {
    let dir = TempDir::new().unwrap();
    let f = graph_file(&dir, "star", &named::star(4));
    let out = scds(&["approx", "--input", &f]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["bound"], 5);
    assert_eq!(v["d_sc"].as_array().unwrap().len(), 5);
}

#[test]
fn bench_rows_respect_the_ratio() {
    let out = scds(&["bench", "--count", "10", "--n", "8", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("seed,n,m,delta,gamma_sc,approx_size,bound"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 10);
    for row in rows {
        let delta: usize = row[3].parse().unwrap();
        let approx: usize = row[5].parse().unwrap();
        assert_eq!(row[6].parse::<usize>().unwrap(), delta + 1);
        if let Ok(gamma_sc) = row[4].parse::<usize>() {
            assert!(approx <= (delta + 1) * gamma_sc);
            assert!(gamma_sc <= approx);
        }
    }
}

#[test]
fn bench_blank_when_over_budget() {
    let out = scds(&["bench", "--count", "2", "--n", "9", "--seed", "1", "--budget", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for row in text.lines().skip(1) {
        assert_eq!(row.split(',').nth(4), Some(""));
    }
}

fn read_back(path: &Path) -> scds::Graph {
    io::parse_graph(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn gen_outputs() {
    let dir = TempDir::new().unwrap();
    let k2 = graph_file(&dir, "k2", &named::complete(2));
    let gc: PathBuf = dir.path().join("gc.graph");
    let out = scds(&["gen", "gc", "--input", &k2, "--out", gc.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(read_back(&gc).n(), 10);

    let a = scds(&["gen", "chain", "--p", "3", "--q", "3", "--seed", "1"]);
    let b = scds(&["gen", "chain", "--p", "3", "--q", "3", "--seed", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let g = io::parse_graph(&String::from_utf8(a.stdout).unwrap()).unwrap();
    assert_eq!(g.n(), 6);
    assert!(g.bipartition().is_some());

    let r = scds(&["gen", "random", "--n", "15", "--seed", "4"]);
    let text = String::from_utf8(r.stdout).unwrap();
    let g = io::parse_graph(&text).unwrap();
    assert!(g.is_connected());
    assert_eq!(io::write_graph(&g), text);
}

#[test]
fn reduce_writes_graph_and_sidecar() {
    let dir = TempDir::new().unwrap();
    let p4 = graph_file(&dir, "p4", &named::path(4));
    let prefix = dir.path().join("star").to_string_lossy().into_owned();
    let out = scds(&["reduce", "star-convex", "--input", &p4, "--out", &prefix]);
    assert_eq!(out.status.code(), Some(0));
    let g = read_back(Path::new(&format!("{prefix}.graph")));
    assert_eq!(g.n(), 8);
    let side: Value = serde_json::from_str(&std::fs::read_to_string(format!("{prefix}.json")).unwrap()).unwrap();
    let keys: Vec<&str> = side.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["forced", "kind", "labels", "param", "witness"]);
    assert_eq!(side["kind"], "star-convex");
    assert_eq!(side["param"], serde_json::json!({"offset": 4}));
    assert_eq!(side["witness"]["kind"], "star");

    let sc = write(&dir, "cover", "2 3 1\n1 0\n1 1\n2 0 1\n");
    let prefix = dir.path().join("sc").to_string_lossy().into_owned();
    assert_eq!(scds(&["reduce", "setcover", "--input", &sc, "--out", &prefix]).status.code(), Some(0));
    let side: Value = serde_json::from_str(&std::fs::read_to_string(format!("{prefix}.json")).unwrap()).unwrap();
    assert_eq!(side["witness"]["kind"], "dpeo");
    assert_eq!(side["labels"]["5"], "p");

    let k14 = graph_file(&dir, "k14", &named::star(4));
    let prefix = dir.path().join("apx").to_string_lossy().into_owned();
    assert_eq!(scds(&["reduce", "apx", "--input", &k14, "--out", &prefix]).status.code(), Some(4));
}

#[test]
fn check_commands() {
    let dir = TempDir::new().unwrap();
    let p4 = graph_file(&dir, "p4", &named::path(4));
    assert_eq!(scds(&["check", "peo", "--input", &p4, "--order", "0,3,1,2"]).status.code(), Some(0));
    let c4 = graph_file(&dir, "c4", &named::cycle(4));
    assert_eq!(scds(&["check", "peo", "--input", &c4, "--order", "0,1,2,3"]).status.code(), Some(1));
    assert_eq!(scds(&["check", "chain", "--input", &p4]).status.code(), Some(0));
    let c6 = graph_file(&dir, "c6", &named::cycle(6));
    assert_eq!(scds(&["check", "chain", "--input", &c6]).status.code(), Some(1));
    let out = scds(&["check", "chordal-bipartite", "--input", &c6, "--max-len", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(scds(&["check", "chordal-bipartite", "--input", &c4]).status.code(), Some(0));

    // P4 = 0-1-2-3 has left side {0, 2}; the tree 0-2 makes it tree-convex.
    let tree = write(&dir, "tree", "4 1\n0 2\n");
    let ok = scds(&["check", "tree-convex", "--input", &p4, "--tree", &tree, "--side", "left"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout_json(&ok)["valid"], true);
}

#[test]
fn tagged_verdicts_print_sorted_keys() {
    let dir = TempDir::new().unwrap();
    let c4 = graph_file(&dir, "c4", &named::cycle(4));
    let out = scds(&["check", "chordal-bipartite", "--input", &c4]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"bound":8,"verdict":"pass"}"#);
}
