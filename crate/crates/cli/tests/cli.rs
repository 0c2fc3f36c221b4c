use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_strong-edge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn generate_then_color() {
    let graph = run(&["gen", "triangle_with_leaves", "4"], "");
    assert!(graph.status.success());
    let out = run(&["color", "--delta", "4"], &stdout(&graph));
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["palette_size"], 14);
    assert_eq!(doc["delta_param"], 4);
    assert!(doc["stats"]["max_omega"].as_u64().unwrap() <= 13);
    assert_eq!(
        doc["edges"].as_array().unwrap().len(),
        doc["colors"].as_array().unwrap().len()
    );
    let first = &doc["colors"][0];
    assert!(first["set"] == "B" || first["set"] == "B'");
    assert!(first["index"].as_u64().unwrap() >= 1);
}

#[test]
fn color_output_is_reproducible() {
    let graph = stdout(&run(
        &["gen", "random_two_degenerate", "80", "6", "--seed", "11"],
        "",
    ));
    let a = run(&["color"], &graph);
    let b = run(&["color"], &graph);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn trace_goes_to_stderr() {
    let graph = stdout(&run(&["gen", "star", "4"], ""));
    let out = run(&["color", "--trace"], &graph);
    assert!(out.status.success());
    let trace = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(trace.lines().next().unwrap().starts_with("PENDANT 0 "));
    assert!(json(&out).is_object());
}

#[test]
fn color_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let graph = stdout(&run(&["gen", "cycle", "7"], ""));
    let out = run(&["color", "--out", path.to_str().unwrap()], &graph);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc["n"], 7);
}

#[test]
fn verify_accepts_then_rejects_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let graph = stdout(&run(&["gen", "triangle_with_leaves", "4"], ""));
    let colored = run(&["color"], &graph);
    let gpath = write_temp(&dir, "g.txt", &graph);
    let cpath = write_temp(&dir, "c.json", &stdout(&colored));

    let ok = run(&["verify", &gpath, &cpath], "");
    assert!(ok.status.success());
    assert_eq!(json(&ok)["ok"], true);

    // give one edge the prime of an adjacent edge's color
    let mut doc = json(&colored);
    let edges: Vec<[u64; 2]> = serde_json::from_value(doc["edges"].clone()).unwrap();
    let f = (1..edges.len())
        .find(|&f| edges[f].iter().any(|x| edges[0].contains(x)))
        .unwrap();
    let mut swapped = doc["colors"][0].clone();
    swapped["set"] = Value::from(if swapped["set"] == "B" { "B'" } else { "B" });
    doc["colors"][f] = swapped;
    let bad = write_temp(&dir, "bad.json", &doc.to_string());
    let out = run(&["verify", &gpath, &bad], "");
    assert_eq!(out.status.code(), Some(1));
    let verdict = json(&out);
    assert_eq!(verdict["ok"], false);
    let kinds: Vec<&str> = verdict["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"prime_pair_at_vertex"), "{kinds:?}");
}

#[test]
fn exact_on_small_graphs() {
    let c5 = stdout(&run(&["gen", "cycle", "5"], ""));
    let out = run(&["exact"], &c5);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["chi_s"], 5);
    assert_eq!(r["budget_exhausted"], false);
    assert!(r.get("witness").is_none());

    let p4 = stdout(&run(&["gen", "path", "4"], ""));
    let r = json(&run(&["exact", "--witness"], &p4));
    assert_eq!(r["chi_s"], 3);
    assert_eq!(r["witness"]["colors"].as_array().unwrap().len(), 3);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["color"], "0 1\n1 x\n").status.code(), Some(2));
    assert_eq!(run(&["color"], "0 1\n1 1\n").status.code(), Some(2));
    let k4 = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    assert_eq!(run(&["color"], k4).status.code(), Some(2));
    assert_eq!(
        run(&["color", "--delta", "1"], "0 1\n1 2\n").status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["gen", "no_such_family", "3"], "").status.code(),
        Some(2)
    );
    assert_eq!(run(&["gen", "path"], "").status.code(), Some(2));
    assert_eq!(run(&["color", "/no/such/file"], "").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn bench_prints_ordered_tsv() {
    let args = [
        "bench",
        "--families",
        "random_two_degenerate,star",
        "--count",
        "4",
        "--seed",
        "9",
        "--max-n",
        "30",
    ];
    let a = run(&args, "");
    assert!(a.status.success());
    let text = stdout(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9);
    assert!(lines[0].starts_with("index\tfamily"));
    for (i, line) in lines[1..].iter().enumerate() {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 10);
        assert_eq!(cols[0], i.to_string());
        assert_eq!(cols[2], (9 + i).to_string());
        assert_eq!(cols[8], "true");
    }
    assert_eq!(a.stdout, run(&args, "").stdout);
}
