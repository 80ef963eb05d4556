use std::fs;
use std::path::Path;

use geodisc::cli::run_cli;
use geodisc::io::InstanceFile;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("geodisc").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn graph(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gadget_writes_instance() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = graph(dir.path(), "k3.txt", "3 3\n1 2\n2 3\n1 3\n");
    let out = dir.path().join("out.json");
    let (code, _, err) = run(&["gadget", "--type", "bichromatic", "--graph", &k3, "-k", "2", "-o", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let text = fs::read_to_string(&out).unwrap();
    let file = InstanceFile::from_json(&text).unwrap();
    assert_eq!(file.dim, 4);
    assert_eq!(file.points.len(), 14);
    assert_eq!(file.to_json(), text);
}

#[test]
fn solve_empty_star_prints_value_first() {
    let dir = tempfile::tempdir().unwrap();
    let e = graph(dir.path(), "edge.txt", "2 1\n1 2\n");
    let inst = dir.path().join("inst.json");
    let inst = inst.to_str().unwrap();
    let (code, _, err) = run(&["gadget", "--type", "empty-star", "--graph", &e, "-k", "2", "--mu", "2", "-o", inst]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = run(&["solve", "--problem", "max-empty-star", inst]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("1/4"));

    let (_, one, _) = run(&["solve", "--problem", "max-empty-star", inst, "--threads", "1"]);
    let (_, eight, _) = run(&["solve", "--problem", "max-empty-star", inst, "--threads", "8"]);
    assert_eq!(one, eight);

    let (code, json, _) = run(&["solve", "--problem", "empty-star", inst, "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["value"], "1/4");
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = graph(dir.path(), "k3.txt", "3 3\n1 2\n2 3\n1 3\n");
    let (code, out, _) = run(&["verify", "--type", "star-disc", "--graph", &k3, "-k", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("result: match"));

    let looped = graph(dir.path(), "loop.txt", "2 1\n1 1\n");
    let (code, _, err) = run(&["verify", "--type", "star-disc", "--graph", &looped, "-k", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("loops forbidden"));

    let (code, _, _) = run(&["verify", "--type", "no-such-problem", "--graph", &k3, "-k", "2"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["verify", "--type", "star-disc", "--graph", "/nonexistent/graph.txt", "-k", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn solve_rejects_inconsistent_instance() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(&p, r#"{"dim": 2, "problem": "star-disc", "points": [{"coords": ["1/2"], "color": null, "weight": 1}]}"#).unwrap();
    let (code, _, err) = run(&["solve", "--problem", "star-disc", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("dimension"));
}

#[test]
fn bench_appends_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bench.csv");
    let csv = csv.to_str().unwrap();
    for _ in 0..2 {
        let (code, _, err) = run(&["bench", "--problem", "star-disc", "--dims", "2,3", "--sizes", "8", "-o", csv]);
        assert_eq!(code, 0, "{err}");
    }
    let text = fs::read_to_string(csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "problem,d,n_points,candidates_evaluated,elapsed_ms");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("star-disc,2,8,81,"));
    assert!(lines[2].starts_with("star-disc,3,8,729,"));
}
