#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codescope"))
        .args(args)
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs")
}

pub fn run_ok(args: &[&str]) {
    let out = run(args);
    assert!(
        out.status.success(),
        "codescope {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Runs mine, encode, the three linkers and eval on the fixture corpus.
/// Returns every artifact written, relative to `dir`.
pub fn pipeline(dir: &Path, seed: u64) -> Vec<PathBuf> {
    let fx = fixtures();
    let seed = seed.to_string();
    let manifest = dir.join("manifest.jsonl");
    let ds = dir.join("datasets");
    run_ok(&["--seed", &seed, "mine", "--root", s(&fx.join("corpus")), "--out", s(&manifest)]);
    run_ok(&[
        "--seed", &seed, "encode", "--manifest", s(&manifest), "--gold", s(&fx.join("gold.jsonl")),
        "--out-dir", s(&ds),
    ]);
    let test = ds.join("linking.test.jsonl");
    let train = ds.join("linking.train.jsonl");
    let engines: [(&str, &[&str]); 3] = [
        ("blank-line", &[]),
        ("token-similarity", &["--lambda", "0.2"]),
        ("forest", &["--train", s(&train), "--trees", "30"]),
    ];
    for (engine, extra) in engines {
        let pred = dir.join(format!("links.{engine}.jsonl"));
        let mut args = vec![
            "--seed", &seed, "link", "--manifest", s(&manifest), "--engine", engine, "--select", s(&test),
            "--out", s(&pred),
        ];
        args.extend_from_slice(extra);
        run_ok(&args);
        let report = dir.join(format!("report.{engine}.jsonl"));
        run_ok(&["eval", "--gold", s(&test), "--pred", s(&pred), "--out", s(&report)]);
    }
    let ir = dir.join("summaries.ir.jsonl");
    run_ok(&[
        "retrieve", "--train", s(&ds.join("summarization.train.jsonl")), "--test",
        s(&ds.join("summarization.test.jsonl")), "--out", s(&ir),
    ]);
    run_ok(&[
        "eval", "--gold", s(&ds.join("summarization.test.jsonl")), "--pred", s(&ir), "--out",
        s(&dir.join("report.ir.jsonl")),
    ]);
    let mut files: Vec<PathBuf> = walk(dir).into_iter().map(|p| p.strip_prefix(dir).unwrap().to_path_buf()).collect();
    files.sort();
    files
}

fn walk(dir: &Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for e in std::fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.is_dir() {
            out.extend(walk(&p));
        } else {
            out.push(p);
        }
    }
    out
}

/// Header and records of a JSONL artifact.
pub fn read_jsonl(path: &Path) -> (serde_json::Value, Vec<serde_json::Value>) {
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines().map(|l| serde_json::from_str(l).unwrap());
    let header = lines.next().unwrap();
    (header, lines.collect())
}

pub fn write_jsonl(path: &Path, header: serde_json::Value, records: &[serde_json::Value]) {
    let mut text = header.to_string() + "\n";
    for r in records {
        text += &r.to_string();
        text.push('\n');
    }
    std::fs::write(path, text).unwrap();
}
