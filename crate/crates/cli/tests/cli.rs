mod common;

use std::path::Path;

use common::{fixtures, pipeline, read_jsonl, run, run_ok, write_jsonl};
use serde_json::json;

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["link", "--engine", "blank-line"]).status.code(), Some(2));
    assert_eq!(run(&["link", "--manifest", "m", "--engine", "nope", "--out", "o"]).status.code(), Some(2));
}

#[test]
fn missing_input_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["extract", "--manifest", p(&dir.path().join("none.jsonl")), "--out", p(&dir.path().join("o"))]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn wrong_schema_version_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.jsonl");
    std::fs::write(&m, "{\"schema\":\"codescope.manifest\",\"version\":99}\n").unwrap();
    let out = run(&["extract", "--manifest", p(&m), "--out", p(&dir.path().join("o"))]);
    assert_eq!(out.status.code(), Some(3));

    std::fs::write(&m, "{\"schema\":\"codescope.gold\",\"version\":1}\n").unwrap();
    let out = run(&["link", "--manifest", p(&m), "--engine", "blank-line", "--out", p(&dir.path().join("o"))]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn extract_lists_comments() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.jsonl");
    let c = dir.path().join("c.jsonl");
    run_ok(&["mine", "--root", p(&fixtures().join("corpus")), "--out", p(&m)]);
    run_ok(&["extract", "--manifest", p(&m), "--out", p(&c)]);
    let (header, rows) = read_jsonl(&c);
    assert_eq!(header["schema"], "codescope.comments");
    let gold = read_jsonl(&fixtures().join("gold.jsonl")).1;
    assert_eq!(rows.len(), gold.len());
    assert!(rows.iter().all(|r| r["kind"] == "line" && r["start_line"].as_u64().unwrap() > 1));
    let code = rows.iter().find(|r| r["text"].as_str().unwrap().ends_with("();")).unwrap();
    assert_eq!(code["summary_candidate"], false);
}

#[test]
fn pipeline_matches_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let files = pipeline(dir.path(), 0);
    for task in ["classification", "linking", "summarization"] {
        for split in ["train", "eval", "test"] {
            let name = format!("datasets/{task}.{split}.jsonl");
            assert!(files.iter().any(|f| f.to_str() == Some(name.as_str())), "{name} missing");
        }
    }
    let expected = fixtures().join("expected");
    let golden = ["datasets", "links.blank-line.jsonl", "report.blank-line.jsonl", "report.ir.jsonl"];
    for f in files.iter().filter(|f| golden.iter().any(|g| f.starts_with(g))) {
        let got = std::fs::read(dir.path().join(f)).unwrap();
        let want_path = expected.join(f);
        if std::env::var_os("CODESCOPE_BLESS").is_some() {
            std::fs::create_dir_all(want_path.parent().unwrap()).unwrap();
            std::fs::write(&want_path, &got).unwrap();
            continue;
        }
        let want = std::fs::read(&want_path).unwrap_or_else(|_| panic!("no golden file {}", want_path.display()));
        assert!(got == want, "{} differs from its golden file", f.display());
    }
}

#[test]
fn other_seed_changes_splits() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let fx = fixtures();
    for (dir, seed) in [(a.path(), "1"), (b.path(), "2")] {
        let m = dir.join("m.jsonl");
        run_ok(&["mine", "--root", p(&fx.join("corpus")), "--out", p(&m)]);
        run_ok(&["--seed", seed, "encode", "--manifest", p(&m), "--gold", p(&fx.join("gold.jsonl")), "--out-dir", p(dir)]);
    }
    let name = "linking.test.jsonl";
    assert_ne!(std::fs::read(a.path().join(name)).unwrap(), std::fs::read(b.path().join(name)).unwrap());
}

#[test]
fn eval_rejects_mismatched_ids() {
    let dir = tempfile::tempdir().unwrap();
    pipeline(dir.path(), 0);
    let test = dir.path().join("datasets/linking.test.jsonl");
    let preds = dir.path().join("links.blank-line.jsonl");
    let (header, mut rows) = read_jsonl(&preds);
    let dropped = rows.remove(0);
    let cut = dir.path().join("cut.jsonl");
    write_jsonl(&cut, header.clone(), &rows);
    let out = run(&["eval", "--gold", p(&test), "--pred", p(&cut), "--out", p(&dir.path().join("r.jsonl"))]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains(dropped["comment_id"].as_str().unwrap()), "{stderr}");

    rows.insert(0, dropped);
    rows.push(json!({"method_id": "x", "comment_id": "stray:1", "links": []}));
    write_jsonl(&cut, header, &rows);
    let out = run(&["eval", "--gold", p(&test), "--pred", p(&cut), "--out", p(&dir.path().join("r.jsonl"))]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("stray:1"));
}

#[test]
fn forest_model_round_trip_and_schema_check() {
    let dir = tempfile::tempdir().unwrap();
    pipeline(dir.path(), 0);
    let d = dir.path();
    let m = d.join("manifest.jsonl");
    let model = d.join("forest.jsonl");
    let train = d.join("datasets/linking.train.jsonl");
    let test = d.join("datasets/linking.test.jsonl");
    run_ok(&[
        "link", "--manifest", p(&m), "--engine", "forest", "--train", p(&train), "--trees", "30", "--save-model",
        p(&model), "--select", p(&test), "--out", p(&d.join("a.jsonl")),
    ]);
    run_ok(&[
        "link", "--manifest", p(&m), "--engine", "forest", "--model", p(&model), "--select", p(&test), "--out",
        p(&d.join("b.jsonl")),
    ]);
    assert_eq!(std::fs::read(d.join("a.jsonl")).unwrap(), std::fs::read(d.join("b.jsonl")).unwrap());
    assert_eq!(std::fs::read(d.join("a.jsonl")).unwrap(), std::fs::read(d.join("links.forest.jsonl")).unwrap());

    let text = std::fs::read_to_string(&model).unwrap().replacen("link-features-v1", "link-features-v0", 1);
    std::fs::write(&model, text).unwrap();
    let out = run(&[
        "link", "--manifest", p(&m), "--engine", "forest", "--model", p(&model), "--out", p(&d.join("c.jsonl")),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn stats_compares_reports() {
    let dir = tempfile::tempdir().unwrap();
    pipeline(dir.path(), 0);
    let d = dir.path();
    let out = d.join("stats.jsonl");
    let table = d.join("stats.md");
    run_ok(&[
        "stats", p(&d.join("report.forest.jsonl")), p(&d.join("report.blank-line.jsonl")),
        p(&d.join("report.token-similarity.jsonl")), "--out", p(&out), "--table", p(&table),
    ]);
    let (header, rows) = read_jsonl(&out);
    assert_eq!(header["task"], "linking");
    // correct, precision and recall for each of the two techniques.
    assert_eq!(rows.len(), 6);
    for r in &rows {
        let (raw, adj) = (r["p_value"].as_f64().unwrap(), r["p_adjusted"].as_f64().unwrap());
        assert!((0.0..=1.0).contains(&raw) && adj >= raw && adj <= 1.0);
        if r["test"] == "wilcoxon" {
            assert!(["negligible", "small", "medium", "large"].contains(&r["effect_label"].as_str().unwrap()));
        }
    }
    assert!(std::fs::read_to_string(&table).unwrap().contains("| links.blank-line.jsonl | correct | mcnemar |"));

    let out = run(&[
        "stats", p(&d.join("report.forest.jsonl")), p(&d.join("report.ir.jsonl")), "--out", p(&d.join("x.jsonl")),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classification_predictions_are_scored() {
    let dir = tempfile::tempdir().unwrap();
    pipeline(dir.path(), 0);
    let test = dir.path().join("datasets/classification.test.jsonl");
    let (_, rows) = read_jsonl(&test);
    let preds: Vec<_> = rows
        .iter()
        .map(|r| json!({"comment_id": r["comment_id"], "predicted_label": "code summary"}))
        .collect();
    let pred = dir.path().join("cls.jsonl");
    write_jsonl(&pred, json!({"schema": "codescope.class_predictions", "version": 1}), &preds);
    let report = dir.path().join("r.jsonl");
    run_ok(&["eval", "--gold", p(&test), "--pred", p(&pred), "--out", p(&report)]);
    let (header, _) = read_jsonl(&report);
    let summaries = rows.iter().filter(|r| r["target_text"] == "code summary").count();
    let acc = header["aggregate"]["accuracy"].as_f64().unwrap();
    assert_eq!(acc, summaries as f64 / rows.len() as f64);
    assert_eq!(header["aggregate"]["summary_recall"], 1.0);
}
