use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use codescope_core::dataset::{read_link_predictions, DatasetRecord};
use codescope_core::encoder::{decode_link_target, Task, LABEL_SUMMARY};
use codescope_core::metrics::{aggregate_links, corpus_bleu, link_scores, score_summary, summary_tokens, BleuConfig};
use codescope_core::schema::{self, Header};
use codescope_core::stats::{cliffs_delta, holm, mcnemar, odds_ratio_paired, wilcoxon_signed_rank, StatError};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commands::SummaryPrediction;
use crate::{EvalArgs, IdMismatch, StatsArgs};

/// Label predicted by an external classifier.
#[derive(Debug, Serialize, Deserialize)]
pub struct ClassPrediction {
    pub comment_id: String,
    pub predicted_label: String,
}

/// One scored instance of an evaluation report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub comment_id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub correct: Option<bool>,
    pub scores: BTreeMap<String, f64>,
    #[serde(default)]
    pub detail: Value,
}

/// Pairs every gold instance with exactly one prediction.
fn align<'a, P>(gold: &[DatasetRecord], preds: &'a [P], id: impl Fn(&P) -> &str) -> Result<Vec<&'a P>> {
    let mut by_id: HashMap<&str, &P> = HashMap::with_capacity(preds.len());
    for p in preds {
        if by_id.insert(id(p), p).is_some() {
            return Err(IdMismatch(format!("duplicate prediction for {}", id(p))).into());
        }
    }
    let mut seen = HashSet::with_capacity(gold.len());
    let mut out = Vec::with_capacity(gold.len());
    for g in gold {
        let cid = g.instance.comment_id.as_str();
        seen.insert(cid);
        match by_id.get(cid) {
            Some(p) => out.push(*p),
            None => return Err(IdMismatch(format!("no prediction for {cid}")).into()),
        }
    }
    if let Some(p) = preds.iter().find(|p| !seen.contains(id(p))) {
        return Err(IdMismatch(format!("prediction {} is not in the gold set", id(p))).into());
    }
    Ok(out)
}

fn task_of(header: &Header, path: &Path) -> Result<Task> {
    header
        .get("task")
        .with_context(|| format!("{}: dataset header names no task", path.display()))
}

fn eval_classification(gold: &[DatasetRecord], pred: &Path) -> Result<(Vec<ReportRecord>, Header)> {
    let (_, preds): (_, Vec<ClassPrediction>) = schema::read_jsonl(pred, schema::CLASS_PREDICTIONS)?;
    let aligned = align(gold, &preds, |p| &p.comment_id)?;
    let (mut tp, mut fp, mut fn_) = (0usize, 0usize, 0usize);
    let records: Vec<ReportRecord> = gold
        .iter()
        .zip(aligned)
        .map(|(g, p)| {
            let expected = g.instance.target_text.as_str();
            let ok = p.predicted_label == expected;
            match (p.predicted_label == LABEL_SUMMARY, expected == LABEL_SUMMARY) {
                (true, true) => tp += 1,
                (true, false) => fp += 1,
                (false, true) => fn_ += 1,
                _ => {}
            }
            ReportRecord {
                comment_id: g.instance.comment_id.clone(),
                correct: Some(ok),
                scores: BTreeMap::from([("accuracy".to_string(), f64::from(u8::from(ok)))]),
                detail: json!({"expected": expected, "predicted": p.predicted_label}),
            }
        })
        .collect();
    let n = records.len();
    let correct = records.iter().filter(|r| r.correct == Some(true)).count();
    let ratio = |a: usize, b: usize| if b == 0 { 0.0 } else { a as f64 / b as f64 };
    let header = Header::new(schema::REPORT)
        .with("task", Task::Classification)
        .with("n", n)
        .with(
            "aggregate",
            json!({
                "accuracy": ratio(correct, n),
                "summary_precision": ratio(tp, tp + fp),
                "summary_recall": ratio(tp, tp + fn_),
            }),
        );
    Ok((records, header))
}

fn eval_linking(gold: &[DatasetRecord], pred: &Path) -> Result<(Vec<ReportRecord>, Header)> {
    let preds = read_link_predictions(pred)?;
    let aligned = align(gold, &preds, |p| &p.comment_id)?;
    let mut scores = Vec::with_capacity(gold.len());
    let mut records = Vec::with_capacity(gold.len());
    for (g, p) in gold.iter().zip(aligned) {
        let expected = decode_link_target(&g.instance.target_text)
            .map_err(|_| anyhow::anyhow!("gold target of {} is not a link set", g.instance.comment_id))?;
        // Unparseable model output counts as an empty prediction.
        let predicted = p.resolved().unwrap_or_default();
        let s = link_scores(&predicted, &expected);
        records.push(ReportRecord {
            comment_id: g.instance.comment_id.clone(),
            correct: Some(s.correct),
            scores: BTreeMap::from([
                ("precision".to_string(), s.precision),
                ("recall".to_string(), s.recall),
            ]),
            detail: json!({
                "tp": s.tp, "fp": s.fp, "fn": s.fn_,
                "expected": expected, "predicted": predicted,
                "parsed": p.resolved().is_some(),
            }),
        });
        scores.push(s);
    }
    let agg = aggregate_links(&scores);
    let header = Header::new(schema::REPORT)
        .with("task", Task::Linking)
        .with("n", agg.n)
        .with("aggregate", agg);
    Ok((records, header))
}

fn eval_summarization(gold: &[DatasetRecord], pred: &Path) -> Result<(Vec<ReportRecord>, Header)> {
    let (_, preds): (_, Vec<SummaryPrediction>) = schema::read_jsonl(pred, schema::SUMMARY_PREDICTIONS)?;
    let aligned = align(gold, &preds, |p| &p.comment_id)?;
    let mut records = Vec::with_capacity(gold.len());
    let mut pairs = Vec::with_capacity(gold.len());
    for (g, p) in gold.iter().zip(aligned) {
        let s = score_summary(&p.predicted_summary, &g.instance.target_text);
        let mut scores: BTreeMap<String, f64> = s.bleu.iter().map(|(n, v)| (format!("bleu{n}"), *v)).collect();
        scores.insert("meteor".into(), s.meteor);
        scores.insert("rouge_precision".into(), s.rouge_lcs.precision);
        scores.insert("rouge_recall".into(), s.rouge_lcs.recall);
        scores.insert("rouge_f".into(), s.rouge_lcs.fmeasure);
        records.push(ReportRecord {
            comment_id: g.instance.comment_id.clone(),
            correct: None,
            scores,
            detail: json!({"expected": g.instance.target_text, "predicted": p.predicted_summary}),
        });
        pairs.push((summary_tokens(&p.predicted_summary), summary_tokens(&g.instance.target_text)));
    }
    let mut mean: BTreeMap<String, f64> = BTreeMap::new();
    for r in &records {
        for (k, v) in &r.scores {
            *mean.entry(k.clone()).or_default() += v;
        }
    }
    if !records.is_empty() {
        for v in mean.values_mut() {
            *v /= records.len() as f64;
        }
    }
    let corpus: BTreeMap<String, f64> = (1..=4)
        .map(|n| {
            let cfg = BleuConfig { max_n: n, smoothing: true };
            (format!("bleu{n}"), corpus_bleu(&pairs, cfg))
        })
        .collect();
    let header = Header::new(schema::REPORT)
        .with("task", Task::Summarization)
        .with("n", records.len())
        .with("aggregate", &mean)
        .with("corpus", &corpus);
    Ok((records, header))
}

pub fn eval(a: &EvalArgs) -> Result<()> {
    let (header, gold): (_, Vec<DatasetRecord>) = schema::read_jsonl(&a.gold, schema::DATASET)?;
    let task = task_of(&header, &a.gold)?;
    let (records, header) = match task {
        Task::Classification => eval_classification(&gold, &a.pred)?,
        Task::Linking => eval_linking(&gold, &a.pred)?,
        Task::Summarization => eval_summarization(&gold, &a.pred)?,
    };
    let header = header.with("gold", file_name(&a.gold)).with("pred", file_name(&a.pred));
    log::info!("{}: {}", task.as_str(), header.meta["aggregate"]);
    schema::write_jsonl(&a.out, &header, &records)?;
    Ok(())
}

fn file_name(p: &Path) -> String {
    p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// One paired comparison between the reference and another technique.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub technique: String,
    pub metric: String,
    pub test: String,
    pub n: usize,
    pub p_value: f64,
    pub p_adjusted: f64,
    /// Cliff's d or the paired odds ratio; `None` for an infinite ratio.
    pub effect: Option<f64>,
    pub effect_label: String,
    #[serde(default)]
    pub detail: Value,
}

struct Report {
    name: String,
    task: Option<Task>,
    records: Vec<ReportRecord>,
}

fn read_report(path: &Path) -> Result<Report> {
    let (header, records): (_, Vec<ReportRecord>) = schema::read_jsonl(path, schema::REPORT)?;
    let name = header
        .get::<String>("pred")
        .filter(|s| !s.is_empty())
        .unwrap_or_else(|| file_name(path));
    Ok(Report {
        name,
        task: header.get("task"),
        records,
    })
}

fn paired<'a>(reference: &'a Report, other: &'a Report) -> Result<Vec<(&'a ReportRecord, &'a ReportRecord)>> {
    let by_id: HashMap<&str, &ReportRecord> = other.records.iter().map(|r| (r.comment_id.as_str(), r)).collect();
    if by_id.len() != reference.records.len() {
        bail!(IdMismatch(format!(
            "{} has {} instances, {} has {}",
            reference.name,
            reference.records.len(),
            other.name,
            other.records.len()
        )));
    }
    reference
        .records
        .iter()
        .map(|r| match by_id.get(r.comment_id.as_str()) {
            Some(o) => Ok((r, *o)),
            None => Err(IdMismatch(format!("{} is missing from {}", r.comment_id, other.name)).into()),
        })
        .collect()
}

fn compare(reference: &Report, other: &Report) -> Result<Vec<Comparison>> {
    let pairs = paired(reference, other)?;
    let n = pairs.len();
    let mut out = Vec::new();
    if pairs.iter().all(|(a, b)| a.correct.is_some() && b.correct.is_some()) && n > 0 {
        let a: Vec<bool> = pairs.iter().map(|(r, _)| r.correct == Some(true)).collect();
        let b: Vec<bool> = pairs.iter().map(|(_, o)| o.correct == Some(true)).collect();
        let m = mcnemar(&a, &b)?;
        let or = odds_ratio_paired(m.b, m.c);
        out.push(Comparison {
            technique: other.name.clone(),
            metric: "correct".into(),
            test: "mcnemar".into(),
            n,
            p_value: m.p_value,
            p_adjusted: m.p_value,
            effect: or.ratio.is_finite().then_some(or.ratio),
            effect_label: String::new(),
            detail: json!({"statistic": m.statistic, "b": m.b, "c": m.c, "haldane": or.haldane}),
        });
    }
    let metrics: Vec<&String> = reference.records.first().map(|r| r.scores.keys().collect()).unwrap_or_default();
    for metric in metrics {
        let mut xs = Vec::with_capacity(n);
        let mut ys = Vec::with_capacity(n);
        for (r, o) in &pairs {
            match (r.scores.get(metric), o.scores.get(metric)) {
                (Some(x), Some(y)) => {
                    xs.push(*x);
                    ys.push(*y);
                }
                _ => bail!("metric {metric} is missing for {}", r.comment_id),
            }
        }
        let diffs: Vec<f64> = xs.iter().zip(&ys).map(|(x, y)| x - y).collect();
        let (p, detail) = match wilcoxon_signed_rank(&diffs) {
            Ok(w) => (w.p_value, json!({"w_plus": w.w_plus, "nonzero": w.n, "exact": w.exact})),
            Err(StatError::AllZero) => (1.0, json!({"nonzero": 0})),
            Err(e) => return Err(e.into()),
        };
        let d = cliffs_delta(&xs, &ys)?;
        out.push(Comparison {
            technique: other.name.clone(),
            metric: metric.clone(),
            test: "wilcoxon".into(),
            n,
            p_value: p,
            p_adjusted: p,
            effect: Some(d.d),
            effect_label: format!("{:?}", d.magnitude).to_lowercase(),
            detail,
        });
    }
    Ok(out)
}

fn markdown(reference: &str, rows: &[Comparison]) -> String {
    let mut s = format!("Reference: {reference}\n\n| technique | metric | test | n | p (Holm) | effect | label |\n|---|---|---|---|---|---|---|\n");
    for r in rows {
        let effect = match r.effect {
            Some(e) => format!("{e:.3}"),
            None => "inf".into(),
        };
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {:.4} | {} | {} |",
            r.technique, r.metric, r.test, r.n, r.p_adjusted, effect, r.effect_label
        );
    }
    s
}

pub fn stats(a: &StatsArgs) -> Result<()> {
    let reference = read_report(&a.reference)?;
    let mut rows = Vec::new();
    for path in &a.against {
        let other = read_report(path)?;
        if other.task != reference.task {
            bail!("{} and {} report different tasks", reference.name, other.name);
        }
        rows.extend(compare(&reference, &other)?);
    }
    // Holm within each metric, across the compared techniques.
    let mut families: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, r) in rows.iter().enumerate() {
        families.entry(r.metric.clone()).or_default().push(i);
    }
    for idx in families.values() {
        let ps: Vec<f64> = idx.iter().map(|&i| rows[i].p_value).collect();
        for (&i, adj) in idx.iter().zip(holm(&ps)?) {
            rows[i].p_adjusted = adj;
        }
    }
    let header = Header::new(schema::STATS)
        .with("reference", &reference.name)
        .with("task", reference.task)
        .with("correction", "holm per metric");
    schema::write_jsonl(&a.out, &header, &rows)?;
    if let Some(t) = &a.table {
        std::fs::write(t, markdown(&reference.name, &rows)).with_context(|| format!("writing {}", t.display()))?;
    }
    Ok(())
}
