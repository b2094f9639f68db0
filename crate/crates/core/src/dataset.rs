//! Builds task datasets from a mined manifest plus gold labels or link
//! predictions, and reads/writes the per-split dataset files.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::corpus::CorpusManifest;
use crate::encoder::{
    self, classification_target, decode_link_target, EncodeError, Split, Splits, Task,
    TaskInstance,
};
use crate::extractor::{InnerComment, SourceMethod};
use crate::gold::GoldRecord;
use crate::linkers::LinkSet;
use crate::schema::{self, DataError, Header};

pub const SKIP_UNKNOWN: &str = "unknown_comment";
pub const SKIP_OVER_CAP: &str = "over_token_cap";
pub const SKIP_EMPTY_LINKS: &str = "empty_links";
pub const SKIP_NOT_CANDIDATE: &str = "not_summary_candidate";
pub const SKIP_UNPARSEABLE: &str = "unparseable_links";
pub const SKIP_INVALID_LINKS: &str = "invalid_links";
pub const SKIP_DUPLICATE: &str = "duplicate_snippet";

#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error("method {0} is not in the manifest")]
    UnknownMethod(String),
    #[error("comment {0} is not in the manifest")]
    UnknownComment(String),
    #[error("comment {comment_id}: {source}")]
    Encode {
        comment_id: String,
        source: EncodeError,
    },
}

/// Manifest methods indexed by id, with their inner comments.
#[derive(Debug, Default)]
pub struct MethodTable {
    methods: HashMap<String, (SourceMethod, Vec<InnerComment>)>,
}

impl MethodTable {
    pub fn from_manifest(manifest: &CorpusManifest) -> Self {
        Self {
            methods: manifest
                .methods()
                .into_iter()
                .map(|(m, cs)| (m.id.clone(), (m, cs)))
                .collect(),
        }
    }

    pub fn method(&self, method_id: &str) -> Option<&SourceMethod> {
        self.methods.get(method_id).map(|(m, _)| m)
    }

    pub fn comment(
        &self,
        method_id: &str,
        comment_id: &str,
    ) -> Result<(&SourceMethod, &InnerComment), BuildError> {
        let (m, cs) = self
            .methods
            .get(method_id)
            .ok_or_else(|| BuildError::UnknownMethod(method_id.to_string()))?;
        let c = cs
            .iter()
            .find(|c| c.id == comment_id)
            .ok_or_else(|| BuildError::UnknownComment(comment_id.to_string()))?;
        Ok((m, c))
    }
}

fn instance(task: Task, m: &SourceMethod, c: &InnerComment, input: String, target: String) -> TaskInstance {
    TaskInstance {
        task,
        input_text: input,
        target_text: target,
        method_id: m.id.clone(),
        comment_id: c.id.clone(),
        path: m.path.clone(),
    }
}

fn encode_err(c: &InnerComment) -> impl FnOnce(EncodeError) -> BuildError + '_ {
    |source| BuildError::Encode {
        comment_id: c.id.clone(),
        source,
    }
}

/// One instance per labeled comment; target is the summary/other label.
pub fn classification_instances(
    table: &MethodTable,
    gold: &[GoldRecord],
) -> Result<Vec<TaskInstance>, BuildError> {
    gold.iter()
        .map(|g| {
            let (m, c) = table.comment(&g.method_id, &g.comment_id)?;
            let input = encoder::encode_classification(m, c).map_err(encode_err(c))?;
            Ok(instance(
                Task::Classification,
                m,
                c,
                input,
                classification_target(g.is_summary()).to_string(),
            ))
        })
        .collect()
}

/// One instance per comment labeled as a code summary.
pub fn linking_instances(table: &MethodTable, gold: &[GoldRecord]) -> Result<Vec<TaskInstance>, BuildError> {
    gold.iter()
        .filter(|g| g.is_summary())
        .map(|g| {
            let (m, c) = table.comment(&g.method_id, &g.comment_id)?;
            let (input, target) = encoder::encode_linking(m, c, Some(&g.links)).map_err(encode_err(c))?;
            Ok(instance(Task::Linking, m, c, input, target.unwrap_or_default()))
        })
        .collect()
}

/// Linker output for one comment. External models may supply the raw tag
/// stream in `text` instead of `links`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkPrediction {
    pub method_id: String,
    pub comment_id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub links: Option<LinkSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

impl LinkPrediction {
    pub fn new(method_id: &str, comment_id: &str, links: LinkSet) -> Self {
        Self {
            method_id: method_id.to_string(),
            comment_id: comment_id.to_string(),
            links: Some(links),
            text: None,
        }
    }

    /// The predicted set, or `None` when only an unparseable text exists.
    pub fn resolved(&self) -> Option<LinkSet> {
        match (&self.links, &self.text) {
            (Some(l), _) => Some(l.clone()),
            (None, Some(t)) => decode_link_target(t).ok(),
            (None, None) => Some(LinkSet::new()),
        }
    }
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct BuildReport {
    pub kept: usize,
    pub skipped: BTreeMap<String, usize>,
}

impl BuildReport {
    fn skip(&mut self, reason: &str) {
        *self.skipped.entry(reason.to_string()).or_default() += 1;
    }
}

/// Summarization instances from linked comments, filtered by method size
/// and comment length, then deduplicated on the documented snippet.
pub fn summarization_instances(
    table: &MethodTable,
    links: &[LinkPrediction],
    max_tokens: usize,
) -> (Vec<TaskInstance>, BuildReport) {
    let mut report = BuildReport::default();
    let mut out = Vec::new();
    for p in links {
        let Ok((m, c)) = table.comment(&p.method_id, &p.comment_id) else {
            report.skip(SKIP_UNKNOWN);
            continue;
        };
        if m.token_count() > max_tokens {
            report.skip(SKIP_OVER_CAP);
            continue;
        }
        let Some(set) = p.resolved() else {
            report.skip(SKIP_UNPARSEABLE);
            continue;
        };
        match encoder::encode_summarization(m, c, &set) {
            Ok((input, target)) => out.push(instance(Task::Summarization, m, c, input, target)),
            Err(EncodeError::EmptyLinks) => report.skip(SKIP_EMPTY_LINKS),
            Err(EncodeError::NotSummaryCandidate) => report.skip(SKIP_NOT_CANDIDATE),
            Err(_) => report.skip(SKIP_INVALID_LINKS),
        }
    }
    let before = out.len();
    let out = encoder::dedup_snippets(out);
    for _ in out.len()..before {
        report.skip(SKIP_DUPLICATE);
    }
    report.kept = out.len();
    (out, report)
}

/// Link predictions derived from gold summary labels.
pub fn gold_links(gold: &[GoldRecord]) -> Vec<LinkPrediction> {
    gold.iter()
        .filter(|g| g.is_summary())
        .map(|g| LinkPrediction::new(&g.method_id, &g.comment_id, g.links.clone()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetRecord {
    #[serde(flatten)]
    pub instance: TaskInstance,
    pub split: Split,
}

pub fn dataset_file_name(task: Task, split: Split) -> String {
    format!("{}.{}.jsonl", task.as_str(), split.as_str())
}

/// Writes one file per split into `dir`.
pub fn write_splits(dir: &Path, task: Task, splits: &Splits, seed: u64) -> Result<Vec<PathBuf>, DataError> {
    let mut paths = Vec::new();
    for split in Split::ALL {
        let records: Vec<DatasetRecord> = splits
            .get(split)
            .iter()
            .map(|i| DatasetRecord {
                instance: i.clone(),
                split,
            })
            .collect();
        let header = Header::new(schema::DATASET)
            .with("task", task)
            .with("split", split)
            .with("seed", seed)
            .with("count", records.len());
        let path = dir.join(dataset_file_name(task, split));
        schema::write_jsonl(&path, &header, &records)?;
        paths.push(path);
    }
    Ok(paths)
}

pub fn read_dataset(path: &Path) -> Result<Vec<DatasetRecord>, DataError> {
    schema::read_jsonl(path, schema::DATASET).map(|(_, r)| r)
}

pub fn write_link_predictions(path: &Path, linker: &str, preds: &[LinkPrediction]) -> Result<(), DataError> {
    schema::write_jsonl(path, &Header::new(schema::LINK_PREDICTIONS).with("linker", linker), preds)
}

pub fn read_link_predictions(path: &Path) -> Result<Vec<LinkPrediction>, DataError> {
    schema::read_jsonl(path, schema::LINK_PREDICTIONS).map(|(_, r)| r)
}
