//! Corpus mining: walk project directories, extract methods, apply the
//! method-level filters and write a manifest.

use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::extractor::{
    extract_inner_comments, extract_methods, filter_method, CommentKind, InnerComment,
    SourceFile, SourceMethod,
};
use crate::schema::{self, DataError, Header};

pub const SKIP_UNREADABLE: &str = "unreadable";
pub const SKIP_PARSE_ERROR: &str = "parse_error";
pub const SKIP_TEST_METHOD: &str = "test_method";
pub const SKIP_OVER_CAP: &str = "over_token_cap";
pub const SKIP_DUPLICATE: &str = "duplicate";

/// Token cap used when building the labeling corpus.
pub const LABELING_TOKEN_CAP: usize = 1024;
/// Token cap used when building the summarization corpus.
pub const SUMMARIZATION_TOKEN_CAP: usize = 512;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MineConfig {
    pub max_tokens: usize,
    pub include_tests: bool,
}

impl Default for MineConfig {
    fn default() -> Self {
        Self {
            max_tokens: LABELING_TOKEN_CAP,
            include_tests: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberedLine {
    pub n: usize,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommentRecord {
    pub id: String,
    pub kind: CommentKind,
    pub text: String,
    pub start_line: usize,
    pub end_line: usize,
    pub trailing: bool,
}

/// One manifest line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestRecord {
    pub method_id: String,
    pub project: String,
    pub path: String,
    pub name: String,
    pub is_test: bool,
    pub token_count: usize,
    pub file_line: usize,
    pub body: Vec<NumberedLine>,
    pub comments: Vec<CommentRecord>,
}

impl ManifestRecord {
    pub fn from_method(method: &SourceMethod, comments: &[InnerComment]) -> Self {
        Self {
            method_id: method.id.clone(),
            project: method.project.clone(),
            path: method.path.clone(),
            name: method.name.clone(),
            is_test: method.is_test,
            token_count: method.token_count(),
            file_line: method.file_line,
            body: method
                .lines
                .iter()
                .map(|s| NumberedLine {
                    n: s.line_no,
                    text: s.text.clone(),
                })
                .collect(),
            comments: comments
                .iter()
                .map(|c| CommentRecord {
                    id: c.id.clone(),
                    kind: c.kind,
                    text: c.text.clone(),
                    start_line: c.start_line,
                    end_line: c.end_line,
                    trailing: c.trailing,
                })
                .collect(),
        }
    }

    /// Rebuilds the method from its numbered body.
    pub fn to_method(&self) -> SourceMethod {
        let source = self
            .body
            .iter()
            .map(|l| l.text.as_str())
            .collect::<Vec<_>>()
            .join("\n");
        SourceMethod::from_source(
            self.project.clone(),
            self.path.clone(),
            self.name.clone(),
            self.is_test,
            self.file_line,
            source,
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CorpusManifest {
    pub records: Vec<ManifestRecord>,
    pub files: usize,
    pub skipped: BTreeMap<String, usize>,
}

impl CorpusManifest {
    pub fn write(&self, path: &Path) -> Result<(), DataError> {
        let header = Header::new(schema::MANIFEST)
            .with("files", self.files)
            .with("skipped", &self.skipped);
        schema::write_jsonl(path, &header, &self.records)
    }

    pub fn read(path: &Path) -> Result<Self, DataError> {
        let (header, records) = schema::read_jsonl(path, schema::MANIFEST)?;
        Ok(Self {
            records,
            files: header.get("files").unwrap_or(0),
            skipped: header.get("skipped").unwrap_or_default(),
        })
    }

    pub fn skip_count(&self, reason: &str) -> usize {
        self.skipped.get(reason).copied().unwrap_or(0)
    }

    /// Methods and their inner comments, in manifest order.
    pub fn methods(&self) -> Vec<(SourceMethod, Vec<InnerComment>)> {
        self.records
            .iter()
            .map(|r| {
                let m = r.to_method();
                let cs = extract_inner_comments(&m).unwrap_or_default();
                (m, cs)
            })
            .collect()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum MineError {
    #[error("corpus root {0} does not exist or is not a directory")]
    RootMissing(PathBuf),
}

/// Keeps the first method for every distinct id.
pub fn dedup_methods(methods: Vec<SourceMethod>) -> Vec<SourceMethod> {
    let mut seen = HashSet::new();
    methods
        .into_iter()
        .filter(|m| seen.insert(m.id.clone()))
        .collect()
}

enum FileOutcome {
    Methods(Vec<SourceMethod>),
    Skipped(&'static str),
}

/// Mines every `.java` file below `root`. The first directory level under the
/// root names the project.
pub fn mine_corpus(root: &Path, config: &MineConfig) -> Result<CorpusManifest, MineError> {
    if !root.is_dir() {
        return Err(MineError::RootMissing(root.to_path_buf()));
    }
    let mut files: Vec<PathBuf> = WalkDir::new(root)
        .sort_by_file_name()
        .into_iter()
        .filter_map(|e| match e {
            Ok(e) => Some(e),
            Err(err) => {
                log::warn!("skipping unreadable entry: {err}");
                None
            }
        })
        .filter(|e| e.file_type().is_file())
        .map(|e| e.into_path())
        .filter(|p| p.extension().is_some_and(|x| x == "java"))
        .collect();
    files.sort();

    let outcomes: Vec<FileOutcome> = files
        .par_iter()
        .map(|p| mine_file(root, p))
        .collect();

    let mut manifest = CorpusManifest {
        files: files.len(),
        ..Default::default()
    };
    let mut kept = Vec::new();
    let mut skip = |reason: &str| *manifest.skipped.entry(reason.to_string()).or_insert(0) += 1;
    for outcome in outcomes {
        let methods = match outcome {
            FileOutcome::Methods(ms) => ms,
            FileOutcome::Skipped(reason) => {
                skip(reason);
                continue;
            }
        };
        for m in methods {
            if m.is_test && !config.include_tests {
                skip(SKIP_TEST_METHOD);
            } else if !filter_method(&m, config.max_tokens) {
                skip(SKIP_OVER_CAP);
            } else {
                kept.push(m);
            }
        }
    }
    let before = kept.len();
    let kept = dedup_methods(kept);
    for _ in kept.len()..before {
        skip(SKIP_DUPLICATE);
    }
    manifest.records = kept
        .iter()
        .map(|m| {
            let comments = extract_inner_comments(m).unwrap_or_default();
            ManifestRecord::from_method(m, &comments)
        })
        .collect();
    Ok(manifest)
}

fn mine_file(root: &Path, path: &Path) -> FileOutcome {
    let rel = path.strip_prefix(root).unwrap_or(path);
    let rel_str = rel
        .components()
        .map(|c| c.as_os_str().to_string_lossy())
        .collect::<Vec<_>>()
        .join("/");
    let project = if rel.components().count() > 1 {
        rel.components()
            .next()
            .map(|c| c.as_os_str().to_string_lossy().into_owned())
            .unwrap_or_default()
    } else {
        String::new()
    };
    let content = match std::fs::read(path).map(String::from_utf8) {
        Ok(Ok(text)) => text,
        _ => {
            log::warn!("{rel_str}: unreadable, skipped");
            return FileOutcome::Skipped(SKIP_UNREADABLE);
        }
    };
    match extract_methods(&SourceFile::new(project, rel_str.clone(), content)) {
        Ok(ms) => FileOutcome::Methods(ms),
        Err(err) => {
            log::warn!("{rel_str}: {err}, skipped");
            FileOutcome::Skipped(SKIP_PARSE_ERROR)
        }
    }
}
