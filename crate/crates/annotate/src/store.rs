//! Annotation state and its persistence.
//!
//! Every change is an [`Event`] appended to `events.jsonl` before it is
//! applied, so the log is a complete audit trail. A snapshot of the derived
//! state is written every few events; opening a store loads the snapshot and
//! replays the events recorded after it.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use codescope_core::corpus::CorpusManifest;
use codescope_core::gold::{self, GoldRecord, EXTENSION_PREFIX, TAXONOMY};
use codescope_core::linkers::LinkSet;
use codescope_core::stats::cohens_kappa;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const DEFAULT_FILE_CAP: usize = 10;
/// Two labelers plus at least one possible resolver.
pub const MIN_POOL: usize = 3;
const SNAPSHOT_EVERY: u64 = 64;
const LOG_FILE: &str = "events.jsonl";
const SNAPSHOT_FILE: &str = "snapshot.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pending,
    PartiallyLabeled,
    Labeled,
    Conflicted,
    Resolved,
}

impl Status {
    pub fn is_open(self) -> bool {
        matches!(self, Status::Pending | Status::PartiallyLabeled)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskLine {
    pub n: usize,
    pub text: String,
    pub linkable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotationTask {
    pub task_id: String,
    pub method_id: String,
    pub comment_id: String,
    pub path: String,
    pub comment_text: String,
    pub comment_start: usize,
    pub comment_end: usize,
    pub lines: Vec<TaskLine>,
    pub assignees: [String; 2],
    pub status: Status,
}

impl AnnotationTask {
    pub fn is_linkable(&self, n: usize) -> bool {
        self.lines.iter().any(|l| l.n == n && l.linkable)
    }

    pub fn is_assignee(&self, annotator: &str) -> bool {
        self.assignees.iter().any(|a| a == annotator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelRecord {
    pub task_id: String,
    pub annotator_id: String,
    pub categories: BTreeSet<String>,
    pub links: LinkSet,
    /// Milliseconds since the Unix epoch.
    pub timestamp: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConflictKind {
    Category,
    Link,
    Both,
}

pub fn conflict_kind(a: &LabelRecord, b: &LabelRecord) -> Option<ConflictKind> {
    match (a.categories != b.categories, a.links != b.links) {
        (false, false) => None,
        (true, false) => Some(ConflictKind::Category),
        (false, true) => Some(ConflictKind::Link),
        (true, true) => Some(ConflictKind::Both),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conflict {
    pub task_id: String,
    pub kind: ConflictKind,
    pub resolver_id: Option<String>,
    pub resolution: Option<LabelRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum Event {
    TasksCreated { tasks: Vec<AnnotationTask> },
    Labeled { record: LabelRecord },
    Resolved { record: LabelRecord },
    CategoryAdded { name: String },
}

#[derive(Debug, thiserror::Error)]
pub enum StoreError {
    #[error("the manifest has no comments to annotate")]
    EmptyManifest,
    #[error("annotator pool has {0} distinct members, need at least {MIN_POOL}")]
    PoolTooSmall(usize),
    #[error("unknown task {0}")]
    UnknownTask(String),
    #[error("{annotator} is not assigned to {task_id}")]
    NotAssignee { task_id: String, annotator: String },
    #[error("{annotator} already labeled {task_id}")]
    AlreadySubmitted { task_id: String, annotator: String },
    #[error("task {task_id} is {status:?}")]
    WrongStatus { task_id: String, status: Status },
    #[error("{resolver} labeled {task_id} and cannot resolve it")]
    ResolverIsAssignee { task_id: String, resolver: String },
    #[error("at least one category is required")]
    NoCategories,
    #[error("unknown category {0:?}")]
    InvalidCategory(String),
    #[error("lines {0:?} are not linkable")]
    InvalidLinks(Vec<usize>),
    #[error("task {0} does not have two labels yet")]
    MissingRecords(String),
    #[error("store I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("corrupt store: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
struct State {
    seq: u64,
    files_assigned: u64,
    tasks: BTreeMap<String, AnnotationTask>,
    labels: BTreeMap<String, Vec<LabelRecord>>,
    conflicts: BTreeMap<String, Conflict>,
    extensions: BTreeSet<String>,
}

impl State {
    fn apply(&mut self, event: &Event) {
        self.seq += 1;
        match event {
            Event::TasksCreated { tasks } => {
                let files: HashSet<&str> = tasks.iter().map(|t| t.path.as_str()).collect();
                self.files_assigned += files.len() as u64;
                for t in tasks {
                    self.tasks.insert(t.task_id.clone(), t.clone());
                }
            }
            Event::Labeled { record } => {
                self.register(&record.categories);
                let records = self.labels.entry(record.task_id.clone()).or_default();
                records.push(record.clone());
                let status = match records.as_slice() {
                    [_] => Status::PartiallyLabeled,
                    [a, b] => match conflict_kind(a, b) {
                        None => Status::Labeled,
                        Some(kind) => {
                            self.conflicts.insert(
                                record.task_id.clone(),
                                Conflict {
                                    task_id: record.task_id.clone(),
                                    kind,
                                    resolver_id: None,
                                    resolution: None,
                                },
                            );
                            Status::Conflicted
                        }
                    },
                    _ => unreachable!("at most two labels per task"),
                };
                if let Some(t) = self.tasks.get_mut(&record.task_id) {
                    t.status = status;
                }
            }
            Event::Resolved { record } => {
                self.register(&record.categories);
                if let Some(c) = self.conflicts.get_mut(&record.task_id) {
                    c.resolver_id = Some(record.annotator_id.clone());
                    c.resolution = Some(record.clone());
                }
                if let Some(t) = self.tasks.get_mut(&record.task_id) {
                    t.status = Status::Resolved;
                }
            }
            Event::CategoryAdded { name } => {
                self.extensions.insert(name.clone());
            }
        }
    }

    fn register(&mut self, categories: &BTreeSet<String>) {
        for c in categories {
            if c.starts_with(EXTENSION_PREFIX) {
                self.extensions.insert(c.clone());
            }
        }
    }
}

#[derive(Debug)]
struct Persist {
    dir: PathBuf,
    log: File,
}

/// Conflict bookkeeping over all tasks labeled twice.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub double_labeled: usize,
    pub conflicts: usize,
    pub category: usize,
    pub link: usize,
    pub both: usize,
    pub conflict_rate: f64,
    /// Agreement on the summary / not-summary decision.
    pub summary_kappa: Option<f64>,
}

#[derive(Debug, Default)]
pub struct Store {
    state: State,
    persist: Option<Persist>,
}

impl Store {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Opens (or creates) a persistent store in `dir`.
    pub fn open(dir: &Path) -> Result<Self, StoreError> {
        fs::create_dir_all(dir)?;
        let snapshot = dir.join(SNAPSHOT_FILE);
        let mut state: State = if snapshot.exists() {
            serde_json::from_slice(&fs::read(&snapshot)?)?
        } else {
            State::default()
        };
        let log_path = dir.join(LOG_FILE);
        if log_path.exists() {
            let reader = BufReader::new(File::open(&log_path)?);
            for line in reader.lines().skip(state.seq as usize) {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                state.apply(&serde_json::from_str(&line)?);
            }
        }
        let log = OpenOptions::new().create(true).append(true).open(&log_path)?;
        log::debug!("opened store at {} ({} events)", dir.display(), state.seq);
        Ok(Self {
            state,
            persist: Some(Persist {
                dir: dir.to_path_buf(),
                log,
            }),
        })
    }

    fn commit(&mut self, event: Event) -> Result<(), StoreError> {
        if let Some(p) = &mut self.persist {
            let mut line = serde_json::to_vec(&event)?;
            line.push(b'\n');
            p.log.write_all(&line)?;
            p.log.sync_data()?;
        }
        self.state.apply(&event);
        if self.state.seq.is_multiple_of(SNAPSHOT_EVERY) {
            self.snapshot()?;
        }
        Ok(())
    }

    /// Writes the derived state next to the log.
    pub fn snapshot(&self) -> Result<(), StoreError> {
        if let Some(p) = &self.persist {
            let tmp = p.dir.join(format!("{SNAPSHOT_FILE}.tmp"));
            fs::write(&tmp, serde_json::to_vec(&self.state)?)?;
            fs::rename(tmp, p.dir.join(SNAPSHOT_FILE))?;
        }
        Ok(())
    }

    pub fn event_count(&self) -> u64 {
        self.state.seq
    }

    /// Samples up to `cap` comments per file and assigns each file to two
    /// pool members in round-robin order. Comments that already have a task
    /// are not sampled again.
    pub fn create_batch(
        &mut self,
        manifest: &CorpusManifest,
        pool: &[String],
        cap: usize,
        seed: u64,
    ) -> Result<Vec<AnnotationTask>, StoreError> {
        let mut members: Vec<&String> = Vec::new();
        for a in pool {
            if !members.contains(&a) {
                members.push(a);
            }
        }
        if members.len() < MIN_POOL {
            return Err(StoreError::PoolTooSmall(members.len()));
        }
        let taken: HashSet<&str> = self.state.tasks.values().map(|t| t.comment_id.as_str()).collect();
        let mut by_file: BTreeMap<String, Vec<AnnotationTaskDraft>> = BTreeMap::new();
        let mut any = false;
        for (m, comments) in manifest.methods() {
            for c in comments {
                any = true;
                if taken.contains(c.id.as_str()) {
                    continue;
                }
                let draft = AnnotationTaskDraft {
                    method_id: m.id.clone(),
                    path: m.path.clone(),
                    comment_id: c.id.clone(),
                    comment_text: c.text.clone(),
                    comment_start: c.start_line,
                    comment_end: c.end_line,
                    lines: m
                        .lines
                        .iter()
                        .map(|s| TaskLine {
                            n: s.line_no,
                            text: s.text.clone(),
                            linkable: s.is_linkable(),
                        })
                        .collect(),
                };
                by_file.entry(m.path.clone()).or_default().push(draft);
            }
        }
        if !any {
            return Err(StoreError::EmptyManifest);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut next = self.state.tasks.len() + 1;
        let mut round = self.state.files_assigned as usize;
        let p = members.len();
        let mut tasks = Vec::new();
        for (_, comments) in by_file {
            let picked: Vec<usize> = if comments.len() > cap {
                let mut idx = rand::seq::index::sample(&mut rng, comments.len(), cap).into_vec();
                idx.sort_unstable();
                idx
            } else {
                (0..comments.len()).collect()
            };
            if picked.is_empty() {
                continue;
            }
            let assignees = [members[(2 * round) % p].clone(), members[(2 * round + 1) % p].clone()];
            round += 1;
            for i in picked {
                let d = comments[i].clone();
                tasks.push(AnnotationTask {
                    task_id: format!("T{next:06}"),
                    method_id: d.method_id,
                    comment_id: d.comment_id,
                    path: d.path,
                    comment_text: d.comment_text,
                    comment_start: d.comment_start,
                    comment_end: d.comment_end,
                    lines: d.lines,
                    assignees: assignees.clone(),
                    status: Status::Pending,
                });
                next += 1;
            }
        }
        if !tasks.is_empty() {
            self.commit(Event::TasksCreated { tasks: tasks.clone() })?;
        }
        Ok(tasks)
    }

    fn check_label(&self, task: &AnnotationTask, categories: &BTreeSet<String>, links: &LinkSet) -> Result<(), StoreError> {
        if categories.is_empty() {
            return Err(StoreError::NoCategories);
        }
        if let Some(bad) = categories.iter().find(|c| !gold::is_valid_category(c)) {
            return Err(StoreError::InvalidCategory(bad.clone()));
        }
        let bad: Vec<usize> = links.iter().filter(|&l| !task.is_linkable(l)).collect();
        if !bad.is_empty() {
            return Err(StoreError::InvalidLinks(bad));
        }
        Ok(())
    }

    /// Records one annotator's label and returns the task's new status.
    pub fn submit_label(&mut self, record: LabelRecord) -> Result<Status, StoreError> {
        let task = self.task(&record.task_id)?;
        if !task.is_assignee(&record.annotator_id) {
            return Err(StoreError::NotAssignee {
                task_id: record.task_id,
                annotator: record.annotator_id,
            });
        }
        if self.labels(&record.task_id).iter().any(|r| r.annotator_id == record.annotator_id) {
            return Err(StoreError::AlreadySubmitted {
                task_id: record.task_id,
                annotator: record.annotator_id,
            });
        }
        if !task.status.is_open() {
            return Err(StoreError::WrongStatus {
                task_id: record.task_id,
                status: task.status,
            });
        }
        self.check_label(task, &record.categories, &record.links)?;
        let id = record.task_id.clone();
        self.commit(Event::Labeled { record })?;
        Ok(self.state.tasks[&id].status)
    }

    pub fn detect_conflicts(&self, task_id: &str) -> Result<Option<ConflictKind>, StoreError> {
        self.task(task_id)?;
        match self.labels(task_id) {
            [a, b] => Ok(conflict_kind(a, b)),
            _ => Err(StoreError::MissingRecords(task_id.to_string())),
        }
    }

    /// Stores a third annotator's decision as the gold label.
    pub fn resolve(&mut self, resolution: LabelRecord) -> Result<Status, StoreError> {
        let task = self.task(&resolution.task_id)?;
        if task.status != Status::Conflicted {
            return Err(StoreError::WrongStatus {
                task_id: resolution.task_id,
                status: task.status,
            });
        }
        if task.is_assignee(&resolution.annotator_id) {
            return Err(StoreError::ResolverIsAssignee {
                task_id: resolution.task_id,
                resolver: resolution.annotator_id,
            });
        }
        self.check_label(task, &resolution.categories, &resolution.links)?;
        self.commit(Event::Resolved { record: resolution })?;
        Ok(Status::Resolved)
    }

    /// Adds an annotator-defined category; returns false if it existed.
    pub fn add_category(&mut self, name: &str) -> Result<bool, StoreError> {
        if !name.starts_with(EXTENSION_PREFIX) || !gold::is_valid_category(name) {
            return Err(StoreError::InvalidCategory(name.to_string()));
        }
        if self.state.extensions.contains(name) {
            return Ok(false);
        }
        self.commit(Event::CategoryAdded { name: name.to_string() })?;
        Ok(true)
    }

    pub fn categories(&self) -> Vec<String> {
        TAXONOMY
            .iter()
            .map(|s| s.to_string())
            .chain(self.state.extensions.iter().cloned())
            .collect()
    }

    pub fn extensions(&self) -> &BTreeSet<String> {
        &self.state.extensions
    }

    pub fn task(&self, task_id: &str) -> Result<&AnnotationTask, StoreError> {
        self.state
            .tasks
            .get(task_id)
            .ok_or_else(|| StoreError::UnknownTask(task_id.to_string()))
    }

    pub fn tasks(&self) -> impl Iterator<Item = &AnnotationTask> {
        self.state.tasks.values()
    }

    pub fn labels(&self, task_id: &str) -> &[LabelRecord] {
        self.state.labels.get(task_id).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn conflict(&self, task_id: &str) -> Option<&Conflict> {
        self.state.conflicts.get(task_id)
    }

    /// Open tasks the annotator still has to label, oldest first.
    pub fn assignments(&self, annotator: &str) -> Vec<&AnnotationTask> {
        self.state
            .tasks
            .values()
            .filter(|t| {
                t.status.is_open()
                    && t.is_assignee(annotator)
                    && !self.labels(&t.task_id).iter().any(|r| r.annotator_id == annotator)
            })
            .collect()
    }

    /// Unresolved conflicts the given annotator is allowed to resolve.
    pub fn open_conflicts(&self, resolver: &str) -> Vec<&Conflict> {
        self.state
            .conflicts
            .values()
            .filter(|c| c.resolution.is_none() && !self.state.tasks[&c.task_id].is_assignee(resolver))
            .collect()
    }

    /// Gold triplets for every agreed or resolved task, in task order.
    pub fn export_gold(&self) -> Vec<GoldRecord> {
        self.state
            .tasks
            .values()
            .filter_map(|t| {
                let label = match t.status {
                    Status::Labeled => self.labels(&t.task_id).first()?,
                    Status::Resolved => self.conflict(&t.task_id)?.resolution.as_ref()?,
                    _ => return None,
                };
                Some(GoldRecord {
                    task_id: t.task_id.clone(),
                    method_id: t.method_id.clone(),
                    comment_id: t.comment_id.clone(),
                    path: t.path.clone(),
                    categories: label.categories.clone(),
                    links: label.links.clone(),
                })
            })
            .collect()
    }

    pub fn agreement(&self) -> AgreementReport {
        let pairs: Vec<(&LabelRecord, &LabelRecord)> = self
            .state
            .labels
            .values()
            .filter_map(|rs| match rs.as_slice() {
                [a, b] => Some((a, b)),
                _ => None,
            })
            .collect();
        let mut report = AgreementReport {
            double_labeled: pairs.len(),
            conflicts: 0,
            category: 0,
            link: 0,
            both: 0,
            conflict_rate: 0.0,
            summary_kappa: None,
        };
        for (a, b) in &pairs {
            match conflict_kind(a, b) {
                Some(ConflictKind::Category) => report.category += 1,
                Some(ConflictKind::Link) => report.link += 1,
                Some(ConflictKind::Both) => report.both += 1,
                None => continue,
            }
            report.conflicts += 1;
        }
        if !pairs.is_empty() {
            report.conflict_rate = report.conflicts as f64 / pairs.len() as f64;
            let xs: Vec<bool> = pairs.iter().map(|(a, _)| a.categories.contains(gold::SUMMARY)).collect();
            let ys: Vec<bool> = pairs.iter().map(|(_, b)| b.categories.contains(gold::SUMMARY)).collect();
            report.summary_kappa = cohens_kappa(&xs, &ys).ok();
        }
        report
    }
}

#[derive(Debug, Clone)]
struct AnnotationTaskDraft {
    method_id: String,
    path: String,
    comment_id: String,
    comment_text: String,
    comment_start: usize,
    comment_end: usize,
    lines: Vec<TaskLine>,
}
