//! Text-to-text encodings for comment classification, comment linking and
//! snippet summarization, plus snippet-level dedup and dataset splitting.
//!
//! All inputs are single-line strings: each method line is trimmed, blank
//! lines are dropped and the remaining lines are joined by one space.
//!
//! * classification: the comment of interest is wrapped in
//!   `<comment>`...`</comment>`; target is `code summary` or `other`.
//! * linking: as classification, plus `<N>` in front of every linkable line
//!   `N`; target is the ascending tag stream of linked lines, e.g. `<1><2><4>`.
//! * summarization: the comment is removed and every maximal run of linked
//!   lines is wrapped in `<start>`...`<end>`; target is the preprocessed
//!   comment.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rust_stemmers::{Algorithm, Stemmer};
use serde::{Deserialize, Serialize};

use crate::extractor::{strip_comment_markers, InnerComment, SourceMethod};
use crate::lexer;
use crate::linkers::LinkSet;

pub const COMMENT_OPEN: &str = "<comment>";
pub const COMMENT_CLOSE: &str = "</comment>";
pub const RUN_OPEN: &str = "<start>";
pub const RUN_CLOSE: &str = "<end>";
pub const LABEL_SUMMARY: &str = "code summary";
pub const LABEL_OTHER: &str = "other";
pub const MIN_SUMMARY_WORDS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Classification,
    Linking,
    Summarization,
}

impl Task {
    pub const ALL: [Task; 3] = [Task::Classification, Task::Linking, Task::Summarization];

    pub fn as_str(self) -> &'static str {
        match self {
            Task::Classification => "classification",
            Task::Linking => "linking",
            Task::Summarization => "summarization",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TaskInstance {
    pub task: Task,
    pub input_text: String,
    pub target_text: String,
    pub method_id: String,
    pub comment_id: String,
    /// Source file; the grouping key for splits.
    pub path: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EncodeError {
    #[error("comment {0} not found in method")]
    CommentNotFound(String),
    #[error("line {line} is outside the method (1..={len})")]
    LineOutOfRange { line: usize, len: usize },
    #[error("line {0} is blank or comment-only and cannot be linked")]
    NotLinkable(usize),
    #[error("summarization needs at least one linked line")]
    EmptyLinks,
    #[error("comment is not a summary candidate")]
    NotSummaryCandidate,
    #[error("unbalanced or misplaced tags: {0}")]
    Tags(String),
}

/// Marker for a link target that does not follow the `<N>` grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("unparseable link target")]
pub struct Unparseable;

fn stemmer() -> &'static Stemmer {
    static STEMMER: OnceLock<Stemmer> = OnceLock::new();
    STEMMER.get_or_init(|| Stemmer::create(Algorithm::English))
}

pub fn stem(word: &str) -> String {
    stemmer().stem(word).into_owned()
}

/// Strips comment markers, lowercases and stems word by word.
pub fn preprocess_comment(text: &str) -> String {
    strip_comment_markers(text)
        .to_lowercase()
        .split_whitespace()
        .map(stem)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn is_summary_candidate(comment_text: &str) -> bool {
    comment_text.is_ascii()
        && preprocess_comment(comment_text).split_whitespace().count() >= MIN_SUMMARY_WORDS
}

#[derive(Default)]
struct Render<'a> {
    wrap: bool,
    remove: bool,
    line_tags: bool,
    runs: Option<&'a LinkSet>,
}

fn check_comment(method: &SourceMethod, comment: &InnerComment) -> Result<(), EncodeError> {
    let first = comment.text.lines().next().unwrap_or("");
    let found = method
        .source
        .get(comment.span.clone())
        .is_some_and(|s| s.starts_with(first) && (s.starts_with("//") || s.starts_with("/*")));
    if found {
        Ok(())
    } else {
        Err(EncodeError::CommentNotFound(comment.id.clone()))
    }
}

fn check_lines(method: &SourceMethod, links: &LinkSet) -> Result<(), EncodeError> {
    for l in links.iter() {
        if l == 0 || l > method.lines.len() {
            return Err(EncodeError::LineOutOfRange {
                line: l,
                len: method.lines.len(),
            });
        }
        if !method.is_linkable(l) {
            return Err(EncodeError::NotLinkable(l));
        }
    }
    Ok(())
}

fn render(method: &SourceMethod, comment: &InnerComment, opts: Render) -> String {
    let src = &method.source;
    let (cs, ce) = (comment.span.start, comment.span.end);
    let mut pieces = Vec::new();
    let mut offset = 0;
    for stmt in &method.lines {
        let raw = &src[offset..offset + stmt_len(src, offset)];
        let (ls, le) = (offset, offset + raw.len());
        offset = le + 1;

        let mut line = String::new();
        let mut cursor = ls;
        if cs < le.max(ls + 1) && ce > ls || (cs == ls && ce == ls) {
            let s = cs.max(ls);
            let e = ce.min(le);
            line.push_str(&src[cursor..s]);
            if opts.wrap && s == cs {
                line.push_str(COMMENT_OPEN);
            }
            if !opts.remove {
                line.push_str(&src[s..e]);
            }
            if opts.wrap && e == ce {
                line.push_str(COMMENT_CLOSE);
            }
            cursor = e;
        }
        line.push_str(&src[cursor..le]);
        let text = line.trim();
        if text.is_empty() {
            continue;
        }

        let l = stmt.line_no;
        let mut piece = String::new();
        if let Some(links) = opts.runs {
            if links.contains(l) && (l == 1 || !links.contains(l - 1)) {
                piece.push_str(RUN_OPEN);
                piece.push(' ');
            }
        }
        if opts.line_tags && stmt.is_linkable() {
            piece.push_str(&format!("<{l}> "));
        }
        piece.push_str(text);
        if let Some(links) = opts.runs {
            if links.contains(l) && !links.contains(l + 1) {
                piece.push(' ');
                piece.push_str(RUN_CLOSE);
            }
        }
        pieces.push(piece);
    }
    pieces.join(" ")
}

fn stmt_len(src: &str, offset: usize) -> usize {
    src[offset..].find('\n').unwrap_or(src.len() - offset)
}

/// Method text with the comment of interest wrapped in comment tags.
pub fn encode_classification(
    method: &SourceMethod,
    comment: &InnerComment,
) -> Result<String, EncodeError> {
    check_comment(method, comment)?;
    Ok(render(
        method,
        comment,
        Render {
            wrap: true,
            ..Render::default()
        },
    ))
}

pub fn classification_target(is_summary: bool) -> &'static str {
    if is_summary {
        LABEL_SUMMARY
    } else {
        LABEL_OTHER
    }
}

/// Linking input, and the tag-stream target when a gold set is given.
pub fn encode_linking(
    method: &SourceMethod,
    comment: &InnerComment,
    gold: Option<&LinkSet>,
) -> Result<(String, Option<String>), EncodeError> {
    check_comment(method, comment)?;
    if let Some(g) = gold {
        check_lines(method, g)?;
    }
    let input = render(
        method,
        comment,
        Render {
            wrap: true,
            line_tags: true,
            ..Render::default()
        },
    );
    Ok((input, gold.map(encode_link_target)))
}

pub fn encode_link_target(links: &LinkSet) -> String {
    links.iter().map(|l| format!("<{l}>")).collect()
}

/// Parses a stream of `<N>` tags (N ≥ 1). Whitespace between tags is
/// tolerated; anything else is unparseable.
pub fn decode_link_target(text: &str) -> Result<LinkSet, Unparseable> {
    let mut out = LinkSet::new();
    let mut rest = text.trim_start();
    while !rest.is_empty() {
        rest = rest.strip_prefix('<').ok_or(Unparseable)?;
        let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 || digits > 9 {
            return Err(Unparseable);
        }
        let n: usize = rest[..digits].parse().map_err(|_| Unparseable)?;
        if n == 0 {
            return Err(Unparseable);
        }
        rest = rest[digits..].strip_prefix('>').ok_or(Unparseable)?;
        out.insert(n);
        rest = rest.trim_start();
    }
    Ok(out)
}

/// Summarization input (comment removed, runs wrapped) and target.
pub fn encode_summarization(
    method: &SourceMethod,
    comment: &InnerComment,
    links: &LinkSet,
) -> Result<(String, String), EncodeError> {
    check_comment(method, comment)?;
    if links.is_empty() {
        return Err(EncodeError::EmptyLinks);
    }
    check_lines(method, links)?;
    if !is_summary_candidate(&comment.text) {
        return Err(EncodeError::NotSummaryCandidate);
    }
    let input = render(
        method,
        comment,
        Render {
            remove: true,
            runs: Some(links),
            ..Render::default()
        },
    );
    Ok((input, preprocess_comment(&comment.text)))
}

/// Text of each `<start>`...`<end>` run of a summarization input.
pub fn snippet_runs(input: &str) -> Result<Vec<&str>, EncodeError> {
    let mut runs = Vec::new();
    let mut rest = input;
    while let Some(open) = rest.find(RUN_OPEN) {
        let after = &rest[open + RUN_OPEN.len()..];
        let close = after
            .find(RUN_CLOSE)
            .ok_or_else(|| EncodeError::Tags("unclosed <start>".into()))?;
        let body = &after[..close];
        if body.contains(RUN_OPEN) {
            return Err(EncodeError::Tags("nested <start>".into()));
        }
        if rest[..open].contains(RUN_CLOSE) {
            return Err(EncodeError::Tags("<end> without <start>".into()));
        }
        runs.push(body.trim());
        rest = &after[close + RUN_CLOSE.len()..];
    }
    if rest.contains(RUN_CLOSE) {
        return Err(EncodeError::Tags("<end> without <start>".into()));
    }
    Ok(runs)
}

/// Normalized documented-code token stream: lexical tokens of every run,
/// runs separated by an empty token.
pub fn snippet_tokens(input: &str) -> Result<Vec<String>, EncodeError> {
    let mut out = Vec::new();
    for (i, run) in snippet_runs(input)?.into_iter().enumerate() {
        if i > 0 {
            out.push(String::new());
        }
        out.extend(lexer::tokenize(run));
    }
    Ok(out)
}

/// Keeps the first instance of every documented-code token stream.
pub fn dedup_snippets(instances: Vec<TaskInstance>) -> Vec<TaskInstance> {
    let mut seen = HashSet::new();
    instances
        .into_iter()
        .filter(|inst| {
            let key = snippet_tokens(&inst.input_text).unwrap_or_else(|_| vec![inst.input_text.clone()]);
            seen.insert(key)
        })
        .collect()
}

/// Structural check of an encoded input.
pub fn validate_input(task: Task, input: &str) -> Result<(), EncodeError> {
    let opens = input.matches(COMMENT_OPEN).count();
    let closes = input.matches(COMMENT_CLOSE).count();
    match task {
        Task::Classification | Task::Linking => {
            if opens != 1 || closes != 1 {
                return Err(EncodeError::Tags(format!(
                    "{opens} <comment> / {closes} </comment>"
                )));
            }
            if input.find(COMMENT_OPEN) > input.find(COMMENT_CLOSE) {
                return Err(EncodeError::Tags("</comment> before <comment>".into()));
            }
        }
        Task::Summarization => {
            if opens + closes != 0 {
                return Err(EncodeError::Tags("comment tags in summarization input".into()));
            }
            if snippet_runs(input)?.is_empty() {
                return Err(EncodeError::Tags("no <start>/<end> pair".into()));
            }
        }
    }
    if task == Task::Linking {
        let tags = line_tags(input);
        if tags.windows(2).any(|w| w[0] >= w[1]) {
            return Err(EncodeError::Tags("line tags not increasing".into()));
        }
    }
    Ok(())
}

/// `<N>` tags in order of appearance. Only tags standing as their own
/// whitespace-separated word count.
pub fn line_tags(input: &str) -> Vec<usize> {
    input
        .split_whitespace()
        .filter_map(|w| w.strip_prefix('<')?.strip_suffix('>')?.parse().ok())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKey {
    File,
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub ratios: [f64; 3],
    pub group_key: GroupKey,
    pub seed: u64,
}

impl Default for SplitSpec {
    fn default() -> Self {
        Self {
            ratios: [0.8, 0.1, 0.1],
            group_key: GroupKey::File,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SplitError {
    #[error("split ratios must be positive and sum to 1, got {0:?}")]
    BadRatios([f64; 3]),
    #[error("{0} groups cannot fill 3 partitions")]
    TooFewGroups(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Split {
    Train,
    Eval,
    Test,
}

impl Split {
    pub const ALL: [Split; 3] = [Split::Train, Split::Eval, Split::Test];

    pub fn as_str(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Eval => "eval",
            Split::Test => "test",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Splits {
    pub train: Vec<TaskInstance>,
    pub eval: Vec<TaskInstance>,
    pub test: Vec<TaskInstance>,
}

impl Splits {
    pub fn get(&self, split: Split) -> &[TaskInstance] {
        match split {
            Split::Train => &self.train,
            Split::Eval => &self.eval,
            Split::Test => &self.test,
        }
    }

    pub fn sizes(&self) -> (usize, usize, usize) {
        (self.train.len(), self.eval.len(), self.test.len())
    }
}

/// Integer targets that sum to `n`, by largest remainder.
fn targets(n: usize, ratios: [f64; 3]) -> [usize; 3] {
    let raw: Vec<f64> = ratios.iter().map(|r| r * n as f64).collect();
    let mut t: [usize; 3] = std::array::from_fn(|i| raw[i].floor() as usize);
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&a, &b| {
        let ra = raw[a] - raw[a].floor();
        let rb = raw[b] - raw[b].floor();
        rb.total_cmp(&ra).then(a.cmp(&b))
    });
    let mut left = n - t.iter().sum::<usize>();
    for i in order.into_iter().cycle() {
        if left == 0 {
            break;
        }
        t[i] += 1;
        left -= 1;
    }
    t
}

/// Seeded, optionally group-atomic train/eval/test split. Groups are
/// shuffled and each goes to the partition furthest below its target;
/// instances keep their input order inside a partition.
pub fn split_dataset(instances: Vec<TaskInstance>, spec: &SplitSpec) -> Result<Splits, SplitError> {
    let sum: f64 = spec.ratios.iter().sum();
    if spec.ratios.iter().any(|r| *r <= 0.0 || !r.is_finite()) || (sum - 1.0).abs() > 1e-9 {
        return Err(SplitError::BadRatios(spec.ratios));
    }
    let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    let mut order: Vec<String> = Vec::new();
    for (i, inst) in instances.iter().enumerate() {
        let key = match spec.group_key {
            GroupKey::File => inst.path.clone(),
            GroupKey::None => i.to_string(),
        };
        let members = groups.entry(key.clone()).or_default();
        if members.is_empty() {
            order.push(key);
        }
        members.push(i);
    }
    if order.len() < 3 {
        return Err(SplitError::TooFewGroups(order.len()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    order.shuffle(&mut rng);

    let goal = targets(instances.len(), spec.ratios);
    let mut filled = [0usize; 3];
    let mut assignment = vec![0usize; instances.len()];
    for key in &order {
        let members = &groups[key];
        let part = (0..3)
            .max_by(|&a, &b| {
                let da = goal[a] as i64 - filled[a] as i64;
                let db = goal[b] as i64 - filled[b] as i64;
                da.cmp(&db).then(b.cmp(&a))
            })
            .expect("three partitions");
        filled[part] += members.len();
        for &i in members {
            assignment[i] = part;
        }
    }
    let mut out = Splits::default();
    for (inst, part) in instances.into_iter().zip(assignment) {
        match part {
            0 => out.train.push(inst),
            1 => out.eval.push(inst),
            _ => out.test.push(inst),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extractor::extract_inner_comments;

    fn setup(src: &str) -> (SourceMethod, Vec<InnerComment>) {
        let m = SourceMethod::from_source("p", "A.java", "m", false, 1, src);
        let cs = extract_inner_comments(&m).unwrap();
        (m, cs)
    }

    const METHOD: &str = "void load() {\n    // read the config file from disk\n    open();\n    parse();\n\n    // then close it\n    close();\n}";

    #[test]
    fn preprocesses_comments() {
        assert_eq!(preprocess_comment("// Loads the cached values"), "load the cach valu");
        assert_eq!(preprocess_comment("/* x */"), "x");
        assert_eq!(preprocess_comment("load"), "load");
    }

    #[test]
    fn summary_candidate_boundaries() {
        assert!(is_summary_candidate("// one two three four five"));
        assert!(!is_summary_candidate("// one two three four"));
        assert!(!is_summary_candidate("// one two three four fünf"));
    }

    #[test]
    fn classification_wraps_each_comment_once() {
        let (m, cs) = setup(METHOD);
        assert_eq!(cs.len(), 2);
        let inputs: Vec<String> = cs
            .iter()
            .map(|c| encode_classification(&m, c).unwrap())
            .collect();
        assert_eq!(
            inputs[0],
            "void load() { <comment>// read the config file from disk</comment> open(); parse(); // then close it close(); }"
        );
        assert_ne!(inputs[0], inputs[1]);
        for i in &inputs {
            validate_input(Task::Classification, i).unwrap();
        }
    }

    #[test]
    fn missing_comment_is_an_error() {
        let (m, cs) = setup(METHOD);
        let mut c = cs[0].clone();
        c.span = 0..4;
        assert_eq!(
            encode_classification(&m, &c),
            Err(EncodeError::CommentNotFound(c.id.clone()))
        );
    }

    #[test]
    fn linking_tags_linkable_lines() {
        let (m, cs) = setup(METHOD);
        let (input, target) = encode_linking(&m, &cs[0], Some(&LinkSet::from([3, 4]))).unwrap();
        assert_eq!(
            input,
            "<1> void load() { <comment>// read the config file from disk</comment> <3> open(); <4> parse(); // then close it <7> close(); <8> }"
        );
        assert_eq!(target.as_deref(), Some("<3><4>"));
        validate_input(Task::Linking, &input).unwrap();
        assert_eq!(line_tags(&input), [1, 3, 4, 7, 8]);
    }

    #[test]
    fn linking_target_examples() {
        assert_eq!(encode_link_target(&LinkSet::from([1, 2, 4])), "<1><2><4>");
        assert_eq!(encode_link_target(&LinkSet::new()), "");
    }

    #[test]
    fn linking_rejects_bad_gold() {
        let (m, cs) = setup(METHOD);
        assert_eq!(
            encode_linking(&m, &cs[0], Some(&LinkSet::from([42]))),
            Err(EncodeError::LineOutOfRange { line: 42, len: 8 })
        );
        assert_eq!(
            encode_linking(&m, &cs[0], Some(&LinkSet::from([5]))),
            Err(EncodeError::NotLinkable(5))
        );
    }

    #[test]
    fn decodes_tag_streams() {
        assert_eq!(decode_link_target("<1><2><4>"), Ok(LinkSet::from([1, 2, 4])));
        assert_eq!(decode_link_target(""), Ok(LinkSet::new()));
        assert_eq!(decode_link_target(" <2> <2><1> "), Ok(LinkSet::from([1, 2])));
        for bad in ["<<garbage>", "<1><", "1", "<0>", "<a>", "<1>x", "<12345678901>"] {
            assert_eq!(decode_link_target(bad), Err(Unparseable), "{bad}");
        }
    }

    #[test]
    fn summarization_wraps_runs() {
        let src = "void f() {\n  // compute the totals for each row\n  a();\n  b();\n  skip();\n  c();\n}";
        let (m, cs) = setup(src);
        let (input, target) = encode_summarization(&m, &cs[0], &LinkSet::from([3, 4])).unwrap();
        assert_eq!(input, "void f() { <start> a(); b(); <end> skip(); c(); }");
        assert_eq!(target, "comput the total for each row");

        let (input, _) = encode_summarization(&m, &cs[0], &LinkSet::from([3, 4, 6])).unwrap();
        assert_eq!(input, "void f() { <start> a(); b(); <end> skip(); <start> c(); <end> }");
        assert_eq!(input.matches(RUN_OPEN).count(), 2);
        assert_eq!(input.matches(RUN_CLOSE).count(), 2);
        validate_input(Task::Summarization, &input).unwrap();
        assert_eq!(snippet_runs(&input).unwrap(), ["a(); b();", "c();"]);
    }

    #[test]
    fn summarization_preconditions() {
        let (m, cs) = setup(METHOD);
        assert_eq!(
            encode_summarization(&m, &cs[0], &LinkSet::new()),
            Err(EncodeError::EmptyLinks)
        );
        assert_eq!(
            encode_summarization(&m, &cs[1], &LinkSet::from([7])),
            Err(EncodeError::NotSummaryCandidate)
        );
    }

    #[test]
    fn trailing_comment_is_removed_from_summary_input() {
        let (m, cs) = setup("void f() {\n  x = load(); // load the value from the cache\n}");
        let (input, _) = encode_summarization(&m, &cs[0], &LinkSet::from([2])).unwrap();
        assert_eq!(input, "void f() { <start> x = load(); <end> }");
    }

    fn inst(path: &str, input: &str) -> TaskInstance {
        TaskInstance {
            task: Task::Summarization,
            input_text: input.into(),
            target_text: "t".into(),
            method_id: "m".into(),
            comment_id: "c".into(),
            path: path.into(),
        }
    }

    #[test]
    fn snippet_dedup_uses_token_streams() {
        let a = inst("A", "void f() { <start> a(); <end> }");
        let a_other_method = inst("B", "int g() { <start> a ( ) ; <end> return 1; }");
        let b = inst("C", "void f() { <start> b(); <end> }");
        let out = dedup_snippets(vec![a.clone(), a_other_method, b.clone()]);
        assert_eq!(out, vec![a, b]);
        assert_eq!(dedup_snippets(out.clone()), out);
    }

    #[test]
    fn ungrouped_split_is_exact() {
        let xs: Vec<_> = (0..100).map(|i| inst(&i.to_string(), "x")).collect();
        let spec = SplitSpec {
            group_key: GroupKey::None,
            seed: 3,
            ..SplitSpec::default()
        };
        let s = split_dataset(xs.clone(), &spec).unwrap();
        assert_eq!(s.sizes(), (80, 10, 10));
        assert_eq!(s, split_dataset(xs, &spec).unwrap());
    }

    #[test]
    fn grouped_split_keeps_files_whole() {
        let xs: Vec<_> = (0..200)
            .map(|i| {
                let mut x = inst(&format!("F{}", i % 37), "x");
                x.comment_id = i.to_string();
                x
            })
            .collect();
        let s = split_dataset(xs, &SplitSpec::default()).unwrap();
        let files = |v: &[TaskInstance]| v.iter().map(|x| x.path.clone()).collect::<HashSet<_>>();
        let (tr, ev, te) = (files(&s.train), files(&s.eval), files(&s.test));
        assert!(tr.is_disjoint(&ev) && tr.is_disjoint(&te) && ev.is_disjoint(&te));
        assert_eq!(s.train.len() + s.eval.len() + s.test.len(), 200);
    }

    #[test]
    fn split_errors() {
        let xs: Vec<_> = (0..10).map(|i| inst(if i < 5 { "A" } else { "B" }, "x")).collect();
        assert_eq!(
            split_dataset(xs.clone(), &SplitSpec::default()),
            Err(SplitError::TooFewGroups(2))
        );
        let spec = SplitSpec {
            ratios: [0.5, 0.3, 0.3],
            ..SplitSpec::default()
        };
        assert!(matches!(split_dataset(xs, &spec), Err(SplitError::BadRatios(_))));
    }

    #[test]
    fn targets_sum_to_n() {
        assert_eq!(targets(100, [0.8, 0.1, 0.1]), [80, 10, 10]);
        assert_eq!(targets(7, [0.8, 0.1, 0.1]).iter().sum::<usize>(), 7);
    }
}
