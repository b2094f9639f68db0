//! Per-statement features for the forest linker.
//!
//! Sixteen features in three families: eight describe the statement, four
//! the comment, and four the relation between the two. Noun and verb counts
//! come from a closed verb list plus suffix rules rather than a tagger.

use std::collections::BTreeSet;

use super::heuristics::{first_candidate_line, term_similarity};
use crate::extractor::{strip_comment_markers, CommentKind, InnerComment, SourceMethod, Statement};
use crate::lexer::{self, TokenKind};

pub const N_FEATURES: usize = 16;

/// Bumped whenever the meaning or order of features changes; saved models
/// carry it and refuse to load under a different schema.
pub const FEATURE_SCHEMA: &str = "link-features-v1";

pub const FEATURE_NAMES: [&str; N_FEATURES] = [
    "statement_type",
    "line_distance",
    "first_after_comment",
    "blank_between",
    "relative_indent",
    "shares_call_with_previous",
    "shares_call_with_next",
    "statement_tokens",
    "comment_words",
    "comment_nouns",
    "comment_verbs",
    "comment_is_block",
    "term_similarity",
    "shared_identifiers",
    "same_indent",
    "intervening_comment",
];

pub type FeatureVector = [f64; N_FEATURES];

/// Statement categories, encoded as their discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatementType {
    If = 0,
    Loop = 1,
    Return = 2,
    Throw = 3,
    Call = 4,
    Assignment = 5,
    Declaration = 6,
    Other = 7,
}

const PRIMITIVES: &[&str] = &[
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "var",
];

pub fn statement_type(code: &str) -> StatementType {
    let toks = lexer::scan(code, false).expect("lenient scan never fails");
    let text: Vec<&str> = toks.iter().map(|t| t.text(code)).collect();
    let mut i = 0;
    while text.get(i) == Some(&"}") {
        i += 1;
    }
    if text.get(i) == Some(&"else") {
        i += 1;
    }
    match text.get(i).copied() {
        Some("if") => return StatementType::If,
        Some("for" | "while" | "do") => return StatementType::Loop,
        Some("return") => return StatementType::Return,
        Some("throw") => return StatementType::Throw,
        _ => {}
    }
    if is_declaration(&toks[i..], code) {
        return StatementType::Declaration;
    }
    let assigns = toks[i..].iter().any(|t| {
        t.kind == TokenKind::Operator
            && matches!(
                t.text(code),
                "=" | "+=" | "-=" | "*=" | "/=" | "%=" | "&=" | "|=" | "^=" | "<<=" | ">>=" | ">>>="
            )
    });
    if assigns {
        StatementType::Assignment
    } else if !method_calls(code).is_empty() {
        StatementType::Call
    } else {
        StatementType::Other
    }
}

// `[final] Type[<..>][[]] name (= | ; | :)`
fn is_declaration(toks: &[lexer::Token], code: &str) -> bool {
    let text: Vec<&str> = toks.iter().map(|t| t.text(code)).collect();
    let mut i = 0;
    while matches!(text.get(i), Some(&"final")) {
        i += 1;
    }
    let Some(first) = toks.get(i) else {
        return false;
    };
    let is_type = first.kind == TokenKind::Ident || PRIMITIVES.contains(&text[i]);
    if !is_type {
        return false;
    }
    i += 1;
    while text.get(i) == Some(&".") && toks.get(i + 1).is_some_and(|t| t.kind == TokenKind::Ident) {
        i += 2;
    }
    if text.get(i) == Some(&"<") {
        let mut depth = 0i32;
        while let Some(t) = text.get(i) {
            depth += match *t {
                "<" => 1,
                ">" => -1,
                ">>" => -2,
                ">>>" => -3,
                _ => 0,
            };
            i += 1;
            if depth <= 0 {
                break;
            }
        }
    }
    while text.get(i) == Some(&"[") && text.get(i + 1) == Some(&"]") {
        i += 2;
    }
    toks.get(i).is_some_and(|t| t.kind == TokenKind::Ident)
        && matches!(text.get(i + 1), Some(&"=") | Some(&";") | Some(&":") | Some(&",") | None)
}

/// Names invoked on a line: identifiers directly followed by `(`.
pub fn method_calls(code: &str) -> BTreeSet<String> {
    let toks = lexer::scan(code, false).expect("lenient scan never fails");
    toks.windows(2)
        .filter(|w| w[0].kind == TokenKind::Ident && w[1].text(code) == "(")
        .map(|w| w[0].text(code).to_string())
        .collect()
}

fn indentation(raw: &str) -> usize {
    raw.chars()
        .take_while(|c| c.is_whitespace())
        .map(|c| if c == '\t' { 4 } else { 1 })
        .sum()
}

const VERBS: &[&str] = &[
    "add", "allocate", "append", "apply", "assign", "build", "calculate", "call", "cast", "check",
    "clean", "clear", "close", "collect", "compare", "compute", "configure", "connect", "convert",
    "copy", "count", "create", "decode", "delete", "determine", "do", "dump", "encode", "ensure",
    "execute", "extract", "fetch", "fill", "find", "fire", "flush", "format", "generate", "get",
    "handle", "ignore", "increment", "init", "initialize", "insert", "invoke", "iterate", "keep",
    "load", "lock", "log", "look", "make", "mark", "merge", "move", "notify", "open", "parse",
    "prepare", "print", "process", "put", "read", "register", "release", "reload", "remove",
    "render", "replace", "reset", "resolve", "restore", "retrieve", "return", "run", "save",
    "scan", "search", "send", "set", "skip", "sort", "split", "start", "stop", "store", "try",
    "update", "use", "validate", "verify", "wait", "wrap", "write",
];

const STOPWORDS: &[&str] = &[
    "a", "an", "the", "and", "or", "but", "if", "then", "else", "of", "to", "in", "on", "at",
    "by", "for", "with", "from", "into", "as", "is", "are", "was", "were", "be", "been", "it",
    "its", "this", "that", "these", "those", "we", "i", "you", "they", "he", "she", "not", "no",
    "so", "all", "any", "some", "when", "while", "which", "what", "who", "there", "here", "than",
    "only", "also", "just", "can", "will", "should", "must", "may", "might", "would", "could",
    "has", "have", "had", "our", "their", "my", "your", "out", "up", "down", "over", "per",
];

pub fn is_verb(word: &str) -> bool {
    if VERBS.contains(&word) {
        return true;
    }
    let inflected_stem = word
        .strip_suffix("es")
        .filter(|s| VERBS.contains(s))
        .or_else(|| word.strip_suffix('s').filter(|s| VERBS.contains(s)));
    inflected_stem.is_some()
        || ["ed", "ing", "ize", "ify"]
            .iter()
            .any(|suf| word.len() > suf.len() + 2 && word.ends_with(suf))
}

pub fn is_noun(word: &str) -> bool {
    word.chars().all(|c| c.is_ascii_alphabetic()) && !STOPWORDS.contains(&word) && !is_verb(word)
}

/// Lowercased alphabetic words of a comment.
pub fn comment_words(raw: &str) -> Vec<String> {
    strip_comment_markers(raw)
        .split_whitespace()
        .map(|w| {
            w.trim_matches(|c: char| !c.is_alphanumeric())
                .to_lowercase()
        })
        .filter(|w| !w.is_empty())
        .collect()
}

/// Lowercase sub-words of the identifiers on a line (camelCase and
/// snake_case split).
fn identifier_words(code: &str) -> BTreeSet<String> {
    let toks = lexer::scan(code, false).expect("lenient scan never fails");
    let mut out = BTreeSet::new();
    for t in toks.iter().filter(|t| t.kind == TokenKind::Ident) {
        let mut cur = String::new();
        let mut prev_lower = false;
        for ch in t.text(code).chars() {
            if ch == '_' || ch == '$' || ch.is_ascii_digit() {
                if !cur.is_empty() {
                    out.insert(std::mem::take(&mut cur));
                }
                prev_lower = false;
                continue;
            }
            if ch.is_uppercase() && prev_lower && !cur.is_empty() {
                out.insert(std::mem::take(&mut cur));
            }
            prev_lower = ch.is_lowercase();
            cur.extend(ch.to_lowercase());
        }
        if !cur.is_empty() {
            out.insert(cur);
        }
    }
    out
}

fn neighbour(method: &SourceMethod, line: usize, forward: bool) -> Option<&Statement> {
    let mut it: Box<dyn Iterator<Item = &Statement>> = if forward {
        Box::new(method.lines.iter().skip(line))
    } else {
        Box::new(method.lines.iter().take(line.saturating_sub(1)).rev())
    };
    it.find(|s| s.is_linkable())
}

fn shares_call(calls: &BTreeSet<String>, other: Option<&Statement>) -> f64 {
    let shared = other.is_some_and(|o| !calls.is_disjoint(&method_calls(&o.code)));
    flag(shared)
}

fn flag(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

/// Feature vector describing `statement` relative to `comment`.
pub fn extract_features(
    method: &SourceMethod,
    comment: &InnerComment,
    statement: &Statement,
) -> FeatureVector {
    let n_lines = method.lines.len().max(1) as f64;
    let line = statement.line_no;
    let first = first_candidate_line(method, comment);
    let first_linkable = method
        .linkable_lines()
        .find(|s| s.line_no >= first)
        .map(|s| s.line_no);

    let (lo, hi) = if line > comment.end_line {
        (comment.end_line + 1, line)
    } else {
        (line + 1, comment.start_line)
    };
    let between = || (lo..hi).filter_map(|l| method.line(l));
    let blank_between = between().any(|s| s.is_blank);
    let intervening_comment = between().any(|s| s.is_comment_only);

    let comment_line = method.line(comment.start_line).map_or("", |s| s.text.as_str());
    let indent_diff = indentation(&statement.text) as f64 - indentation(comment_line) as f64;

    let calls = method_calls(&statement.code);
    let words = comment_words(&comment.text);
    let nouns = words.iter().filter(|w| is_noun(w)).count();
    let verbs = words.iter().filter(|w| is_verb(w)).count();
    let ident_words = identifier_words(&statement.code);
    let shared_idents = words
        .iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .filter(|w| ident_words.contains(*w))
        .count();

    [
        statement_type(&statement.code) as u8 as f64,
        (line as f64 - comment.end_line as f64) / n_lines,
        flag(first_linkable == Some(line)),
        flag(blank_between),
        indent_diff,
        shares_call(&calls, neighbour(method, line, false)),
        shares_call(&calls, neighbour(method, line, true)),
        lexer::tokenize(&statement.code).len() as f64,
        words.len() as f64,
        nouns as f64,
        verbs as f64,
        flag(comment.kind == CommentKind::Block),
        term_similarity(&strip_comment_markers(&comment.text), &statement.code),
        shared_idents as f64,
        flag(indent_diff == 0.0),
        flag(intervening_comment),
    ]
}
