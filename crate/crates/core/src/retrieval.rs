//! IR-Jaccard baseline: for a test snippet, reuse the summary of the most
//! similar training snippet.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::encoder::{snippet_tokens, TaskInstance};

pub type TokenSet = BTreeSet<String>;

/// |a ∩ b| / |a ∪ b|; two empty sets are identical, so 1.
pub fn jaccard(a: &TokenSet, b: &TokenSet) -> f64 {
    let inter = a.intersection(b).count();
    let union = a.len() + b.len() - inter;
    if union == 0 {
        1.0
    } else {
        inter as f64 / union as f64
    }
}

/// Unique lexical tokens of the documented code in a summarization input.
/// Inputs without run tags fall back to the whole text.
pub fn snippet_token_set(input: &str) -> TokenSet {
    match snippet_tokens(input) {
        Ok(tokens) if !tokens.is_empty() => tokens.into_iter().filter(|t| !t.is_empty()).collect(),
        _ => crate::lexer::tokenize(input).into_iter().collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub tokens: TokenSet,
    pub summary: String,
    pub comment_id: String,
}

#[derive(Debug, Clone, Default)]
pub struct SnippetIndex {
    entries: Vec<IndexEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("cannot build a retrieval index from zero pairs")]
pub struct EmptyIndex;

#[derive(Debug, Clone, PartialEq)]
pub struct Retrieved<'a> {
    pub summary: &'a str,
    pub score: f64,
    pub index: usize,
}

impl SnippetIndex {
    pub fn entries(&self) -> &[IndexEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Max-Jaccard entry; the earliest one wins ties.
    pub fn retrieve(&self, query: &TokenSet) -> Retrieved<'_> {
        let mut best = Retrieved {
            summary: &self.entries[0].summary,
            score: jaccard(query, &self.entries[0].tokens),
            index: 0,
        };
        for (i, e) in self.entries.iter().enumerate().skip(1) {
            let s = jaccard(query, &e.tokens);
            if s > best.score {
                best = Retrieved {
                    summary: &e.summary,
                    score: s,
                    index: i,
                };
            }
        }
        best
    }
}

pub fn build_index(entries: Vec<IndexEntry>) -> Result<SnippetIndex, EmptyIndex> {
    if entries.is_empty() {
        return Err(EmptyIndex);
    }
    Ok(SnippetIndex { entries })
}

/// Index over summarization training instances, in input order.
pub fn index_instances(train: &[TaskInstance]) -> Result<SnippetIndex, EmptyIndex> {
    build_index(
        train
            .iter()
            .map(|t| IndexEntry {
                tokens: snippet_token_set(&t.input_text),
                summary: t.target_text.clone(),
                comment_id: t.comment_id.clone(),
            })
            .collect(),
    )
}

pub fn retrieve_summary<'a>(query: &TokenSet, index: &'a SnippetIndex) -> (&'a str, f64) {
    let r = index.retrieve(query);
    (r.summary, r.score)
}
