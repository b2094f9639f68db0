//! Comment-to-code scope detectors.
//!
//! Three linkers map an inner comment to the set of statement lines it
//! documents: the blank-line heuristic, token-overlap similarity against a
//! threshold, and a random-forest statement classifier.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::extractor::{InnerComment, SourceMethod};

pub mod features;
pub mod forest;
mod heuristics;

pub use features::{extract_features, FeatureVector, FEATURE_NAMES, FEATURE_SCHEMA, N_FEATURES};
pub use forest::{link_forest, train_forest, training_instances, ForestConfig, ForestModel, ModelError};
pub use heuristics::{link_blank_line, link_token_similarity, term_similarity};

/// Method-local statement lines documented by a comment. Gaps are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinkSet(BTreeSet<usize>);

impl LinkSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, line: usize) -> bool {
        self.0.insert(line)
    }

    pub fn contains(&self, line: usize) -> bool {
        self.0.contains(&line)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &LinkSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection_len(&self, other: &LinkSet) -> usize {
        self.0.intersection(&other.0).count()
    }

    /// Maximal runs of consecutive line numbers, as inclusive ranges.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for l in self.iter() {
            match runs.last_mut() {
                Some((_, end)) if *end + 1 == l => *end = l,
                _ => runs.push((l, l)),
            }
        }
        runs
    }
}

impl FromIterator<usize> for LinkSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for LinkSet {
    fn from(lines: [usize; N]) -> Self {
        lines.into_iter().collect()
    }
}

impl fmt::Display for LinkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkerConfig {
    pub lambda: f64,
    pub forest: ForestConfig,
}

impl Default for LinkerConfig {
    fn default() -> Self {
        Self {
            lambda: 0.1,
            forest: ForestConfig::default(),
        }
    }
}

/// A ready-to-run linker.
#[derive(Debug, Clone)]
pub enum Linker {
    BlankLine,
    TokenSimilarity { lambda: f64 },
    Forest(Box<ForestModel>),
}

impl Linker {
    pub fn link(&self, method: &SourceMethod, comment: &InnerComment) -> LinkSet {
        match self {
            Linker::BlankLine => link_blank_line(method, comment),
            Linker::TokenSimilarity { lambda } => link_token_similarity(method, comment, *lambda),
            Linker::Forest(model) => link_forest(model, method, comment),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Linker::BlankLine => "blank-line".into(),
            Linker::TokenSimilarity { lambda } => format!("token-similarity({lambda})"),
            Linker::Forest(_) => "forest".into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_split_on_gaps() {
        assert_eq!(LinkSet::from([1, 2, 4]).runs(), [(1, 2), (4, 4)]);
        assert_eq!(LinkSet::from([2, 3]).runs(), [(2, 3)]);
        assert!(LinkSet::new().runs().is_empty());
    }

    #[test]
    fn displays_sorted() {
        assert_eq!(LinkSet::from([4, 1, 2]).to_string(), "{1,2,4}");
    }
}
