//! Random-forest statement classifier.
//!
//! Each tree is a CART classifier grown on a bootstrap sample. At every node
//! `ceil(sqrt(16)) = 4` candidate features are drawn without replacement and
//! the split with the largest Gini-impurity reduction wins. Tree `i` draws
//! from its own generator seeded by `(seed, i)`, so parallel and serial
//! training produce the same forest.

use std::io::Write;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::features::{extract_features, FeatureVector, FEATURE_SCHEMA, N_FEATURES};
use super::LinkSet;
use crate::extractor::{InnerComment, SourceMethod};
use crate::schema::{self, DataError, Header};
use crate::seed::indexed_seed;

const FEATURES_PER_SPLIT: usize = 4;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForestConfig {
    pub n_trees: usize,
    pub max_depth: usize,
    pub min_split: usize,
    pub seed: u64,
}

impl Default for ForestConfig {
    fn default() -> Self {
        Self {
            n_trees: 100,
            max_depth: 12,
            min_split: 2,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "t", rename_all = "snake_case")]
pub enum Node {
    Leaf {
        positive: u32,
        total: u32,
    },
    Split {
        feature: usize,
        threshold: f64,
        left: usize,
        right: usize,
    },
}

/// Nodes in an arena; index 0 is the root.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tree {
    pub nodes: Vec<Node>,
}

impl Tree {
    pub fn predict(&self, x: &FeatureVector) -> bool {
        let mut i = 0;
        loop {
            match &self.nodes[i] {
                Node::Leaf { positive, total } => return 2 * positive > *total,
                Node::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } => i = if x[*feature] <= *threshold { *left } else { *right },
            }
        }
    }

    pub fn depth(&self) -> usize {
        fn go(nodes: &[Node], i: usize) -> usize {
            match &nodes[i] {
                Node::Leaf { .. } => 0,
                Node::Split { left, right, .. } => 1 + go(nodes, *left).max(go(nodes, *right)),
            }
        }
        go(&self.nodes, 0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForestModel {
    pub config: ForestConfig,
    /// Set when training data held a single class.
    pub degenerate: bool,
    pub trees: Vec<Tree>,
}

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("need at least 2 training instances, got {0}")]
    TooFewInstances(usize),
    #[error("n_trees must be at least 1")]
    NoTrees,
    #[error("model uses feature schema {found}, expected {expected}")]
    FeatureSchema { expected: String, found: String },
    #[error("malformed model: {0}")]
    Malformed(String),
    #[error(transparent)]
    Data(#[from] DataError),
}

impl ForestModel {
    /// Majority vote; ties are not linked.
    pub fn predict(&self, x: &FeatureVector) -> bool {
        let votes = self.trees.iter().filter(|t| t.predict(x)).count();
        2 * votes > self.trees.len()
    }

    pub fn votes(&self, x: &FeatureVector) -> usize {
        self.trees.iter().filter(|t| t.predict(x)).count()
    }

    pub fn save(&self, path: &Path) -> Result<(), DataError> {
        schema::write_jsonl(path, &self.header(), &self.trees)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        schema::write_to(&mut buf, &self.header(), &self.trees).expect("in-memory write");
        buf.flush().expect("in-memory flush");
        buf
    }

    fn header(&self) -> Header {
        Header::new(schema::FOREST_MODEL)
            .with("feature_schema", FEATURE_SCHEMA)
            .with("n_features", N_FEATURES)
            .with("config", &self.config)
            .with("degenerate", self.degenerate)
    }

    pub fn load(path: &Path) -> Result<Self, ModelError> {
        let (header, trees): (Header, Vec<Tree>) =
            schema::read_jsonl(path, schema::FOREST_MODEL)?;
        Self::from_parts(header, trees)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, ModelError> {
        let (header, trees): (Header, Vec<Tree>) =
            schema::read_from(bytes, schema::FOREST_MODEL, "<memory>")?;
        Self::from_parts(header, trees)
    }

    fn from_parts(header: Header, trees: Vec<Tree>) -> Result<Self, ModelError> {
        let found: String = header.get("feature_schema").unwrap_or_default();
        if found != FEATURE_SCHEMA {
            return Err(ModelError::FeatureSchema {
                expected: FEATURE_SCHEMA.into(),
                found,
            });
        }
        let config: ForestConfig = header
            .get("config")
            .ok_or_else(|| ModelError::Malformed("missing config".into()))?;
        if trees.len() != config.n_trees {
            return Err(ModelError::Malformed(format!(
                "{} trees stored, config says {}",
                trees.len(),
                config.n_trees
            )));
        }
        for t in &trees {
            for n in &t.nodes {
                if let Node::Split {
                    feature,
                    left,
                    right,
                    ..
                } = n
                {
                    if *feature >= N_FEATURES || *left >= t.nodes.len() || *right >= t.nodes.len()
                    {
                        return Err(ModelError::Malformed("node index out of range".into()));
                    }
                }
            }
        }
        Ok(Self {
            config,
            degenerate: header.get("degenerate").unwrap_or(false),
            trees,
        })
    }
}

/// Trains a forest on labelled feature vectors.
pub fn train_forest(
    instances: &[(FeatureVector, bool)],
    config: &ForestConfig,
) -> Result<ForestModel, ModelError> {
    if instances.len() < 2 {
        return Err(ModelError::TooFewInstances(instances.len()));
    }
    if config.n_trees == 0 {
        return Err(ModelError::NoTrees);
    }
    let positives = instances.iter().filter(|(_, y)| *y).count();
    if positives == 0 || positives == instances.len() {
        let leaf = Tree {
            nodes: vec![Node::Leaf {
                positive: positives as u32,
                total: instances.len() as u32,
            }],
        };
        return Ok(ForestModel {
            config: config.clone(),
            degenerate: true,
            trees: vec![leaf; config.n_trees],
        });
    }
    let trees = (0..config.n_trees)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(indexed_seed(config.seed, i as u64));
            let sample: Vec<usize> = (0..instances.len())
                .map(|_| rng.gen_range(0..instances.len()))
                .collect();
            let mut builder = TreeBuilder {
                data: instances,
                config,
                rng,
                nodes: Vec::new(),
            };
            builder.grow(sample, 0);
            Tree {
                nodes: builder.nodes,
            }
        })
        .collect();
    Ok(ForestModel {
        config: config.clone(),
        degenerate: false,
        trees,
    })
}

struct TreeBuilder<'a> {
    data: &'a [(FeatureVector, bool)],
    config: &'a ForestConfig,
    rng: ChaCha8Rng,
    nodes: Vec<Node>,
}

fn gini(pos: usize, total: usize) -> f64 {
    if total == 0 {
        return 0.0;
    }
    let p = pos as f64 / total as f64;
    2.0 * p * (1.0 - p)
}

impl TreeBuilder<'_> {
    fn grow(&mut self, idx: Vec<usize>, depth: usize) -> usize {
        let total = idx.len();
        let positive = idx.iter().filter(|&&i| self.data[i].1).count();
        let id = self.nodes.len();
        self.nodes.push(Node::Leaf {
            positive: positive as u32,
            total: total as u32,
        });
        if depth >= self.config.max_depth
            || total < self.config.min_split.max(2)
            || positive == 0
            || positive == total
        {
            return id;
        }
        let Some((feature, threshold)) = self.best_split(&idx, positive) else {
            return id;
        };
        let (l, r): (Vec<usize>, Vec<usize>) = idx
            .into_iter()
            .partition(|&i| self.data[i].0[feature] <= threshold);
        let left = self.grow(l, depth + 1);
        let right = self.grow(r, depth + 1);
        self.nodes[id] = Node::Split {
            feature,
            threshold,
            left,
            right,
        };
        id
    }

    fn candidate_features(&mut self) -> [usize; FEATURES_PER_SPLIT] {
        let mut all: [usize; N_FEATURES] = std::array::from_fn(|i| i);
        for k in 0..FEATURES_PER_SPLIT {
            let j = self.rng.gen_range(k..N_FEATURES);
            all.swap(k, j);
        }
        std::array::from_fn(|k| all[k])
    }

    fn best_split(&mut self, idx: &[usize], positive: usize) -> Option<(usize, f64)> {
        let total = idx.len();
        let parent = gini(positive, total);
        let mut best: Option<(f64, usize, f64)> = None;
        for feature in self.candidate_features() {
            let mut vals: Vec<(f64, bool)> = idx
                .iter()
                .map(|&i| (self.data[i].0[feature], self.data[i].1))
                .collect();
            vals.sort_by(|a, b| a.0.total_cmp(&b.0));
            let mut left_pos = 0;
            for k in 0..total - 1 {
                left_pos += vals[k].1 as usize;
                if vals[k].0 == vals[k + 1].0 {
                    continue;
                }
                let nl = k + 1;
                let nr = total - nl;
                let weighted = (nl as f64 * gini(left_pos, nl)
                    + nr as f64 * gini(positive - left_pos, nr))
                    / total as f64;
                let gain = parent - weighted;
                if gain > 1e-12 && best.is_none_or(|(g, _, _)| gain > g) {
                    let threshold = vals[k].0 + (vals[k + 1].0 - vals[k].0) / 2.0;
                    best = Some((gain, feature, threshold));
                }
            }
        }
        best.map(|(_, f, t)| (f, t))
    }
}

/// Labelled feature vectors for every linkable statement of a method.
pub fn training_instances(
    method: &SourceMethod,
    comment: &InnerComment,
    gold: &LinkSet,
) -> Vec<(FeatureVector, bool)> {
    method
        .linkable_lines()
        .map(|s| (extract_features(method, comment, s), gold.contains(s.line_no)))
        .collect()
}

pub fn link_forest(model: &ForestModel, method: &SourceMethod, comment: &InnerComment) -> LinkSet {
    method
        .linkable_lines()
        .filter(|s| model.predict(&extract_features(method, comment, s)))
        .map(|s| s.line_no)
        .collect()
}
