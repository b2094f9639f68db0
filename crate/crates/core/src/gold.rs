//! Manually labeled comments: categories plus documented lines.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::linkers::LinkSet;
use crate::schema::{self, DataError, Header};

pub const SUMMARY: &str = "summary";

/// Built-in comment categories. Annotators may add more under the `ext:`
/// prefix.
pub const TAXONOMY: [&str; 12] = [
    "summary",
    "rationale",
    "deprecation",
    "usage",
    "exception",
    "todo",
    "incomplete",
    "commented_code",
    "formatter",
    "pointer",
    "orphan",
    "code_example",
];

pub const EXTENSION_PREFIX: &str = "ext:";

pub fn is_valid_category(name: &str) -> bool {
    TAXONOMY.contains(&name)
        || name.strip_prefix(EXTENSION_PREFIX).is_some_and(|rest| {
            !rest.is_empty() && rest.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
        })
}

/// One gold triplet: comment, its categories and the documented lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldRecord {
    pub task_id: String,
    pub method_id: String,
    pub comment_id: String,
    pub path: String,
    pub categories: BTreeSet<String>,
    pub links: LinkSet,
}

impl GoldRecord {
    pub fn is_summary(&self) -> bool {
        self.categories.contains(SUMMARY)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoryStats {
    pub category: String,
    pub count: usize,
    /// Documented statements per comment.
    pub mean: f64,
    pub median: f64,
    pub sd: f64,
}

/// Per-category instance counts and documented-statement statistics. A
/// comment with several categories counts toward each of them. The sd is
/// the sample standard deviation (0 for a single instance).
pub fn taxonomy_stats(records: &[GoldRecord]) -> Vec<CategoryStats> {
    let mut sizes: BTreeMap<&str, Vec<f64>> = BTreeMap::new();
    for r in records {
        for c in &r.categories {
            sizes.entry(c).or_default().push(r.links.len() as f64);
        }
    }
    let mut out: Vec<CategoryStats> = sizes
        .into_iter()
        .map(|(category, mut xs)| {
            xs.sort_by(f64::total_cmp);
            let n = xs.len();
            let mean = xs.iter().sum::<f64>() / n as f64;
            let median = if n % 2 == 1 {
                xs[n / 2]
            } else {
                (xs[n / 2 - 1] + xs[n / 2]) / 2.0
            };
            let sd = if n > 1 {
                (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
            } else {
                0.0
            };
            CategoryStats {
                category: category.to_string(),
                count: n,
                mean,
                median,
                sd,
            }
        })
        .collect();
    out.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.category.cmp(&b.category)));
    out
}

pub fn write_gold(path: &Path, records: &[GoldRecord]) -> Result<(), DataError> {
    let header = Header::new(schema::GOLD).with("taxonomy", taxonomy_stats(records));
    schema::write_jsonl(path, &header, records)
}

pub fn read_gold(path: &Path) -> Result<Vec<GoldRecord>, DataError> {
    schema::read_jsonl(path, schema::GOLD).map(|(_, r)| r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(cats: &[&str], links: &[usize]) -> GoldRecord {
        GoldRecord {
            task_id: "t".into(),
            method_id: "m".into(),
            comment_id: "c".into(),
            path: "p".into(),
            categories: cats.iter().map(|s| s.to_string()).collect(),
            links: links.iter().copied().collect(),
        }
    }

    #[test]
    fn categories() {
        assert!(is_valid_category("summary"));
        assert!(is_valid_category("ext:license"));
        assert!(!is_valid_category("ext:"));
        assert!(!is_valid_category("License"));
    }

    #[test]
    fn stats_shape() {
        let rs = vec![
            rec(&["summary"], &[1, 2]),
            rec(&["summary"], &[1, 2, 3, 4]),
            rec(&["summary", "rationale"], &[3]),
            rec(&["commented_code"], &[]),
        ];
        let st = taxonomy_stats(&rs);
        assert_eq!(st[0].category, "summary");
        assert_eq!(st[0].count, 3);
        assert!((st[0].mean - 7.0 / 3.0).abs() < 1e-12);
        assert_eq!(st[0].median, 2.0);
        // deviations -1/3, 5/3, -4/3 → squares sum to 42/9, over n-1 = 2.
        assert!((st[0].sd - (21.0f64 / 9.0).sqrt()).abs() < 1e-12);
        let cc = st.iter().find(|s| s.category == "commented_code").unwrap();
        assert_eq!((cc.mean, cc.sd), (0.0, 0.0));
    }
}
