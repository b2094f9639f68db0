//! Link-level and summary-level scoring.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::encoder::stem;
use crate::linkers::LinkSet;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkScore {
    pub correct: bool,
    pub tp: usize,
    pub fp: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
    pub precision: f64,
    pub recall: f64,
}

/// Exact-match flag and statement-level counts. An empty prediction for an
/// empty gold set is correct and scores P = R = 1.
pub fn link_scores(pred: &LinkSet, gold: &LinkSet) -> LinkScore {
    let tp = pred.intersection_len(gold);
    let fp = pred.len() - tp;
    let fn_ = gold.len() - tp;
    let (precision, recall) = counts_to_pr(tp, fp, fn_, gold.is_empty() && pred.is_empty());
    LinkScore {
        correct: pred == gold,
        tp,
        fp,
        fn_,
        precision,
        recall,
    }
}

fn counts_to_pr(tp: usize, fp: usize, fn_: usize, both_empty: bool) -> (f64, f64) {
    let precision = if tp + fp > 0 {
        tp as f64 / (tp + fp) as f64
    } else if both_empty {
        1.0
    } else {
        0.0
    };
    let recall = if tp + fn_ > 0 {
        tp as f64 / (tp + fn_) as f64
    } else {
        1.0
    };
    (precision, recall)
}

/// Aggregate over instances: share of correct predictions, pooled
/// statement-level P/R, and the mean of per-instance P/R.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct LinkAggregate {
    pub n: usize,
    pub correct: f64,
    pub precision: f64,
    pub recall: f64,
    pub mean_precision: f64,
    pub mean_recall: f64,
}

pub fn aggregate_links(scores: &[LinkScore]) -> LinkAggregate {
    let n = scores.len();
    if n == 0 {
        return LinkAggregate::default();
    }
    let tp: usize = scores.iter().map(|s| s.tp).sum();
    let fp: usize = scores.iter().map(|s| s.fp).sum();
    let fn_: usize = scores.iter().map(|s| s.fn_).sum();
    let (precision, recall) = counts_to_pr(tp, fp, fn_, tp + fp + fn_ == 0);
    LinkAggregate {
        n,
        correct: scores.iter().filter(|s| s.correct).count() as f64 / n as f64,
        precision,
        recall,
        mean_precision: mean(scores.iter().map(|s| s.precision)),
        mean_recall: mean(scores.iter().map(|s| s.recall)),
    }
}

fn mean(xs: impl ExactSizeIterator<Item = f64>) -> f64 {
    let n = xs.len();
    if n == 0 {
        0.0
    } else {
        xs.sum::<f64>() / n as f64
    }
}

/// Numerator substituted for a zero higher-order n-gram match count.
pub const BLEU_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BleuConfig {
    pub max_n: usize,
    pub smoothing: bool,
}

impl Default for BleuConfig {
    fn default() -> Self {
        Self {
            max_n: 4,
            smoothing: true,
        }
    }
}

/// Clipped n-gram matches and candidate n-gram totals for n = 1..=max_n,
/// plus the two lengths.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BleuStats {
    pub matches: Vec<usize>,
    pub totals: Vec<usize>,
    pub cand_len: usize,
    pub ref_len: usize,
}

impl BleuStats {
    fn add(&mut self, other: &BleuStats) {
        if self.matches.is_empty() {
            self.matches = vec![0; other.matches.len()];
            self.totals = vec![0; other.totals.len()];
        }
        for i in 0..other.matches.len() {
            self.matches[i] += other.matches[i];
            self.totals[i] += other.totals[i];
        }
        self.cand_len += other.cand_len;
        self.ref_len += other.ref_len;
    }

    pub fn score(&self, smoothing: bool) -> f64 {
        if self.cand_len == 0 || self.matches.is_empty() {
            return 0.0;
        }
        let max_n = self.matches.len();
        let mut log_sum = 0.0;
        for n in 0..max_n {
            let (m, t) = (self.matches[n], self.totals[n]);
            let p = if m > 0 {
                m as f64 / t as f64
            } else if smoothing && n > 0 {
                BLEU_EPSILON / t.max(1) as f64
            } else {
                return 0.0;
            };
            log_sum += p.ln();
        }
        brevity_penalty(self.cand_len, self.ref_len) * (log_sum / max_n as f64).exp()
    }
}

pub fn brevity_penalty(cand_len: usize, ref_len: usize) -> f64 {
    if cand_len == 0 {
        0.0
    } else if cand_len > ref_len {
        1.0
    } else {
        (1.0 - ref_len as f64 / cand_len as f64).exp()
    }
}

fn ngram_counts<S: AsRef<str>>(tokens: &[S], n: usize) -> HashMap<Vec<&str>, usize> {
    let mut out = HashMap::new();
    if tokens.len() >= n {
        for w in tokens.windows(n) {
            *out.entry(w.iter().map(AsRef::as_ref).collect()).or_insert(0) += 1;
        }
    }
    out
}

pub fn bleu_stats<S: AsRef<str>, T: AsRef<str>>(candidate: &[S], reference: &[T], max_n: usize) -> BleuStats {
    let mut stats = BleuStats {
        cand_len: candidate.len(),
        ref_len: reference.len(),
        ..BleuStats::default()
    };
    for n in 1..=max_n {
        let cand = ngram_counts(candidate, n);
        let refs = ngram_counts(reference, n);
        let matched = cand
            .iter()
            .map(|(g, c)| (*c).min(refs.get(g).copied().unwrap_or(0)))
            .sum();
        stats.matches.push(matched);
        stats.totals.push(candidate.len().saturating_sub(n - 1));
    }
    stats
}

/// Sentence-level BLEU: geometric mean of clipped n-gram precisions times
/// the brevity penalty.
pub fn bleu<S: AsRef<str>, T: AsRef<str>>(candidate: &[S], reference: &[T], config: BleuConfig) -> f64 {
    assert!(config.max_n >= 1, "BLEU needs max_n >= 1");
    bleu_stats(candidate, reference, config.max_n).score(config.smoothing)
}

/// Corpus-level BLEU: counts and lengths pooled before taking the mean.
pub fn corpus_bleu<S: AsRef<str>, T: AsRef<str>>(pairs: &[(Vec<S>, Vec<T>)], config: BleuConfig) -> f64 {
    let mut total = BleuStats::default();
    for (c, r) in pairs {
        total.add(&bleu_stats(c, r, config.max_n));
    }
    total.score(config.smoothing)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rouge {
    pub precision: f64,
    pub recall: f64,
    pub fmeasure: f64,
}

pub fn lcs_len<S: AsRef<str>, T: AsRef<str>>(a: &[S], b: &[T]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x.as_ref() == y.as_ref() {
                prev[j] + 1
            } else {
                cur[j].max(prev[j + 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// ROUGE-L: recall over the reference, precision over the candidate.
pub fn rouge_lcs<S: AsRef<str>, T: AsRef<str>>(candidate: &[S], reference: &[T]) -> Rouge {
    if candidate.is_empty() && reference.is_empty() {
        return Rouge {
            precision: 1.0,
            recall: 1.0,
            fmeasure: 1.0,
        };
    }
    let lcs = lcs_len(candidate, reference) as f64;
    let ratio = |len: usize| if len == 0 { 0.0 } else { lcs / len as f64 };
    let precision = ratio(candidate.len());
    let recall = ratio(reference.len());
    let fmeasure = if precision + recall > 0.0 {
        2.0 * precision * recall / (precision + recall)
    } else {
        0.0
    };
    Rouge {
        precision,
        recall,
        fmeasure,
    }
}

/// Unigram alignment as (candidate index, reference index), sorted by
/// candidate index. Exact matches first, then stem matches among the rest.
/// Each candidate word prefers the reference position right after its
/// predecessor's match, else the earliest free one.
pub fn meteor_alignment<S: AsRef<str>, T: AsRef<str>>(candidate: &[S], reference: &[T]) -> Vec<(usize, usize)> {
    let mut ref_used = vec![false; reference.len()];
    let mut cand_match: Vec<Option<usize>> = vec![None; candidate.len()];
    let cand_stems: Vec<String> = candidate.iter().map(|w| stem(&w.as_ref().to_lowercase())).collect();
    let ref_stems: Vec<String> = reference.iter().map(|w| stem(&w.as_ref().to_lowercase())).collect();

    for stage in 0..2 {
        for i in 0..candidate.len() {
            if cand_match[i].is_some() {
                continue;
            }
            let eq = |j: usize| {
                !ref_used[j]
                    && if stage == 0 {
                        candidate[i].as_ref() == reference[j].as_ref()
                    } else {
                        cand_stems[i] == ref_stems[j]
                    }
            };
            let follow = i
                .checked_sub(1)
                .and_then(|p| cand_match[p])
                .map(|j| j + 1)
                .filter(|&j| j < reference.len() && eq(j));
            if let Some(j) = follow.or_else(|| (0..reference.len()).find(|&j| eq(j))) {
                ref_used[j] = true;
                cand_match[i] = Some(j);
            }
        }
    }
    cand_match
        .into_iter()
        .enumerate()
        .filter_map(|(i, j)| j.map(|j| (i, j)))
        .collect()
}

/// Number of chunks: maximal runs adjacent in both candidate and reference.
pub fn chunk_count(alignment: &[(usize, usize)]) -> usize {
    let mut chunks = 0;
    let mut prev: Option<(usize, usize)> = None;
    for &(i, j) in alignment {
        match prev {
            Some((pi, pj)) if pi + 1 == i && pj + 1 == j => {}
            _ => chunks += 1,
        }
        prev = Some((i, j));
    }
    chunks
}

/// METEOR with exact and stem stages (no synonym stage).
pub fn meteor<S: AsRef<str>, T: AsRef<str>>(candidate: &[S], reference: &[T]) -> f64 {
    let alignment = meteor_alignment(candidate, reference);
    let m = alignment.len();
    if m == 0 {
        return 0.0;
    }
    let p = m as f64 / candidate.len() as f64;
    let r = m as f64 / reference.len() as f64;
    let fmean = 10.0 * p * r / (r + 9.0 * p);
    let penalty = 0.5 * (chunk_count(&alignment) as f64 / m as f64).powi(3);
    fmean * (1.0 - penalty)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryScore {
    /// Cumulative BLEU-n for n = 1..=4, smoothed.
    pub bleu: BTreeMap<usize, f64>,
    pub meteor: f64,
    pub rouge_lcs: Rouge,
}

pub fn summary_tokens(text: &str) -> Vec<&str> {
    text.split_whitespace().collect()
}

pub fn score_summary(candidate: &str, reference: &str) -> SummaryScore {
    let c = summary_tokens(candidate);
    let r = summary_tokens(reference);
    let bleu = (1..=4)
        .map(|n| {
            (
                n,
                bleu(
                    &c,
                    &r,
                    BleuConfig {
                        max_n: n,
                        smoothing: true,
                    },
                ),
            )
        })
        .collect();
    SummaryScore {
        bleu,
        meteor: meteor(&c, &r),
        rouge_lcs: rouge_lcs(&c, &r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<&str> {
        s.split_whitespace().collect()
    }

    #[test]
    fn link_score_examples() {
        let s = link_scores(&LinkSet::from([1, 2]), &LinkSet::from([1, 3]));
        assert_eq!((s.tp, s.fp, s.fn_, s.correct), (1, 1, 1, false));
        assert_eq!((s.precision, s.recall), (0.5, 0.5));

        let s = link_scores(&LinkSet::from([1, 2, 4]), &LinkSet::from([1, 2, 4]));
        assert!(s.correct && s.precision == 1.0 && s.recall == 1.0);

        // Two of three documented statements found: still wrong.
        let s = link_scores(&LinkSet::from([1, 2]), &LinkSet::from([1, 2, 3]));
        assert!(!s.correct);

        let s = link_scores(&LinkSet::new(), &LinkSet::new());
        assert!(s.correct && s.precision == 1.0 && s.recall == 1.0);
        let s = link_scores(&LinkSet::new(), &LinkSet::from([1]));
        assert_eq!((s.precision, s.recall), (0.0, 0.0));
        let s = link_scores(&LinkSet::from([1]), &LinkSet::new());
        assert_eq!((s.precision, s.recall), (0.0, 1.0));
    }

    #[test]
    fn aggregate_pools_counts() {
        let a = link_scores(&LinkSet::from([1, 2]), &LinkSet::from([1, 2]));
        let b = link_scores(&LinkSet::from([1, 2, 3, 4]), &LinkSet::from([1]));
        let agg = aggregate_links(&[a, b]);
        assert_eq!(agg.correct, 0.5);
        assert_eq!(agg.precision, 3.0 / 6.0);
        assert_eq!(agg.recall, 1.0);
        assert_eq!(agg.mean_precision, (1.0 + 0.25) / 2.0);
    }

    #[test]
    fn bleu_hand_case() {
        let c = toks("the cat sat on the mat");
        let r = toks("the cat sat on a mat");
        let st = bleu_stats(&c, &r, 4);
        assert_eq!(st.matches, [5, 3, 2, 1]);
        assert_eq!(st.totals, [6, 5, 4, 3]);
        let expected = (5.0 / 6.0 * 3.0 / 5.0 * 0.5 / 3.0f64).powf(0.25);
        assert!((bleu(&c, &r, BleuConfig::default()) - expected).abs() < 1e-12);
    }

    #[test]
    fn bleu_edges() {
        let s = toks("a b c d e f g h");
        assert!((bleu(&s, &s, BleuConfig::default()) - 1.0).abs() < 1e-15);
        let short = toks("a b c");
        let off = BleuConfig {
            max_n: 4,
            smoothing: false,
        };
        assert_eq!(bleu(&short, &short, off), 0.0);
        assert!(bleu(&short, &short, BleuConfig::default()) > 0.0);
        assert_eq!(bleu(&Vec::<&str>::new(), &s, BleuConfig::default()), 0.0);
    }

    #[test]
    fn clipping_caps_unigram_precision() {
        let st = bleu_stats(&toks("the the the the"), &toks("the cat"), 1);
        assert_eq!(st.matches, [1]);
    }

    #[test]
    fn corpus_bleu_pools() {
        let pairs = vec![(toks("a b c d"), toks("a b c d")), (toks("a b c d"), toks("a b c d"))];
        assert!((corpus_bleu(&pairs, BleuConfig::default()) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rouge_examples() {
        let r = rouge_lcs(&toks("a b c d"), &toks("a c d e"));
        assert_eq!((r.precision, r.recall, r.fmeasure), (0.75, 0.75, 0.75));
        let r = rouge_lcs(&toks("a b"), &toks("c d"));
        assert_eq!((r.precision, r.recall, r.fmeasure), (0.0, 0.0, 0.0));
        let r = rouge_lcs(&toks("a b c"), &toks("a c"));
        let s = rouge_lcs(&toks("a c"), &toks("a b c"));
        assert_eq!((r.precision, r.recall), (s.recall, s.precision));
        assert_eq!(rouge_lcs(&Vec::<&str>::new(), &Vec::<&str>::new()).fmeasure, 1.0);
    }

    #[test]
    fn meteor_identity() {
        let s = toks("a b c d");
        assert_eq!(meteor(&s, &s), 0.9921875);
        assert_eq!(meteor(&toks("x y"), &toks("a b")), 0.0);
    }

    #[test]
    fn meteor_stem_stage() {
        let c = toks("loads cache");
        let r = toks("loading the cache");
        let al = meteor_alignment(&c, &r);
        assert_eq!(al, [(0, 0), (1, 2)]);
        let (p, rc): (f64, f64) = (1.0, 2.0 / 3.0);
        let fmean = 10.0 * p * rc / (rc + 9.0 * p);
        assert!((fmean - 0.6897).abs() < 1e-4);
        let expected = fmean * (1.0 - 0.5 * 1.0f64.powi(3));
        assert_eq!(meteor(&c, &r), expected);
    }

    #[test]
    fn summary_score_of_identity() {
        let s = score_summary("load the cach valu", "load the cach valu");
        assert!((s.bleu[&4] - 1.0).abs() < 1e-15);
        assert_eq!(s.rouge_lcs.fmeasure, 1.0);
    }
}
