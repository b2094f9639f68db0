//! Paired and unpaired tests used to compare techniques.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF, Normal};

/// Largest sample solved by exact enumeration in the signed-rank test.
pub const WILCOXON_EXACT_MAX: usize = 25;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StatError {
    #[error("all differences are zero; the test is undefined")]
    AllZero,
    #[error("samples differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("empty sample")]
    Empty,
    #[error("chance agreement is 1; kappa is undefined")]
    KappaUndefined,
    #[error("p-value {0} outside [0, 1]")]
    BadP(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Magnitude {
    Negligible,
    Small,
    Medium,
    Large,
}

impl Magnitude {
    pub fn of(d: f64) -> Self {
        let d = d.abs();
        if d < 0.10 {
            Magnitude::Negligible
        } else if d < 0.33 {
            Magnitude::Small
        } else if d < 0.474 {
            Magnitude::Medium
        } else {
            Magnitude::Large
        }
    }

    pub fn letter(self) -> char {
        match self {
            Magnitude::Negligible => 'N',
            Magnitude::Small => 'S',
            Magnitude::Medium => 'M',
            Magnitude::Large => 'L',
        }
    }
}

/// Average ranks of `|d|`, 1-based, with ties sharing their mean rank.
fn midranks(abs: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..abs.len()).collect();
    idx.sort_by(|&a, &b| abs[a].total_cmp(&abs[b]));
    let mut ranks = vec![0.0; abs.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && abs[idx[j + 1]] == abs[idx[i]] {
            j += 1;
        }
        let r = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = r;
        }
        i = j + 1;
    }
    ranks
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Wilcoxon {
    /// Sum of ranks of positive differences.
    pub w_plus: f64,
    pub n: usize,
    pub p_value: f64,
    pub exact: bool,
}

/// Two-sided Wilcoxon signed-rank test. Zero differences are dropped; up to
/// 25 remaining pairs use the exact null distribution over sign
/// assignments, larger samples a tie- and continuity-corrected normal.
pub fn wilcoxon_signed_rank(diffs: &[f64]) -> Result<Wilcoxon, StatError> {
    let nz: Vec<f64> = diffs.iter().copied().filter(|d| *d != 0.0).collect();
    if nz.is_empty() {
        return Err(StatError::AllZero);
    }
    let n = nz.len();
    let abs: Vec<f64> = nz.iter().map(|d| d.abs()).collect();
    let ranks = midranks(&abs);
    let w_plus: f64 = nz.iter().zip(&ranks).filter(|(d, _)| **d > 0.0).map(|(_, r)| r).sum();

    let (p, exact) = if n <= WILCOXON_EXACT_MAX {
        (exact_signed_rank_p(&ranks, w_plus), true)
    } else {
        let nf = n as f64;
        let mean = nf * (nf + 1.0) / 4.0;
        let mut var = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0;
        let mut counts: BTreeMap<u64, f64> = BTreeMap::new();
        for r in &ranks {
            *counts.entry((r * 2.0) as u64).or_default() += 1.0;
        }
        var -= counts.values().map(|t| t * t * t - t).sum::<f64>() / 48.0;
        let z = ((w_plus - mean).abs() - 0.5).max(0.0) / var.sqrt();
        let normal = Normal::new(0.0, 1.0).expect("standard normal");
        (2.0 * normal.sf(z), false)
    };
    Ok(Wilcoxon {
        w_plus,
        n,
        p_value: p.clamp(0.0, 1.0),
        exact,
    })
}

/// Two-sided p from the distribution of W+ over all 2^n sign patterns.
/// Ranks are doubled so midranks become integers.
fn exact_signed_rank_p(ranks: &[f64], w_plus: f64) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|r| (r * 2.0).round() as usize).collect();
    let total: usize = doubled.iter().sum();
    let mut dist = vec![0f64; total + 1];
    dist[0] = 1.0;
    for &r in &doubled {
        for s in (r..=total).rev() {
            dist[s] += dist[s - r];
        }
    }
    let all = 2f64.powi(ranks.len() as i32);
    let w = (w_plus * 2.0).round() as usize;
    let lower: f64 = dist[..=w].iter().sum();
    let upper: f64 = dist[w..].iter().sum();
    (2.0 * lower.min(upper) / all).min(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McNemar {
    pub statistic: f64,
    pub p_value: f64,
    /// First technique right, second wrong.
    pub b: usize,
    /// First technique wrong, second right.
    pub c: usize,
}

/// Continuity-corrected McNemar test on paired outcomes.
pub fn mcnemar(a: &[bool], b: &[bool]) -> Result<McNemar, StatError> {
    if a.len() != b.len() {
        return Err(StatError::LengthMismatch(a.len(), b.len()));
    }
    let nb = a.iter().zip(b).filter(|(x, y)| **x && !**y).count();
    let nc = a.iter().zip(b).filter(|(x, y)| !**x && **y).count();
    Ok(mcnemar_counts(nb, nc))
}

pub fn mcnemar_counts(b: usize, c: usize) -> McNemar {
    if b + c == 0 {
        return McNemar {
            statistic: 0.0,
            p_value: 1.0,
            b,
            c,
        };
    }
    let diff = (b as f64 - c as f64).abs();
    let corrected = (diff - 1.0).max(0.0);
    let statistic = corrected * corrected / (b + c) as f64;
    let chi = ChiSquared::new(1.0).expect("one degree of freedom");
    McNemar {
        statistic,
        p_value: chi.sf(statistic).clamp(0.0, 1.0),
        b,
        c,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OddsRatio {
    /// b / c; infinite when only b is non-zero, 1 when both are zero.
    pub ratio: f64,
    /// (b + 0.5) / (c + 0.5).
    pub haldane: f64,
}

pub fn odds_ratio_paired(b: usize, c: usize) -> OddsRatio {
    let ratio = match (b, c) {
        (0, 0) => 1.0,
        (_, 0) => f64::INFINITY,
        _ => b as f64 / c as f64,
    };
    OddsRatio {
        ratio,
        haldane: (b as f64 + 0.5) / (c as f64 + 0.5),
    }
}

/// Holm step-down adjustment, returned in input order.
pub fn holm(p_values: &[f64]) -> Result<Vec<f64>, StatError> {
    if let Some(&p) = p_values.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(StatError::BadP(p));
    }
    let m = p_values.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| p_values[a].total_cmp(&p_values[b]).then(a.cmp(&b)));
    let mut out = vec![0.0; m];
    let mut running: f64 = 0.0;
    for (i, &k) in order.iter().enumerate() {
        let adj = (p_values[k] * (m - i) as f64).min(1.0);
        running = running.max(adj);
        out[k] = running;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CliffsDelta {
    pub d: f64,
    pub magnitude: Magnitude,
}

pub fn cliffs_delta(a: &[f64], b: &[f64]) -> Result<CliffsDelta, StatError> {
    if a.is_empty() || b.is_empty() {
        return Err(StatError::Empty);
    }
    let mut sum: i64 = 0;
    for x in a {
        for y in b {
            sum += match x.partial_cmp(y) {
                Some(std::cmp::Ordering::Greater) => 1,
                Some(std::cmp::Ordering::Less) => -1,
                _ => 0,
            };
        }
    }
    let d = sum as f64 / (a.len() * b.len()) as f64;
    Ok(CliffsDelta {
        d,
        magnitude: Magnitude::of(d),
    })
}

/// Cohen's kappa for two raters over the same items.
pub fn cohens_kappa<T: Ord>(a: &[T], b: &[T]) -> Result<f64, StatError> {
    if a.len() != b.len() {
        return Err(StatError::LengthMismatch(a.len(), b.len()));
    }
    if a.is_empty() {
        return Err(StatError::Empty);
    }
    let n = a.len() as f64;
    let po = a.iter().zip(b).filter(|(x, y)| x == y).count() as f64 / n;
    if po == 1.0 {
        return Ok(1.0);
    }
    let labels: BTreeSet<&T> = a.iter().chain(b).collect();
    let pe: f64 = labels
        .iter()
        .map(|l| {
            let ca = a.iter().filter(|x| x == l).count() as f64;
            let cb = b.iter().filter(|x| x == l).count() as f64;
            (ca / n) * (cb / n)
        })
        .sum();
    if pe >= 1.0 {
        return Err(StatError::KappaUndefined);
    }
    Ok((po - pe) / (1.0 - pe))
}
