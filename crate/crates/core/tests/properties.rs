use std::collections::HashSet;

use codescope_core::encoder::{
    decode_link_target, encode_classification, encode_link_target, encode_linking,
    encode_summarization, is_summary_candidate, split_dataset, validate_input, GroupKey,
    SplitSpec, Task, TaskInstance, COMMENT_OPEN,
};
use codescope_core::extractor::{extract_inner_comments, SourceMethod};
use codescope_core::linkers::{link_blank_line, LinkSet};
use codescope_core::stats::{holm, wilcoxon_signed_rank};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Two-sided signed-rank p by brute force over all 2^n sign patterns.
fn enumerate_p(diffs: &[f64]) -> f64 {
    let nz: Vec<f64> = diffs.iter().copied().filter(|d| *d != 0.0).collect();
    let n = nz.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| nz[a].abs().total_cmp(&nz[b].abs()));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && nz[order[j + 1]].abs() == nz[order[i]].abs() {
            j += 1;
        }
        for k in i..=j {
            ranks[order[k]] = (i + j + 2) as f64 / 2.0;
        }
        i = j + 1;
    }
    let observed: f64 = (0..n).filter(|&k| nz[k] > 0.0).map(|k| ranks[k]).sum();
    let (mut le, mut ge) = (0u64, 0u64);
    for mask in 0u64..(1 << n) {
        let w: f64 = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| ranks[k]).sum();
        if w <= observed + 1e-9 {
            le += 1;
        }
        if w >= observed - 1e-9 {
            ge += 1;
        }
    }
    (2.0 * le.min(ge) as f64 / (1u64 << n) as f64).min(1.0)
}

#[test]
fn wilcoxon_exact_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        // Small integer range so ties and zeros occur.
        let diffs: Vec<f64> = (0..n).map(|_| rng.gen_range(-4i32..=4) as f64).collect();
        if diffs.iter().all(|d| *d == 0.0) {
            assert!(wilcoxon_signed_rank(&diffs).is_err());
            continue;
        }
        let got = wilcoxon_signed_rank(&diffs).unwrap().p_value;
        let want = enumerate_p(&diffs);
        assert!((got - want).abs() < 1e-12, "{diffs:?}: {got} vs {want}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn link_target_round_trip(lines in proptest::collection::btree_set(1usize..=200, 0..40)) {
        let set: LinkSet = lines.into_iter().collect();
        prop_assert_eq!(decode_link_target(&encode_link_target(&set)), Ok(set));
    }

    #[test]
    fn holm_dominates_and_is_idempotent(ps in proptest::collection::vec(0.0f64..=1.0, 1..12)) {
        let adj = holm(&ps).unwrap();
        for (a, p) in adj.iter().zip(&ps) {
            prop_assert!(a >= p && *a <= 1.0);
        }
        let mut order: Vec<usize> = (0..ps.len()).collect();
        order.sort_by(|&a, &b| ps[a].total_cmp(&ps[b]));
        for w in order.windows(2) {
            prop_assert!(adj[w[0]] <= adj[w[1]]);
        }
    }
}

fn random_method(rng: &mut ChaCha8Rng) -> String {
    let mut lines = vec!["void run(int n) {".to_string()];
    let words = ["read", "the", "input", "file", "and", "parse", "each", "row", "value"];
    for i in 0..rng.gen_range(3..30) {
        match rng.gen_range(0..6) {
            0 => lines.push(String::new()),
            1 => {
                let k = rng.gen_range(2..8);
                let text: Vec<&str> = (0..k).map(|_| words[rng.gen_range(0..words.len())]).collect();
                lines.push(format!("    // {}", text.join(" ")));
            }
            2 => lines.push(format!("    int v{i} = n + {i}; // note {i}")),
            _ => lines.push(format!("    call{i}(n);")),
        }
    }
    lines.push("}".into());
    lines.join("\n")
}

#[test]
fn encoded_inputs_are_well_formed() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let src = random_method(&mut rng);
        let m = SourceMethod::from_source("p", "F.java", "run", false, 1, src);
        let comments = extract_inner_comments(&m).unwrap();
        let mut seen = HashSet::new();
        for c in &comments {
            let cls = encode_classification(&m, c).unwrap();
            validate_input(Task::Classification, &cls).unwrap();
            assert!(seen.insert(cls), "each comment yields a distinct instance");

            let (lnk, _) = encode_linking(&m, c, None).unwrap();
            validate_input(Task::Linking, &lnk).unwrap();

            let links = link_blank_line(&m, c);
            if links.is_empty() || !is_summary_candidate(&c.text) {
                continue;
            }
            let (sum, _) = encode_summarization(&m, c, &links).unwrap();
            validate_input(Task::Summarization, &sum).unwrap();
            assert!(!sum.contains(COMMENT_OPEN));
            assert_eq!(sum.matches("<start>").count(), links.runs().len());
        }
    }
}

#[test]
fn blank_line_never_matches_gold_with_inner_blank() {
    let src = "void f() {\n  // set up\n  a();\n\n  b();\n}";
    let m = SourceMethod::from_source("p", "F.java", "f", false, 1, src);
    let c = &extract_inner_comments(&m).unwrap()[0];
    let gold = LinkSet::from([3, 5]);
    assert_ne!(link_blank_line(&m, c), gold);
}

#[test]
fn blank_line_links_are_consecutive_linkable_lines() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let m = SourceMethod::from_source("p", "F.java", "run", false, 1, random_method(&mut rng));
        for c in extract_inner_comments(&m).unwrap() {
            let links = link_blank_line(&m, &c);
            let (Some(first), Some(last)) = (links.first(), links.last()) else {
                continue;
            };
            for l in first..=last {
                let s = m.line(l).unwrap();
                assert!(!s.is_blank);
                assert_eq!(links.contains(l), s.is_linkable());
            }
        }
    }
}

#[test]
fn splits_partition_the_input() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let xs: Vec<TaskInstance> = (0..500)
        .map(|i| TaskInstance {
            task: Task::Classification,
            input_text: i.to_string(),
            target_text: "other".into(),
            method_id: i.to_string(),
            comment_id: i.to_string(),
            path: format!("F{}.java", rng.gen_range(0..60)),
        })
        .collect();
    for group_key in [GroupKey::File, GroupKey::None] {
        let spec = SplitSpec {
            group_key,
            seed: 21,
            ..SplitSpec::default()
        };
        let s = split_dataset(xs.clone(), &spec).unwrap();
        let mut ids: Vec<String> = [&s.train, &s.eval, &s.test]
            .iter()
            .flat_map(|p| p.iter().map(|x| x.comment_id.clone()))
            .collect();
        assert_eq!(ids.len(), xs.len());
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), xs.len());
        let (tr, ev, te) = s.sizes();
        assert!((tr as f64 / 500.0 - 0.8).abs() < 0.05, "{tr} {ev} {te}");
    }
}
