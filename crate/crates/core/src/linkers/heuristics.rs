use std::collections::HashSet;

use super::LinkSet;
use crate::extractor::{strip_comment_markers, InnerComment, SourceMethod};

// Similarities are ratios of small integers; this absorbs representation
// error in thresholds such as 0.1 * 3.
const THRESHOLD_EPS: f64 = 1e-12;

/// First line the comment can document: its own line when it trails code or
/// is followed by code, else the line after it.
pub(crate) fn first_candidate_line(method: &SourceMethod, comment: &InnerComment) -> usize {
    if comment.trailing {
        comment.start_line
    } else if method.is_linkable(comment.end_line) {
        comment.end_line
    } else {
        comment.end_line + 1
    }
}

/// Links every statement following the comment up to the first blank line.
/// Comment-only lines are passed over without ending the scope.
pub fn link_blank_line(method: &SourceMethod, comment: &InnerComment) -> LinkSet {
    let mut out = LinkSet::new();
    let start = first_candidate_line(method, comment);
    for stmt in method.lines.iter().skip(start.saturating_sub(1)) {
        if stmt.is_blank {
            break;
        }
        if stmt.is_linkable() {
            out.insert(stmt.line_no);
        }
    }
    out
}

/// Share of whitespace-separated terms the two strings have in common,
/// relative to the larger term set.
pub fn term_similarity(a: &str, b: &str) -> f64 {
    let a = a.to_lowercase();
    let b = b.to_lowercase();
    let ta: HashSet<&str> = a.split_whitespace().collect();
    let tb: HashSet<&str> = b.split_whitespace().collect();
    let denom = ta.len().max(tb.len());
    if denom == 0 {
        return 0.0;
    }
    ta.intersection(&tb).count() as f64 / denom as f64
}

/// Links every statement whose similarity to the comment is at least `lambda`.
pub fn link_token_similarity(method: &SourceMethod, comment: &InnerComment, lambda: f64) -> LinkSet {
    let text = strip_comment_markers(&comment.text);
    method
        .linkable_lines()
        .filter(|s| term_similarity(&text, &s.code) + THRESHOLD_EPS >= lambda)
        .map(|s| s.line_no)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extractor::extract_inner_comments;

    fn setup(src: &str) -> (SourceMethod, Vec<InnerComment>) {
        let m = SourceMethod::from_source("p", "f", "m", false, 1, src);
        let cs = extract_inner_comments(&m).unwrap();
        (m, cs)
    }

    #[test]
    fn stops_at_first_blank_line() {
        let (m, cs) = setup("// c\na();\nb();\n\nc();");
        assert_eq!(link_blank_line(&m, &cs[0]), LinkSet::from([2, 3]));
    }

    #[test]
    fn comment_on_last_line_links_nothing() {
        let (m, cs) = setup("a();\n// c");
        assert!(link_blank_line(&m, &cs[0]).is_empty());
    }

    #[test]
    fn blank_line_right_after_comment_links_nothing() {
        let (m, cs) = setup("// c\n\na();");
        assert!(link_blank_line(&m, &cs[0]).is_empty());
    }

    #[test]
    fn trailing_comment_starts_on_its_own_line() {
        let (m, cs) = setup("a(); // c\nb();\n\nc();");
        assert_eq!(link_blank_line(&m, &cs[0]), LinkSet::from([1, 2]));
    }

    #[test]
    fn block_comment_followed_by_code_on_same_line() {
        let (m, cs) = setup("/* c */ a();\nb();");
        assert_eq!(link_blank_line(&m, &cs[0]), LinkSet::from([1, 2]));
    }

    #[test]
    fn similarity_examples() {
        assert_eq!(term_similarity("load the cache", "load the cache"), 1.0);
        assert_eq!(term_similarity("alpha beta", "gamma delta"), 0.0);
        assert_eq!(
            term_similarity("get messages from queue", "getMessages ( queue )"),
            0.25
        );
        assert_eq!(term_similarity("", ""), 0.0);
        assert_eq!(term_similarity("A b", "a B"), 1.0);
    }

    #[test]
    fn lambda_extremes() {
        let (m, cs) = setup("// zzz\na();\nb();\nc();");
        assert_eq!(link_token_similarity(&m, &cs[0], 0.0), LinkSet::from([2, 3, 4]));
        assert!(link_token_similarity(&m, &cs[0], 1.0).is_empty());
    }

    #[test]
    fn threshold_is_inclusive() {
        // Comment terms {get, messages, from, queue}; statement code terms
        // {getmessages, (, queue, ), ;} shares one of five.
        let (m, cs) = setup("// get messages from queue\ngetMessages(queue);\nother();");
        let s = term_similarity("get messages from queue", &m.lines[1].code);
        assert_eq!(s, 0.2);
        assert_eq!(link_token_similarity(&m, &cs[0], 0.2), LinkSet::from([2]));
        assert!(link_token_similarity(&m, &cs[0], 0.2000001).is_empty());

        // A line without `;` has exactly the terms {getmessages, (, queue, )}.
        let (m, cs) = setup("// get messages from queue\nx = y\ngetMessages ( queue )\n;");
        assert_eq!(term_similarity("get messages from queue", &m.lines[2].code), 0.25);
        assert!(link_token_similarity(&m, &cs[0], 0.25).contains(3));
    }
}
