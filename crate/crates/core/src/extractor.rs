//! Method segmentation and inner-comment extraction.
//!
//! Methods are found by brace matching over the token stream. A `{` opens a
//! method body only when it sits directly inside a type body and the tokens
//! leading up to it look like a method or constructor header. Everything
//! nested inside a method body (lambdas, anonymous classes, local classes)
//! stays part of that method.

use std::ops::Range;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::lexer::{self, LexError, Token, TokenKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceFile {
    pub path: String,
    pub project_id: String,
    pub content: String,
}

impl SourceFile {
    pub fn new(
        project_id: impl Into<String>,
        path: impl Into<String>,
        content: impl Into<String>,
    ) -> Self {
        Self {
            path: path.into(),
            project_id: project_id.into(),
            content: content.into(),
        }
    }
}

/// One physical line of a method.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Statement {
    pub line_no: usize,
    /// Raw line text.
    pub text: String,
    /// Code tokens starting on this line, joined by single spaces.
    pub code: String,
    pub is_blank: bool,
    pub is_comment_only: bool,
}

impl Statement {
    /// Blank and comment-only lines are never link targets.
    pub fn is_linkable(&self) -> bool {
        !self.is_blank && !self.is_comment_only
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommentKind {
    Line,
    Block,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerComment {
    pub id: String,
    pub kind: CommentKind,
    /// Raw comment text, markers included.
    pub text: String,
    pub start_line: usize,
    pub end_line: usize,
    /// Code precedes the comment on its first line.
    pub trailing: bool,
    /// Byte span within the method source.
    pub span: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceMethod {
    pub id: String,
    pub project: String,
    pub path: String,
    pub name: String,
    pub is_test: bool,
    /// File line on which method line 1 sits.
    pub file_line: usize,
    pub source: String,
    pub lines: Vec<Statement>,
    pub tokens: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtractError {
    #[error("unbalanced braces at byte {offset}")]
    UnbalancedBraces { offset: usize },
    #[error(transparent)]
    Lex(#[from] LexError),
}

impl SourceMethod {
    /// Builds a method from its source text. Line numbering starts at 1 on the
    /// first line of `source`.
    pub fn from_source(
        project: impl Into<String>,
        path: impl Into<String>,
        name: impl Into<String>,
        is_test: bool,
        file_line: usize,
        source: impl Into<String>,
    ) -> Self {
        let source = source.into();
        let toks = lexer::scan(&source, false).expect("lenient scan never fails");
        let raw_lines: Vec<&str> = source.split('\n').collect();
        let n = raw_lines.len();
        let mut has_code = vec![false; n + 1];
        let mut has_comment = vec![false; n + 1];
        let mut code: Vec<Vec<&str>> = vec![Vec::new(); n + 1];
        for t in &toks {
            let flags = if t.kind.is_comment() {
                &mut has_comment
            } else {
                code[t.line].push(t.text(&source));
                &mut has_code
            };
            for f in &mut flags[t.line..=t.end_line.min(n)] {
                *f = true;
            }
        }
        let lines = raw_lines
            .iter()
            .enumerate()
            .map(|(i, raw)| {
                let l = i + 1;
                Statement {
                    line_no: l,
                    text: raw.trim_end_matches('\r').to_string(),
                    code: code[l].join(" "),
                    is_blank: !has_code[l] && !has_comment[l],
                    is_comment_only: !has_code[l] && has_comment[l],
                }
            })
            .collect();
        let tokens: Vec<String> = toks
            .iter()
            .filter(|t| !t.kind.is_comment())
            .map(|t| t.text(&source).to_string())
            .collect();
        Self {
            id: method_id(&tokens),
            project: project.into(),
            path: path.into(),
            name: name.into(),
            is_test,
            file_line,
            source,
            lines,
            tokens,
        }
    }

    pub fn token_count(&self) -> usize {
        self.tokens.len()
    }

    pub fn line(&self, line_no: usize) -> Option<&Statement> {
        line_no.checked_sub(1).and_then(|i| self.lines.get(i))
    }

    pub fn is_linkable(&self, line_no: usize) -> bool {
        self.line(line_no).is_some_and(Statement::is_linkable)
    }

    pub fn linkable_lines(&self) -> impl Iterator<Item = &Statement> {
        self.lines.iter().filter(|s| s.is_linkable())
    }
}

/// Stable identifier: a hash of the method's lexical token stream, so that
/// whitespace and comment differences do not change it.
pub fn method_id(tokens: &[String]) -> String {
    let mut h = Sha256::new();
    for t in tokens {
        h.update(t.as_bytes());
        h.update([0x1f]);
    }
    let digest = h.finalize();
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// True iff the method is within the token cap (inclusive).
pub fn filter_method(method: &SourceMethod, max_tokens: usize) -> bool {
    method.token_count() <= max_tokens
}

#[derive(Debug, Clone, Copy)]
enum Scope {
    Type { is_enum: bool, seen_semicolon: bool },
    Method { header_start: usize, open: usize },
    Block,
    /// Braces inside a declaration header, e.g. annotation array arguments.
    Inline,
}

/// Segments a Java file into methods and constructors.
pub fn extract_methods(file: &SourceFile) -> Result<Vec<SourceMethod>, ExtractError> {
    let src = file.content.as_str();
    let toks: Vec<Token> = lexer::scan(src, true)?
        .into_iter()
        .filter(|t| !t.kind.is_comment())
        .collect();

    let mut methods = Vec::new();
    let mut stack: Vec<(Scope, usize)> = Vec::new();
    let mut decl_start = 0usize;
    let mut parens = 0i32;

    for (i, tok) in toks.iter().enumerate() {
        let at_type_level = matches!(stack.last(), None | Some((Scope::Type { .. }, _)));
        match tok.text(src) {
            "(" if at_type_level => parens += 1,
            ")" if at_type_level => parens -= 1,
            "{" if at_type_level && parens > 0 => stack.push((Scope::Inline, i)),
            "{" if at_type_level => {
                let header = &toks[decl_start..i];
                let scope = classify_header(src, header, stack.last().map(|s| s.0), decl_start, i);
                stack.push((scope, i));
                decl_start = i + 1;
                parens = 0;
            }
            "{" => stack.push((Scope::Block, i)),
            "}" => {
                let Some((scope, _)) = stack.pop() else {
                    return Err(ExtractError::UnbalancedBraces {
                        offset: tok.span.start,
                    });
                };
                match scope {
                    Scope::Inline => continue,
                    Scope::Method { header_start, open } => {
                        methods.push(build_method(file, &toks, header_start, open, i));
                    }
                    _ => {}
                }
                if matches!(stack.last(), None | Some((Scope::Type { .. }, _))) {
                    decl_start = i + 1;
                    parens = 0;
                }
            }
            ";" if at_type_level => {
                if let Some((Scope::Type { is_enum: true, seen_semicolon }, _)) = stack.last_mut()
                {
                    *seen_semicolon = true;
                }
                decl_start = i + 1;
                parens = 0;
            }
            "," if matches!(
                stack.last(),
                Some((Scope::Type { is_enum: true, seen_semicolon: false }, _))
            ) =>
            {
                decl_start = i + 1;
            }
            _ => {}
        }
    }
    if let Some((_, open)) = stack.last() {
        return Err(ExtractError::UnbalancedBraces {
            offset: toks[*open].span.start,
        });
    }
    methods.sort_by_key(|m| m.file_line);
    Ok(methods)
}

struct Header<'a> {
    annotations: Vec<&'a str>,
    rest: Vec<&'a str>,
}

fn split_annotations<'a>(src: &'a str, header: &[Token]) -> Header<'a> {
    let text: Vec<&str> = header.iter().map(|t| t.text(src)).collect();
    let mut annotations = Vec::new();
    let mut rest = Vec::new();
    let mut i = 0;
    while i < text.len() {
        if text[i] == "@" && text.get(i + 1).is_some_and(|t| *t != "interface") {
            i += 1;
            let mut name = "";
            while i < text.len() {
                name = text[i];
                if text.get(i + 1) == Some(&".") {
                    i += 2;
                } else {
                    i += 1;
                    break;
                }
            }
            annotations.push(name);
            if text.get(i) == Some(&"(") {
                let mut depth = 0;
                while i < text.len() {
                    match text[i] {
                        "(" => depth += 1,
                        ")" => depth -= 1,
                        _ => {}
                    }
                    i += 1;
                    if depth == 0 {
                        break;
                    }
                }
            }
        } else {
            rest.push(text[i]);
            i += 1;
        }
    }
    Header { annotations, rest }
}

fn classify_header(
    src: &str,
    header: &[Token],
    parent: Option<Scope>,
    start: usize,
    open: usize,
) -> Scope {
    let Header { rest, .. } = split_annotations(src, header);
    let declares_type = rest
        .iter()
        .any(|t| matches!(*t, "class" | "interface" | "enum" | "record" | "@"));
    if declares_type {
        let is_enum = rest.contains(&"enum");
        return Scope::Type {
            is_enum,
            seen_semicolon: false,
        };
    }
    if let Some(Scope::Type {
        is_enum: true,
        seen_semicolon: false,
    }) = parent
    {
        // Enum constant with a body.
        return Scope::Type {
            is_enum: false,
            seen_semicolon: false,
        };
    }
    if looks_like_method(header, src) {
        Scope::Method {
            header_start: start,
            open,
        }
    } else {
        Scope::Block
    }
}

fn looks_like_method(header: &[Token], src: &str) -> bool {
    let Header { rest, .. } = split_annotations(src, header);
    if rest.iter().any(|t| matches!(*t, "=" | "new" | "->")) {
        return false;
    }
    let Some(paren) = rest.iter().position(|t| *t == "(") else {
        return false;
    };
    if paren == 0 {
        return false;
    }
    let name = rest[paren - 1];
    let name_ok = !lexer::is_keyword(name)
        && name
            .chars()
            .next()
            .is_some_and(|c| c.is_alphabetic() || c == '_' || c == '$');
    let last_ok = matches!(rest.last(), Some(&")") | Some(&"]"))
        || rest.contains(&"throws");
    name_ok && last_ok
}

fn build_method(
    file: &SourceFile,
    toks: &[Token],
    header_start: usize,
    open: usize,
    close: usize,
) -> SourceMethod {
    let src = file.content.as_str();
    let first = &toks[header_start];
    let line_start = src[..first.span.start].rfind('\n').map_or(0, |p| p + 1);
    let start = if src[line_start..first.span.start].trim().is_empty() {
        line_start
    } else {
        first.span.start
    };
    let end = toks[close].span.end;

    let parts = split_annotations(src, &toks[header_start..open]);
    let paren = parts.rest.iter().position(|t| *t == "(").unwrap_or(1);
    let name = parts.rest.get(paren.wrapping_sub(1)).copied().unwrap_or("");
    let is_test = parts.annotations.contains(&"Test");

    SourceMethod::from_source(
        file.project_id.clone(),
        file.path.clone(),
        name,
        is_test,
        first.line,
        &src[start..end],
    )
}

/// Extracts the `//` and `/* */` comments of a method. Javadoc is skipped and
/// runs of full-line `//` comments on adjacent lines merge into one comment.
pub fn extract_inner_comments(method: &SourceMethod) -> Result<Vec<InnerComment>, LexError> {
    let src = method.source.as_str();
    let toks = lexer::scan(src, true)?;
    let mut out: Vec<InnerComment> = Vec::new();
    let mut last_code_line = 0usize;
    let mut last_code_end = 0usize;

    for t in &toks {
        if !t.kind.is_comment() {
            last_code_line = t.end_line;
            last_code_end = t.span.end;
            continue;
        }
        let kind = match t.kind {
            TokenKind::LineComment => CommentKind::Line,
            TokenKind::BlockComment => CommentKind::Block,
            _ => continue,
        };
        let trailing = last_code_line == t.line && last_code_end <= t.span.start;
        if let Some(prev) = out.last_mut() {
            let mergeable = kind == CommentKind::Line
                && prev.kind == CommentKind::Line
                && !prev.trailing
                && !trailing
                && prev.end_line + 1 == t.line;
            if mergeable {
                prev.text.push('\n');
                prev.text.push_str(t.text(src));
                prev.end_line = t.line;
                prev.span.end = t.span.end;
                continue;
            }
        }
        out.push(InnerComment {
            id: String::new(),
            kind,
            text: t.text(src).to_string(),
            start_line: t.line,
            end_line: t.end_line,
            trailing,
            span: t.span.clone(),
        });
    }
    for c in &mut out {
        c.id = format!("{}:{}", method.id, c.start_line);
    }
    Ok(out)
}

/// Comment text with `//`, `/*`, `*/` and leading `*` markers removed and
/// whitespace collapsed.
pub fn strip_comment_markers(raw: &str) -> String {
    let mut words = Vec::new();
    for line in raw.lines() {
        let mut l = line.trim();
        while let Some(r) = l.strip_prefix("//") {
            l = r;
        }
        if let Some(r) = l.strip_prefix("/*") {
            l = r;
        }
        if let Some(r) = l.strip_suffix("*/") {
            l = r;
        }
        let l = l.trim_start().trim_start_matches('*');
        words.extend(l.split_whitespace());
    }
    words.join(" ")
}
