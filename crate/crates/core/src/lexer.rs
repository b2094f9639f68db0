//! A Java-aware scanner.
//!
//! The scanner is deliberately shallow: it knows enough about Java's lexical
//! grammar to separate identifiers, literals, operators, punctuation and
//! comments, and to never mistake `//` inside a string or character literal
//! for a comment. It does not build a syntax tree.

use std::ops::Range;

/// Lexical category of a scanned token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Keyword,
    Number,
    Str,
    Char,
    Operator,
    Punct,
    LineComment,
    BlockComment,
    Javadoc,
    /// A character the scanner has no rule for; kept as a one-character token.
    Unknown,
}

impl TokenKind {
    pub fn is_comment(self) -> bool {
        matches!(
            self,
            TokenKind::LineComment | TokenKind::BlockComment | TokenKind::Javadoc
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// Byte span into the scanned text.
    pub span: Range<usize>,
    /// 1-based line of the first byte.
    pub line: usize,
    /// 1-based line of the last byte.
    pub end_line: usize,
}

impl Token {
    pub fn text<'a>(&self, src: &'a str) -> &'a str {
        &src[self.span.clone()]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LexError {
    #[error("unterminated block comment starting at line {line} (byte {offset})")]
    UnterminatedComment { line: usize, offset: usize },
}

const KEYWORDS: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally", "float",
    "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws", "transient", "try",
    "void", "volatile", "while", "true", "false", "null", "var", "record", "yield",
];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.contains(&word)
}

// Longest first so that maximal munch works by linear probing.
const OPERATORS: &[&str] = &[
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "=", "<", ">", "!", "~", "?", ":",
    "+", "-", "*", "/", "&", "|", "^", "%",
];

const PUNCT: &[u8] = b"(){}[];,.@";

/// Scans `src` into tokens, comments included.
///
/// In strict mode an unterminated block comment is an error; otherwise it
/// runs to the end of input.
pub fn scan(src: &str, strict: bool) -> Result<Vec<Token>, LexError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut line = 1;

    while i < bytes.len() {
        let c = bytes[i];
        if c == b'\n' {
            line += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let start_line = line;
        let kind;

        if c == b'/' && bytes.get(i + 1) == Some(&b'/') {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            // The comment excludes a trailing carriage return.
            let mut end = i;
            if end > start && bytes[end - 1] == b'\r' {
                end -= 1;
            }
            tokens.push(Token {
                kind: TokenKind::LineComment,
                span: start..end,
                line: start_line,
                end_line: start_line,
            });
            continue;
        } else if c == b'/' && bytes.get(i + 1) == Some(&b'*') {
            // `/**/` is an empty block comment, not Javadoc.
            kind = if bytes.get(i + 2) == Some(&b'*') && bytes.get(i + 3) != Some(&b'/') {
                TokenKind::Javadoc
            } else {
                TokenKind::BlockComment
            };
            i += 2;
            let mut closed = false;
            while i < bytes.len() {
                if bytes[i] == b'*' && bytes.get(i + 1) == Some(&b'/') {
                    i += 2;
                    closed = true;
                    break;
                }
                if bytes[i] == b'\n' {
                    line += 1;
                }
                i += 1;
            }
            if !closed && strict {
                return Err(LexError::UnterminatedComment {
                    line: start_line,
                    offset: start,
                });
            }
        } else if c == b'"' {
            if src[i..].starts_with("\"\"\"") {
                // Text block: runs to the next unescaped `"""`.
                i += 3;
                while i < bytes.len() {
                    if bytes[i] == b'\\' {
                        i += 2;
                        continue;
                    }
                    if src[i..].starts_with("\"\"\"") {
                        i += 3;
                        break;
                    }
                    if bytes[i] == b'\n' {
                        line += 1;
                    }
                    i += 1;
                }
            } else {
                i = scan_quoted(bytes, i, b'"');
            }
            kind = TokenKind::Str;
        } else if c == b'\'' {
            i = scan_quoted(bytes, i, b'\'');
            kind = TokenKind::Char;
        } else if is_ident_start(src, i) {
            i = scan_ident(src, i);
            kind = if is_keyword(&src[start..i]) {
                TokenKind::Keyword
            } else {
                TokenKind::Ident
            };
        } else if c.is_ascii_digit()
            || (c == b'.' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit))
        {
            i = scan_number(bytes, i);
            kind = TokenKind::Number;
        } else if let Some(op) = OPERATORS.iter().find(|op| src[i..].starts_with(**op)) {
            i += op.len();
            kind = TokenKind::Operator;
        } else if PUNCT.contains(&c) {
            i += 1;
            kind = TokenKind::Punct;
        } else {
            let ch = src[i..].chars().next().expect("in bounds");
            i += ch.len_utf8();
            kind = TokenKind::Unknown;
        }

        let i_clamped = i.min(bytes.len());
        i = i_clamped;
        tokens.push(Token {
            kind,
            span: start..i,
            line: start_line,
            end_line: line,
        });
    }
    Ok(tokens)
}

/// Splits text into lexical tokens, dropping whitespace and comments.
pub fn tokenize(text: &str) -> Vec<String> {
    scan(text, false)
        .expect("lenient scan never fails")
        .into_iter()
        .filter(|t| !t.kind.is_comment())
        .map(|t| text[t.span].to_string())
        .collect()
}

fn is_ident_start(src: &str, i: usize) -> bool {
    let ch = src[i..].chars().next().expect("in bounds");
    ch == '_' || ch == '$' || ch.is_alphabetic()
}

fn scan_ident(src: &str, mut i: usize) -> usize {
    for ch in src[i..].chars() {
        if ch == '_' || ch == '$' || ch.is_alphanumeric() {
            i += ch.len_utf8();
        } else {
            break;
        }
    }
    i
}

// Unterminated literals stop at the end of the line.
fn scan_quoted(bytes: &[u8], mut i: usize, quote: u8) -> usize {
    i += 1;
    while i < bytes.len() {
        match bytes[i] {
            b'\\' => {
                if bytes.get(i + 1) == Some(&b'\n') {
                    return i + 1;
                }
                i += 2;
            }
            b'\n' => return i,
            b if b == quote => return i + 1,
            _ => i += 1,
        }
    }
    bytes.len()
}

fn scan_number(bytes: &[u8], mut i: usize) -> usize {
    let hex = bytes[i] == b'0' && matches!(bytes.get(i + 1), Some(b'x' | b'X'));
    if hex {
        i += 2;
    }
    while i < bytes.len() {
        let b = bytes[i];
        let exponent = !hex && matches!(b, b'e' | b'E') || hex && matches!(b, b'p' | b'P');
        if exponent && matches!(bytes.get(i + 1), Some(b'+' | b'-')) {
            i += 2;
        } else if b.is_ascii_alphanumeric() || b == b'_' || b == b'.' {
            i += 1;
        } else {
            break;
        }
    }
    i
}
