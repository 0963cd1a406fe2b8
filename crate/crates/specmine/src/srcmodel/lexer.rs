//! Tokenizer for the supported Java dialect.
//!
//! Produces a flat token stream plus a side list of comments. Method bodies
//! are kept as token slices downstream, so the lexer is the single place
//! where identifier positions are established.

use serde::{Deserialize, Serialize};

/// Token class. `Kw` covers reserved words plus the literals `true`,
/// `false` and `null`; everything the rewriter may rename is `Ident`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TokKind {
    Ident,
    Kw,
    Int,
    Float,
    Str,
    Char,
    Punct,
}

/// One token. Equality ignores position so that re-lexed renderer output
/// compares equal to the model it came from.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Tok {
    pub kind: TokKind,
    pub text: String,
    pub line: u32,
    pub col: u32,
}

impl PartialEq for Tok {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.text == other.text
    }
}

impl Eq for Tok {}

impl Tok {
    pub fn is(&self, text: &str) -> bool {
        self.text == text
    }

    pub fn is_kw(&self, text: &str) -> bool {
        self.kind == TokKind::Kw && self.text == text
    }
}

/// A comment with its starting line. Text is stored without delimiters,
/// one trimmed line per entry joined by `\n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comment {
    pub text: String,
    pub line: u32,
    pub end_line: u32,
}

#[derive(Debug, Clone, Default)]
pub struct LexOutput {
    pub tokens: Vec<Tok>,
    pub comments: Vec<Comment>,
    /// Count of lines carrying at least one non-comment token.
    pub code_lines: u32,
}

const KEYWORDS: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally", "float",
    "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws", "transient", "try",
    "void", "volatile", "while", "true", "false", "null",
];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.contains(&word)
}

// Longest first so greedy matching picks the full operator.
const PUNCTS: &[&str] = &[
    ">>>=", "<<=", ">>=", ">>>", "...", "<<", ">>", "->", "::", "==", "!=", "<=", ">=", "&&",
    "||", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
];

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<u8> {
        self.src.get(self.pos + 1).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn starts_with(&self, s: &str) -> bool {
        self.src[self.pos..].starts_with(s.as_bytes())
    }
}

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_' || b == b'$' || b >= 0x80
}

fn is_ident_part(b: u8) -> bool {
    is_ident_start(b) || b.is_ascii_digit()
}

/// Lexes `src`. Never fails: unexpected bytes become single-character
/// punct tokens so parsing can recover with a diagnostic.
pub fn lex(src: &str) -> LexOutput {
    let mut cur = Cursor {
        src: src.as_bytes(),
        pos: 0,
        line: 1,
        col: 1,
    };
    let mut out = LexOutput::default();
    let mut code_line_set: Vec<u32> = Vec::new();

    while let Some(b) = cur.peek() {
        let (line, col) = (cur.line, cur.col);
        if b.is_ascii_whitespace() {
            cur.bump();
            continue;
        }
        if b == b'/' && cur.peek2() == Some(b'/') {
            cur.bump();
            cur.bump();
            let mut text = String::new();
            while let Some(c) = cur.peek() {
                if c == b'\n' {
                    break;
                }
                text.push(cur.bump().unwrap() as char);
            }
            out.comments.push(Comment {
                text: text.trim().to_string(),
                line,
                end_line: line,
            });
            continue;
        }
        if b == b'/' && cur.peek2() == Some(b'*') {
            cur.bump();
            cur.bump();
            let mut raw = String::new();
            while cur.peek().is_some() && !cur.starts_with("*/") {
                raw.push(cur.bump().unwrap() as char);
            }
            let end_line = cur.line;
            cur.bump();
            cur.bump();
            out.comments.push(Comment {
                text: clean_block_comment(&raw),
                line,
                end_line,
            });
            continue;
        }
        if b == b'"' || b == b'\'' {
            let quote = b;
            let mut text = String::new();
            text.push(cur.bump().unwrap() as char);
            while let Some(c) = cur.peek() {
                if c == b'\\' {
                    text.push(cur.bump().unwrap() as char);
                    if let Some(esc) = cur.bump() {
                        text.push(esc as char);
                    }
                    continue;
                }
                text.push(cur.bump().unwrap() as char);
                if c == quote || c == b'\n' {
                    break;
                }
            }
            out.tokens.push(Tok {
                kind: if quote == b'"' { TokKind::Str } else { TokKind::Char },
                text,
                line,
                col,
            });
            mark_line(&mut code_line_set, line);
            continue;
        }
        if is_ident_start(b) {
            let mut text = String::new();
            while let Some(c) = cur.peek() {
                if !is_ident_part(c) {
                    break;
                }
                text.push(cur.bump().unwrap() as char);
            }
            let kind = if is_keyword(&text) { TokKind::Kw } else { TokKind::Ident };
            out.tokens.push(Tok { kind, text, line, col });
            mark_line(&mut code_line_set, line);
            continue;
        }
        if b.is_ascii_digit() {
            let mut text = String::new();
            let mut is_float = false;
            while let Some(c) = cur.peek() {
                if c.is_ascii_alphanumeric() || c == b'_' {
                    text.push(cur.bump().unwrap() as char);
                } else if c == b'.' && cur.peek2().is_some_and(|d| d.is_ascii_digit()) {
                    is_float = true;
                    text.push(cur.bump().unwrap() as char);
                } else {
                    break;
                }
            }
            if text.ends_with(['f', 'F', 'd', 'D']) && !text.starts_with("0x") && !text.starts_with("0X") {
                is_float = is_float || text.contains('.') || text.len() > 1;
            }
            let kind = if is_float { TokKind::Float } else { TokKind::Int };
            out.tokens.push(Tok { kind, text, line, col });
            mark_line(&mut code_line_set, line);
            continue;
        }
        // Multi-character operators, longest match first.
        let mut matched = false;
        for p in PUNCTS {
            if cur.starts_with(p) {
                for _ in 0..p.len() {
                    cur.bump();
                }
                out.tokens.push(Tok {
                    kind: TokKind::Punct,
                    text: (*p).to_string(),
                    line,
                    col,
                });
                matched = true;
                break;
            }
        }
        if matched {
            mark_line(&mut code_line_set, line);
            continue;
        }
        let c = cur.bump().unwrap();
        out.tokens.push(Tok {
            kind: TokKind::Punct,
            text: (c as char).to_string(),
            line,
            col,
        });
        mark_line(&mut code_line_set, line);
    }

    out.code_lines = code_line_set.len() as u32;
    out
}

fn mark_line(set: &mut Vec<u32>, line: u32) {
    if set.last() != Some(&line) {
        set.push(line);
    }
}

fn clean_block_comment(raw: &str) -> String {
    raw.lines()
        .map(|l| l.trim().trim_start_matches('*').trim())
        .filter(|l| !l.is_empty())
        .collect::<Vec<_>>()
        .join("\n")
}
