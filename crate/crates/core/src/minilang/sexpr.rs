//! S-expressions: the concrete syntax of mini-language programs.
//!
//! ```text
//! sexpr  := atom | '(' sexpr* ')'
//! symbol := [A-Za-z_][A-Za-z0-9_]*
//! int    := -?[0-9]+            (64-bit signed)
//! string := '"' ( [^"\\] | '\"' | '\\' )* '"'
//! ```
//!
//! Whitespace between tokens is any run of space, tab, newline or carriage
//! return. Printing is canonical: single spaces, no padding inside parens.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SExpr {
    Symbol(String),
    Int(i64),
    Str(String),
    List(Vec<SExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unbalanced parenthesis")]
    Unbalanced,
    #[error("unterminated string")]
    UnterminatedString,
    #[error("invalid escape sequence")]
    InvalidEscape,
    #[error("trailing input after expression")]
    TrailingGarbage,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("integer out of 64-bit range")]
    IntegerOverflow,
}

/// A parse failure at a byte offset into the input.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

fn is_space(b: u8) -> bool {
    matches!(b, b' ' | b'\t' | b'\n' | b'\r')
}

fn is_delimiter(b: u8) -> bool {
    is_space(b) || matches!(b, b'(' | b')' | b'"')
}

struct Reader<'s> {
    text: &'s str,
    pos: usize,
}

impl Reader<'_> {
    fn err<T>(&self, offset: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError { offset, kind })
    }

    fn skip_space(&mut self) {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && is_space(bytes[self.pos]) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn char_at(&self, offset: usize) -> char {
        self.text[offset..].chars().next().unwrap_or('\0')
    }

    /// Reads one expression; the cursor is on its first byte.
    fn expr(&mut self) -> Result<SExpr, ParseError> {
        match self.peek() {
            None => self.err(self.pos, ParseErrorKind::UnexpectedEnd),
            Some(b'(') => self.list(),
            Some(b')') => self.err(self.pos, ParseErrorKind::Unbalanced),
            Some(b'"') => self.string(),
            Some(_) => self.atom(),
        }
    }

    fn list(&mut self) -> Result<SExpr, ParseError> {
        let open = self.pos;
        self.pos += 1;
        let mut items = Vec::new();
        loop {
            self.skip_space();
            match self.peek() {
                None => return self.err(open, ParseErrorKind::Unbalanced),
                Some(b')') => {
                    self.pos += 1;
                    return Ok(SExpr::List(items));
                }
                Some(_) => items.push(self.expr()?),
            }
        }
    }

    fn string(&mut self) -> Result<SExpr, ParseError> {
        let open = self.pos;
        self.pos += 1;
        let mut out = String::new();
        loop {
            let Some(c) = self.text[self.pos..].chars().next() else {
                return self.err(open, ParseErrorKind::UnterminatedString);
            };
            match c {
                '"' => {
                    self.pos += 1;
                    return Ok(SExpr::Str(out));
                }
                '\\' => {
                    match self.text.as_bytes().get(self.pos + 1) {
                        Some(b'"') => out.push('"'),
                        Some(b'\\') => out.push('\\'),
                        None => return self.err(open, ParseErrorKind::UnterminatedString),
                        Some(_) => return self.err(self.pos, ParseErrorKind::InvalidEscape),
                    }
                    self.pos += 2;
                }
                c => {
                    out.push(c);
                    self.pos += c.len_utf8();
                }
            }
        }
    }

    fn atom(&mut self) -> Result<SExpr, ParseError> {
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        while end < bytes.len() && !is_delimiter(bytes[end]) {
            end += 1;
        }
        let tok = &self.text[start..end];
        self.pos = end;
        let first = tok.as_bytes()[0];
        if first.is_ascii_alphabetic() || first == b'_' {
            if let Some(i) = tok
                .bytes()
                .position(|b| !(b.is_ascii_alphanumeric() || b == b'_'))
            {
                return self.err(
                    start + i,
                    ParseErrorKind::UnexpectedChar(self.char_at(start + i)),
                );
            }
            return Ok(SExpr::Symbol(tok.to_string()));
        }
        let digits_from = usize::from(first == b'-');
        if let Some(i) = tok
            .bytes()
            .skip(digits_from)
            .position(|b| !b.is_ascii_digit())
        {
            let at = start + digits_from + i;
            return self.err(at, ParseErrorKind::UnexpectedChar(self.char_at(at)));
        }
        if tok.len() == digits_from {
            return self.err(start, ParseErrorKind::UnexpectedChar('-'));
        }
        tok.parse::<i64>()
            .map(SExpr::Int)
            .or_else(|_| self.err(start, ParseErrorKind::IntegerOverflow))
    }
}

/// Parses exactly one expression, surrounded by optional whitespace.
pub fn parse(text: &str) -> Result<SExpr, ParseError> {
    let mut r = Reader { text, pos: 0 };
    r.skip_space();
    let e = r.expr()?;
    r.skip_space();
    match r.peek() {
        None => Ok(e),
        Some(b')') => r.err(r.pos, ParseErrorKind::Unbalanced),
        Some(_) => r.err(r.pos, ParseErrorKind::TrailingGarbage),
    }
}

impl fmt::Display for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SExpr::Symbol(s) => f.write_str(s),
            SExpr::Int(i) => write!(f, "{i}"),
            SExpr::Str(s) => {
                f.write_str("\"")?;
                for c in s.chars() {
                    if matches!(c, '"' | '\\') {
                        f.write_str("\\")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("\"")
            }
            SExpr::List(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}
