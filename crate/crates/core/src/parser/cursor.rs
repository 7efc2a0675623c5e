use super::{ParseError, SourceSpan};

/// Character cursor over one source line. Columns are 1-based.
pub(crate) struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str, line: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
            src,
        }
    }

    pub fn line(&self) -> usize {
        self.line
    }

    pub fn source(&self) -> &'a str {
        self.src
    }

    pub fn col(&self) -> usize {
        self.pos + 1
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    pub fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    /// Skips whitespace; a `%` comments out the rest of the line.
    pub fn skip_trivia(&mut self) {
        self.skip_spaces();
        if self.peek() == Some('%') {
            self.pos = self.chars.len();
        }
    }

    pub fn rest_starts_with(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(i, c)| self.chars.get(self.pos + i) == Some(&c))
    }

    pub fn advance(&mut self, n: usize) {
        self.pos = (self.pos + n).min(self.chars.len());
    }

    pub fn span(&self, col: usize, len: usize) -> SourceSpan {
        SourceSpan {
            line: self.line,
            column: col,
            length: len,
        }
    }

    pub fn error_at(&self, col: usize, len: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            span: self.span(col, len),
            message: message.into(),
            expected: None,
        }
    }

    /// "expected X" at the current position.
    pub fn expected(&self, what: &str) -> ParseError {
        let len = usize::from(!self.at_end());
        let found = match self.peek() {
            Some(c) => format!("found '{c}'"),
            None => "found end of line".to_string(),
        };
        ParseError {
            span: self.span(self.col(), len),
            message: format!("expected {what}, {found}"),
            expected: Some(what.to_string()),
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.expected(&format!("'{c}'")))
        }
    }

    pub fn identifier(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// Characters up to (not including) `stop`, or `None` at end of line.
    pub fn take_until(&mut self, stop: char) -> Option<String> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c == stop {
                return Some(self.chars[start..self.pos].iter().collect());
            }
            self.pos += 1;
        }
        self.pos = start;
        None
    }

    /// Contents of a balanced `{...}` group; the cursor must be on `{`.
    /// Backslash escapes the following character.
    pub fn balanced_group(&mut self) -> Result<String, ParseError> {
        let open_col = self.col();
        self.expect('{')?;
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(c) = self.bump() {
            match c {
                '\\' => {
                    self.bump();
                }
                '{' => depth += 1,
                '}' if depth == 0 => {
                    return Ok(self.chars[start..self.pos - 1].iter().collect());
                }
                '}' => depth -= 1,
                _ => {}
            }
        }
        Err(ParseError {
            span: self.span(open_col, self.chars.len() + 1 - open_col),
            message: "unbalanced braces, expected '}'".into(),
            expected: Some("'}'".into()),
        })
    }

    /// A decimal number: optional sign, digits, optional fraction.
    pub fn number(&mut self) -> Result<f64, ParseError> {
        self.skip_spaces();
        let start = self.pos;
        let col = self.col();
        if matches!(self.peek(), Some('+' | '-')) {
            self.pos += 1;
        }
        let int_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let mut digits = self.pos - int_start;
        if self.eat('.') {
            let frac_start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            digits += self.pos - frac_start;
        }
        if digits == 0 {
            self.pos = start;
            return Err(self.expected("a number"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let v = parse_decimal(&text).ok_or_else(|| {
            self.error_at(col, self.pos - start, format!("number `{text}` is out of range"))
        })?;
        self.skip_spaces();
        Ok(v)
    }
}

/// Parses the strict decimal form used throughout the language.
pub(crate) fn parse_decimal(text: &str) -> Option<f64> {
    let body = text.strip_prefix(['+', '-']).unwrap_or(text);
    let valid = !body.is_empty()
        && body.chars().all(|c| c.is_ascii_digit() || c == '.')
        && body.chars().filter(|&c| c == '.').count() <= 1
        && body.chars().any(|c| c.is_ascii_digit());
    if !valid {
        return None;
    }
    text.parse::<f64>().ok().filter(|v| v.is_finite())
}
