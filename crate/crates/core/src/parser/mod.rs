//! Source text to [`Diagram`] and back.
//!
//! A document is a header line `\begin{axopicture}(w,h)` (optionally
//! followed by `(xo,yo)` for the lower-left corner, and optionally preceded
//! by `[scale=s]`), a body of commands and a closing `\end{axopicture}`.
//! `%` starts a comment. The command set is listed in the grammar module.

mod cursor;
mod grammar;
mod serialize;

use std::fmt;

use crate::geom::Point;
use crate::model::{
    color_lookup, resolve_options, Canvas, Diagram, DrawState, Item, ModelError, OptionMap,
    OptionValue, Paint,
};
use cursor::{parse_decimal, Cursor};
use grammar::{Arg, ArgKind};

pub use serialize::{format_number, serialize};

const BEGIN: &str = "\\begin{axopicture}";
const END: &str = "\\end{axopicture}";

/// A region of one source line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    /// In characters.
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
    /// What the parser was looking for, when that is a single token.
    pub expected: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.span.line, self.span.column, self.message)
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    /// Renders the error with the offending line and a caret marker.
    pub fn render(&self, src: &str) -> String {
        let text = src.lines().nth(self.span.line - 1).unwrap_or("");
        let pad = " ".repeat(self.span.column.saturating_sub(1));
        let marks = "^".repeat(self.span.length.max(1));
        format!("error: {self}\n  | {text}\n  | {pad}{marks}")
    }
}

#[derive(PartialEq)]
enum Phase {
    Before,
    Body,
    After,
}

/// Parses a whole document.
pub fn parse_document(src: &str) -> Result<Diagram, ParseError> {
    let mut phase = Phase::Before;
    let mut diagram = Diagram::new(Canvas::new(1.0, 1.0));
    let mut last_line = (1, 0);
    for (idx, text) in src.lines().enumerate() {
        let mut c = Cursor::new(text, idx + 1);
        last_line = (idx + 1, text.chars().count());
        loop {
            c.skip_trivia();
            if c.at_end() {
                break;
            }
            match phase {
                Phase::Before => {
                    if !c.rest_starts_with(BEGIN) {
                        return Err(c.expected("\\begin{axopicture}"));
                    }
                    c.advance(BEGIN.chars().count());
                    diagram.canvas = header(&mut c)?;
                    phase = Phase::Body;
                }
                Phase::Body if c.rest_starts_with(END) => {
                    c.advance(END.chars().count());
                    phase = Phase::After;
                }
                Phase::Body => diagram.items.push(command(&mut c)?),
                Phase::After => {
                    return Err(c.error_at(
                        c.col(),
                        text.chars().count() + 1 - c.col(),
                        "unexpected text after \\end{axopicture}",
                    ))
                }
            }
        }
    }
    let (line, len) = last_line;
    let at_end = |message: &str, expected: &str| ParseError {
        span: SourceSpan {
            line,
            column: len + 1,
            length: 0,
        },
        message: message.to_string(),
        expected: Some(expected.to_string()),
    };
    match phase {
        Phase::Before => Err(at_end("missing \\begin{axopicture}", BEGIN)),
        Phase::Body => Err(at_end("missing \\end{axopicture}", END)),
        Phase::After => Ok(diagram),
    }
}

fn header(c: &mut Cursor<'_>) -> Result<Canvas, ParseError> {
    c.skip_spaces();
    let mut scale = 1.0;
    if c.peek() == Some('[') {
        let col = c.col() + 1;
        c.bump();
        let raw = c.take_until(']').ok_or_else(|| {
            let mut end = Cursor::new(c.source(), c.line());
            end.advance(c.source().chars().count());
            end.expected("']'")
        })?;
        c.bump();
        let opts = options_at(&raw, c.line(), col)?;
        for (k, v) in opts {
            match (k.as_str(), v) {
                ("scale", OptionValue::Number(s)) if s > 0.0 => scale = s,
                _ => {
                    return Err(c.error_at(
                        col,
                        raw.chars().count(),
                        format!("bad header option `{k}`, only `scale=<positive>` is allowed"),
                    ))
                }
            }
        }
        c.skip_spaces();
    }
    let col = c.col();
    let size = paren_numbers(c, 2)?;
    let (w, h) = (size[0], size[1]);
    if !(w > 0.0 && h > 0.0) {
        return Err(c.error_at(col, c.col() - col, "picture width and height must be positive"));
    }
    let mut canvas = Canvas::new(w, h);
    canvas.scale = scale;
    c.skip_spaces();
    if c.peek() == Some('(') {
        let o = paren_numbers(c, 2)?;
        canvas.origin = Point::new(o[0], o[1]);
    }
    Ok(canvas)
}

/// `(a,b,...)` with exactly `n` numbers.
fn paren_numbers(c: &mut Cursor<'_>, n: usize) -> Result<Vec<f64>, ParseError> {
    c.skip_spaces();
    c.expect('(')?;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(c.number()?);
        c.expect(if i + 1 == n { ')' } else { ',' })?;
    }
    Ok(out)
}

fn braced_number(c: &mut Cursor<'_>) -> Result<f64, ParseError> {
    c.skip_spaces();
    c.expect('{')?;
    let v = c.number()?;
    c.expect('}')?;
    Ok(v)
}

fn points_group(c: &mut Cursor<'_>) -> Result<Vec<Point>, ParseError> {
    c.skip_spaces();
    c.expect('{')?;
    let mut pts = Vec::new();
    loop {
        c.skip_spaces();
        if c.eat('}') {
            return Ok(pts);
        }
        if c.peek() != Some('(') {
            return Err(c.expected("'(' or '}'"));
        }
        let v = paren_numbers(c, 2)?;
        pts.push(Point::new(v[0], v[1]));
    }
}

fn paint_group(c: &mut Cursor<'_>) -> Result<Paint, ParseError> {
    c.skip_spaces();
    let col = c.col();
    let raw = c.balanced_group()?;
    let len = c.col() - col;
    let body = raw.trim();
    let fail = |msg: String| c.error_at(col, len, msg);
    if body.starts_with(|ch: char| ch.is_ascii_alphabetic()) {
        return match color_lookup(body) {
            Ok(_) => Ok(Paint::Named(body.to_string())),
            Err(e) => Err(fail(e.to_string())),
        };
    }
    let nums: Option<Vec<f64>> = body.split(',').map(|t| parse_decimal(t.trim())).collect();
    let in_unit = |v: &f64| (0.0..=1.0).contains(v);
    match nums.as_deref() {
        Some([g]) if in_unit(g) => Ok(Paint::Gray(*g)),
        Some([r, g, b]) if [r, g, b].into_iter().all(in_unit) => Ok(Paint::Rgb(*r, *g, *b)),
        _ => Err(fail(format!(
            "bad color `{body}`, expected a color name, a gray level or r,g,b in [0,1]"
        ))),
    }
}

/// Parses one command starting at `\`.
fn command(c: &mut Cursor<'_>) -> Result<Item, ParseError> {
    let start = c.col();
    if !c.eat('\\') {
        return Err(c.expected("a command"));
    }
    let name = c.identifier();
    if name.is_empty() {
        return Err(c.expected("a command name"));
    }
    let name_span = (start, name.chars().count() + 1);
    let Some(sig) = grammar::signature(&name) else {
        return Err(c.error_at(name_span.0, name_span.1, format!("unknown command `\\{name}`")));
    };

    c.skip_spaces();
    let mut opts = OptionMap::new();
    let mut opt_span = name_span;
    if c.peek() == Some('[') {
        let open = c.col();
        c.bump();
        let Some(raw) = c.take_until(']') else {
            let mut end = Cursor::new(c.source(), c.line());
            end.advance(c.source().chars().count());
            return Err(end.expected("']'"));
        };
        c.bump();
        opts = options_at(&raw, c.line(), open + 1)?;
        opt_span = (open, c.col() - open);
    }

    let mut args = Vec::with_capacity(sig.len());
    let mut spans = Vec::with_capacity(sig.len());
    for kind in sig {
        c.skip_spaces();
        let col = c.col();
        let arg = match kind {
            ArgKind::Paren1 => Arg::Numbers(paren_numbers(c, 1)?),
            ArgKind::Paren2 => Arg::Numbers(paren_numbers(c, 2)?),
            ArgKind::Paren3 => Arg::Numbers(paren_numbers(c, 3)?),
            ArgKind::Number => Arg::Numbers(vec![braced_number(c)?]),
            ArgKind::Points => Arg::Points(points_group(c)?),
            ArgKind::Paint => Arg::Paint(paint_group(c)?),
            ArgKind::Text => Arg::Text(c.balanced_group()?),
        };
        spans.push((col, c.col() - col));
        args.push(arg);
    }
    let whole = (start, c.col() - start);

    let item = grammar::build(&name, &args, opts).map_err(|(idx, msg)| {
        let (col, len) = match idx {
            Some(i) => spans[i],
            None => opt_span,
        };
        c.error_at(col, len, msg)
    })?;
    if let Item::Draw { primitive, options } = &item {
        let model_err = |e: ModelError| {
            let (col, len) = match e {
                ModelError::Invalid { .. } => whole,
                _ => opt_span,
            };
            c.error_at(col, len, e.to_string())
        };
        primitive.validate().map_err(model_err)?;
        resolve_options(primitive.kind(), options, &DrawState::default()).map_err(model_err)?;
    }
    Ok(item)
}

/// Parses a single command line such as `\Gluon(0,50)(60,50){5}{4}`.
pub fn parse_command(line: &str) -> Result<Item, ParseError> {
    let mut c = Cursor::new(line, 1);
    c.skip_trivia();
    let item = command(&mut c)?;
    c.skip_trivia();
    if !c.at_end() {
        return Err(c.error_at(
            c.col(),
            line.chars().count() + 1 - c.col(),
            "unexpected text after command",
        ));
    }
    Ok(item)
}

/// Parses the inside of an option bracket: `key` or `key=value` entries
/// separated by commas. Values are decimal numbers or words. The last of
/// duplicate keys wins.
pub fn parse_option_list(raw: &str) -> Result<OptionMap, ParseError> {
    options_at(raw, 1, 1)
}

fn options_at(raw: &str, line: usize, col0: usize) -> Result<OptionMap, ParseError> {
    let mut map = OptionMap::new();
    let mut offset = 0usize;
    for entry in raw.split(',') {
        let entry_col = col0 + offset;
        offset += entry.chars().count() + 1;
        let lead = entry.chars().take_while(|c| c.is_whitespace()).count();
        let trimmed = entry.trim();
        if trimmed.is_empty() {
            continue;
        }
        let err = |message: String| ParseError {
            span: SourceSpan {
                line,
                column: entry_col + lead,
                length: trimmed.chars().count(),
            },
            message,
            expected: None,
        };
        let (key, value) = match trimmed.split_once('=') {
            None => (trimmed, None),
            Some((k, v)) => (k.trim(), Some(v.trim())),
        };
        if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphabetic()) {
            return Err(err(format!("bad option name `{key}`")));
        }
        let value = match value {
            None => OptionValue::Flag,
            Some("") => return Err(err(format!("bad value for option `{key}`: missing value"))),
            Some(v) => {
                if let Some(n) = parse_decimal(v) {
                    OptionValue::Number(n)
                } else if v.starts_with(|c: char| c.is_ascii_alphabetic())
                    && v.chars().all(|c| c.is_ascii_alphanumeric())
                {
                    OptionValue::Word(v.to_string())
                } else {
                    return Err(err(format!("bad value `{v}` for option `{key}`")));
                }
            }
        };
        map.insert(key.to_string(), value);
    }
    Ok(map)
}
