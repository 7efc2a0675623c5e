//! The `.ax1` → `.ax2` helper pipeline.
//!
//! An `.ax1` line is `id ; xscale ; yscale ; command`. Each entry is
//! realized on its own and written to `.ax2` as
//! `id ; llx lly urx ury ; payload`, where the box is in bp and the payload
//! is the entry's PDF content-stream operators on one line.

use std::collections::HashSet;
use std::fmt::Write;

use thiserror::Error;

use crate::backends::{drawable_ops, format_coord, pt_to_bp};
use crate::geom::Point;
use crate::model::{Canvas, Diagram};
use crate::parser::{parse_command, ParseError};
use crate::stroker::{realize_diagram, Drawable, RealizeError};

#[derive(Debug, Clone, PartialEq)]
pub struct Ax1Entry {
    pub id: u64,
    pub xscale: f64,
    pub yscale: f64,
    pub command: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ax2Entry {
    pub id: u64,
    /// `(llx, lly, urx, ury)` in bp.
    pub bbox: (f64, f64, f64, f64),
    pub payload: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CompatError {
    #[error("line {line}: malformed entry, expected `id;xscale;yscale;command`")]
    Ax1Format { line: usize },
    #[error("line {line}: duplicate id {id}")]
    DuplicateId { line: usize, id: u64 },
    #[error("entry {id}: {source}")]
    Parse {
        id: u64,
        #[source]
        source: ParseError,
    },
    #[error("entry {id}: {source}")]
    Realize {
        id: u64,
        #[source]
        source: RealizeError,
    },
}

/// Reads the entries of an `.ax1` file in order. Blank lines and lines
/// starting with `%` are skipped.
pub fn read_ax1(src: &str) -> Result<Vec<Ax1Entry>, CompatError> {
    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('%') {
            continue;
        }
        let bad = || CompatError::Ax1Format { line };
        let fields: Vec<&str> = text.splitn(4, ';').map(str::trim).collect();
        let [id, xs, ys, command] = fields[..] else {
            return Err(bad());
        };
        let id: u64 = id.parse().ok().filter(|&v| v > 0).ok_or_else(bad)?;
        let scale = |s: &str| s.parse::<f64>().ok().filter(|v| *v > 0.0 && v.is_finite());
        let (Some(xscale), Some(yscale)) = (scale(xs), scale(ys)) else {
            return Err(bad());
        };
        if command.is_empty() {
            return Err(bad());
        }
        if !seen.insert(id) {
            return Err(CompatError::DuplicateId { line, id });
        }
        entries.push(Ax1Entry {
            id,
            xscale,
            yscale,
            command: command.to_string(),
        });
    }
    Ok(entries)
}

fn extend_box(bbox: &mut Option<(f64, f64, f64, f64)>, p: Point) {
    let b = bbox.get_or_insert((p.x, p.y, p.x, p.y));
    b.0 = b.0.min(p.x);
    b.1 = b.1.min(p.y);
    b.2 = b.2.max(p.x);
    b.3 = b.3.max(p.y);
}

/// Computes the graphics for one entry. The box covers the geometry only,
/// not the stroke width.
pub fn process_entry(entry: &Ax1Entry, tol: f64) -> Result<Ax2Entry, CompatError> {
    let id = entry.id;
    let item = parse_command(&entry.command).map_err(|source| CompatError::Parse { id, source })?;
    let mut diagram = Diagram::new(Canvas::new(1.0, 1.0));
    diagram.items.push(item);
    let realized =
        realize_diagram(&diagram, tol).map_err(|source| CompatError::Realize { id, source })?;
    let (xs, ys) = (entry.xscale, entry.yscale);
    let mut bbox = None;
    let mut ops = Vec::new();
    for dr in realized.iter().flat_map(|r| &r.drawables) {
        let scaled = dr.transformed(|p| Point::new(p.x * xs, p.y * ys), 1.0);
        match &scaled {
            Drawable::Stroke { pl, .. } => pl.points().iter().for_each(|p| extend_box(&mut bbox, *p)),
            Drawable::Fill { boundary, .. } => {
                boundary.points().iter().for_each(|p| extend_box(&mut bbox, *p))
            }
            Drawable::Text { anchor, .. } => extend_box(&mut bbox, *anchor),
        }
        ops.extend(drawable_ops(&scaled, Point::ZERO));
    }
    let (a, b, c, d) = bbox.unwrap_or_default();
    Ok(Ax2Entry {
        id,
        bbox: (pt_to_bp(a), pt_to_bp(b), pt_to_bp(c), pt_to_bp(d)),
        payload: ops.join(" "),
    })
}

/// Formats `.ax2` records, one per line.
pub fn write_ax2(entries: &[Ax2Entry]) -> String {
    let mut out = String::new();
    for e in entries {
        let (a, b, c, d) = e.bbox;
        let _ = writeln!(
            out,
            "{} ; {} {} {} {} ; {}",
            e.id,
            format_coord(a),
            format_coord(b),
            format_coord(c),
            format_coord(d),
            e.payload
        );
    }
    out
}

/// Runs the whole pipeline on the text of an `.ax1` file.
pub fn process_ax1(src: &str, tol: f64) -> Result<String, CompatError> {
    let entries = read_ax1(src)?;
    let records = entries
        .iter()
        .map(|e| process_entry(e, tol))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(write_ax2(&records))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_entry() {
        let e = read_ax1("1;1;1;\\Line(0,0)(10,0)").unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].id, 1);
    }

    #[test]
    fn duplicate_and_malformed() {
        assert_eq!(
            read_ax1("1;1;1;\\Line(0,0)(1,0)\n1;1;1;\\Line(0,0)(2,0)"),
            Err(CompatError::DuplicateId { line: 2, id: 1 })
        );
        assert_eq!(read_ax1("% c\n1;1;\\Line"), Err(CompatError::Ax1Format { line: 2 }));
        assert_eq!(read_ax1("x;1;1;\\Line(0,0)(1,0)"), Err(CompatError::Ax1Format { line: 1 }));
    }

    #[test]
    fn one_inch_line_box() {
        let e = read_ax1("3;1;1;\\Line(0,0)(72.27,0)").unwrap();
        let r = process_entry(&e[0], 0.05).unwrap();
        assert!((r.bbox.2 - 72.0).abs() < 1e-6);
    }

    #[test]
    fn errors_name_the_entry() {
        let err = process_ax1("42;1;1;\\Line(0,0)(1", 0.05).unwrap_err();
        assert!(err.to_string().contains("42"));
    }
}
