//! SVG and PDF writers.

mod pdf;
mod svg;

use crate::geom::Point;
use crate::model::{bounding_box, Diagram};
use crate::stroker::{realize_diagram, RealizeError, Realized};

pub use pdf::{drawable_ops, emit_pdf, PdfObject, CONTENT_PRELUDE};
pub use svg::emit_svg;

/// TeX points to PostScript big points.
pub fn pt_to_bp(x: f64) -> f64 {
    x * 72.0 / 72.27
}

/// Output number format: at most 4 decimals, trailing zeros trimmed.
pub fn format_coord(v: f64) -> String {
    let mut s = format!("{v:.4}");
    let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
    s.truncate(trimmed);
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Realized primitives in page coordinates (pt), relative to the lower-left
/// corner of the picture box. Returns the drawables and the page size.
pub(crate) fn page_content(d: &Diagram, tol: f64) -> Result<(Vec<Realized>, f64, f64), RealizeError> {
    let realized = realize_diagram(d, tol)?;
    let (llx, lly, urx, ury) = bounding_box(d);
    let canvas = d.canvas;
    let to_page = |p: Point| canvas.to_page(p) - Point::new(llx, lly);
    let placed = realized
        .into_iter()
        .map(|r| Realized {
            kind: r.kind,
            drawables: r
                .drawables
                .iter()
                .map(|dr| dr.transformed(to_page, canvas.scale))
                .collect(),
        })
        .collect();
    Ok((placed, urx - llx, ury - lly))
}
