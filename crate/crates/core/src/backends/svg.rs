use std::fmt::Write;

use super::{format_coord as num, page_content};
use crate::geom::{Point, Polyline};
use crate::model::Diagram;
use crate::stroker::{Drawable, RealizeError};

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            c if (c as u32) < 0x20 && c != '\t' => out.push(' '),
            c => out.push(c),
        }
    }
    out
}

fn path_data(pl: &Polyline, height: f64, close: bool) -> String {
    let mut d = String::new();
    for (i, p) in pl.points().iter().enumerate() {
        let _ = write!(
            d,
            "{}{} {}",
            if i == 0 { "M" } else { " L" },
            num(p.x),
            num(height - p.y)
        );
    }
    if close {
        d.push_str(" Z");
    }
    d
}

/// Renders a diagram as an SVG 1.1 document. Units are pt; the y axis is
/// flipped so diagram y grows upward.
pub fn emit_svg(d: &Diagram, tol: f64) -> Result<String, RealizeError> {
    let (content, w, h) = page_content(d, tol)?;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}pt\" height=\"{h}pt\" viewBox=\"0 0 {w} {h}\">",
        w = num(w),
        h = num(h)
    );
    for realized in &content {
        let _ = writeln!(out, "<g class=\"{}\">", realized.kind.name());
        for dr in &realized.drawables {
            match dr {
                Drawable::Stroke { pl, width, color } => {
                    let _ = writeln!(
                        out,
                        "<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>",
                        path_data(pl, h, false),
                        color.to_hex(),
                        num(*width)
                    );
                }
                Drawable::Fill { boundary, color } => {
                    let _ = writeln!(
                        out,
                        "<path d=\"{}\" fill=\"{}\" stroke=\"none\"/>",
                        path_data(boundary, h, true),
                        color.to_hex()
                    );
                }
                Drawable::Text {
                    anchor,
                    content,
                    size,
                    color,
                } => {
                    let Point { x, y } = *anchor;
                    let _ = writeln!(
                        out,
                        "<text x=\"{}\" y=\"{}\" font-family=\"Helvetica\" font-size=\"{}\" text-anchor=\"middle\" fill=\"{}\">{}</text>",
                        num(x),
                        num(h - y),
                        num(*size),
                        color.to_hex(),
                        escape(content)
                    );
                }
            }
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
