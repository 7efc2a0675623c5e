use std::fmt::Write;

use super::{format_coord as num, page_content, pt_to_bp};
use crate::geom::Point;
use crate::model::{Color, Diagram, CHAR_WIDTH};
use crate::stroker::{Drawable, RealizeError};

/// Graphics state set once at the top of every content stream: round caps
/// and joins.
pub const CONTENT_PRELUDE: &str = "1 J 1 j";

/// One numbered object of the output file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdfObject {
    pub id: u32,
    /// Byte position of `N 0 obj`.
    pub offset: usize,
    pub payload: Vec<u8>,
}

fn bp(v: f64) -> String {
    num(pt_to_bp(v))
}

fn color_op(c: Color, op: &str) -> String {
    format!("{} {} {} {op}", num(c.r), num(c.g), num(c.b))
}

fn pdf_string(s: &str) -> String {
    let mut out = String::from("(");
    for c in s.chars() {
        match c {
            '\\' | '(' | ')' => {
                out.push('\\');
                out.push(c);
            }
            ' '..='~' => out.push(c),
            _ => out.push('?'),
        }
    }
    out.push(')');
    out
}

/// Content-stream operators for one drawable, one operator per entry.
/// Coordinates are in pt relative to `origin` and converted to bp.
pub fn drawable_ops(d: &Drawable, origin: Point) -> Vec<String> {
    let xy = |p: &Point| format!("{} {}", bp(p.x - origin.x), bp(p.y - origin.y));
    let mut ops = Vec::new();
    match d {
        Drawable::Stroke { pl, width, color } => {
            ops.push(color_op(*color, "RG"));
            ops.push(format!("{} w", bp(*width)));
            for (i, p) in pl.points().iter().enumerate() {
                ops.push(format!("{} {}", xy(p), if i == 0 { "m" } else { "l" }));
            }
            ops.push("S".into());
        }
        Drawable::Fill { boundary, color } => {
            ops.push(color_op(*color, "rg"));
            let pts = boundary.points();
            let open = &pts[..pts.len().saturating_sub(1)];
            for (i, p) in open.iter().enumerate() {
                ops.push(format!("{} {}", xy(p), if i == 0 { "m" } else { "l" }));
            }
            ops.push("h".into());
            ops.push("f".into());
        }
        Drawable::Text {
            anchor,
            content,
            size,
            color,
        } => {
            let width = content.chars().count() as f64 * CHAR_WIDTH * size;
            let start = Point::new(anchor.x - width / 2.0, anchor.y);
            ops.push(color_op(*color, "rg"));
            ops.push("BT".into());
            ops.push(format!("/F1 {} Tf", bp(*size)));
            ops.push(format!("{} Td", xy(&start)));
            ops.push(format!("{} Tj", pdf_string(content)));
            ops.push("ET".into());
        }
    }
    ops
}

struct Writer {
    buf: Vec<u8>,
    objects: Vec<PdfObject>,
}

impl Writer {
    fn object(&mut self, body: &[u8]) {
        let id = self.objects.len() as u32 + 1;
        let offset = self.buf.len();
        self.buf.extend_from_slice(format!("{id} 0 obj\n").as_bytes());
        self.buf.extend_from_slice(body);
        self.buf.extend_from_slice(b"\nendobj\n");
        self.objects.push(PdfObject {
            id,
            offset,
            payload: body.to_vec(),
        });
    }
}

/// Renders a diagram as a single-page PDF 1.4 file with an uncompressed
/// content stream. Every coordinate is converted from pt to bp.
pub fn emit_pdf(d: &Diagram, tol: f64) -> Result<Vec<u8>, RealizeError> {
    let (content, w, h) = page_content(d, tol)?;
    let mut stream = String::from(CONTENT_PRELUDE);
    stream.push('\n');
    for realized in &content {
        for dr in &realized.drawables {
            for op in drawable_ops(dr, Point::ZERO) {
                stream.push_str(&op);
                stream.push('\n');
            }
        }
    }

    let mut wr = Writer {
        buf: b"%PDF-1.4\n%\xE2\xE3\xCF\xD3\n".to_vec(),
        objects: Vec::new(),
    };
    wr.object(b"<< /Type /Catalog /Pages 2 0 R >>");
    wr.object(b"<< /Type /Pages /Kids [3 0 R] /Count 1 >>");
    let page = format!(
        "<< /Type /Page /Parent 2 0 R /MediaBox [0 0 {} {}] /Resources << /Font << /F1 5 0 R >> >> /Contents 4 0 R >>",
        bp(w),
        bp(h)
    );
    wr.object(page.as_bytes());
    let mut body = format!("<< /Length {} >>\nstream\n", stream.len()).into_bytes();
    body.extend_from_slice(stream.as_bytes());
    body.extend_from_slice(b"\nendstream");
    wr.object(&body);
    wr.object(b"<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica >>");

    let xref_at = wr.buf.len();
    let mut tail = format!("xref\n0 {}\n0000000000 65535 f \n", wr.objects.len() + 1);
    for obj in &wr.objects {
        let _ = writeln!(tail, "{:010} 00000 n ", obj.offset);
    }
    let _ = write!(
        tail,
        "trailer\n<< /Size {} /Root 1 0 R >>\nstartxref\n{xref_at}\n%%EOF\n",
        wr.objects.len() + 1
    );
    wr.buf.extend_from_slice(tail.as_bytes());
    Ok(wr.buf)
}
