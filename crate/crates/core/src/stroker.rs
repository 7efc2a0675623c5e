//! Lowering of styled primitives into strokes, fills and text runs.

use thiserror::Error;

use crate::geom::{
    dash_split, flatten_arc, flatten_bezier, flatten_circle, flatten_ellipse, frame_at, offset,
    wiggly_path, Carrier, Frame, GeomError, Point, Polyline,
};
use crate::model::{
    color_lookup, text_frame_size, ArrowSpec, BoxAnchor, Color, Diagram, LineStyle, ModelError,
    Primitive, PrimitiveKind, StyledPrimitive, LINE_HEIGHT,
};

/// Sides of the polygon standing in for a vertex dot.
pub const VERTEX_SIDES: usize = 64;
/// Distance from the visual middle of a text row down to its baseline, as a
/// fraction of the font size.
pub const BASELINE_DROP: f64 = 0.35;

/// Backend-neutral output of the stroker.
#[derive(Debug, Clone, PartialEq)]
pub enum Drawable {
    Stroke {
        pl: Polyline,
        width: f64,
        color: Color,
    },
    /// Closed boundary (first point equals last).
    Fill { boundary: Polyline, color: Color },
    /// Text centered horizontally on `anchor`, which lies on the baseline.
    Text {
        anchor: Point,
        content: String,
        size: f64,
        color: Color,
    },
}

impl Drawable {
    /// Applies `f` to every coordinate and multiplies widths and sizes by
    /// `s`.
    pub fn transformed(&self, f: impl Fn(Point) -> Point, s: f64) -> Drawable {
        match self {
            Drawable::Stroke { pl, width, color } => Drawable::Stroke {
                pl: pl.map(&f),
                width: width * s,
                color: *color,
            },
            Drawable::Fill { boundary, color } => Drawable::Fill {
                boundary: boundary.map(&f),
                color: *color,
            },
            Drawable::Text {
                anchor,
                content,
                size,
                color,
            } => Drawable::Text {
                anchor: f(*anchor),
                content: content.clone(),
                size: size * s,
                color: *color,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RealizeError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{kind}: {source}")]
    Geom {
        kind: &'static str,
        #[source]
        source: GeomError,
    },
}

/// The drawables of one primitive, tagged with its kind.
#[derive(Debug, Clone, PartialEq)]
pub struct Realized {
    pub kind: PrimitiveKind,
    pub drawables: Vec<Drawable>,
}

/// Arrowhead polygon for a frame: tip, rear corner, notch, rear corner.
///
/// The head is centered on `f.at`; a flipped head points against the
/// tangent.
pub fn arrowhead(f: &Frame, spec: &ArrowSpec, color: Color) -> Drawable {
    let len = spec.length * spec.scale;
    let half_w = spec.width * spec.scale / 2.0;
    let t = if spec.flipped { -f.tangent } else { f.tangent };
    let n = f.normal;
    let tip = f.at + t * (len / 2.0);
    let rear = tip - t * len;
    let notch = tip - t * (len * (1.0 - spec.inset));
    let boundary = Polyline::new(vec![tip, rear + n * half_w, notch, rear - n * half_w, tip]);
    Drawable::Fill { boundary, color }
}

fn closed(mut pts: Vec<Point>) -> Polyline {
    if let Some(&first) = pts.first() {
        pts.push(first);
    }
    Polyline::new(pts)
}

fn rectangle(center: Point, w: f64, h: f64, rotation: f64) -> Polyline {
    let corners = [(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)];
    closed(
        corners
            .iter()
            .map(|&(sx, sy)| {
                let p = center + Point::new(sx * w / 2.0, sy * h / 2.0);
                if rotation == 0.0 {
                    p
                } else {
                    p.rotate_about(center, rotation)
                }
            })
            .collect(),
    )
}

fn disc(center: Point, radius: f64) -> Polyline {
    let step = std::f64::consts::TAU / VERTEX_SIDES as f64;
    closed(
        (0..VERTEX_SIDES)
            .map(|i| {
                let a = step * i as f64;
                center + Point::new(radius * a.cos(), radius * a.sin())
            })
            .collect(),
    )
}

/// Doubling and dashing applied to one stroked path.
fn line_strokes(base: &Polyline, style: &LineStyle, out: &mut Vec<Drawable>) {
    let strands = match style.double {
        Some(sep) => vec![offset(base, sep / 2.0), offset(base, -sep / 2.0)],
        None => vec![base.clone()],
    };
    for strand in strands {
        let pieces = match style.dash {
            Some(dsize) => dash_split(&strand, dsize),
            None => vec![strand],
        };
        out.extend(pieces.into_iter().map(|pl| Drawable::Stroke {
            pl,
            width: style.width,
            color: style.color,
        }));
    }
}

fn text_rows(center: Point, lines: &[String], size: f64, color: Color, out: &mut Vec<Drawable>) {
    let lh = LINE_HEIGHT * size;
    let top = center.y + (lines.len() as f64 - 1.0) / 2.0 * lh;
    for (i, line) in lines.iter().enumerate() {
        out.push(Drawable::Text {
            anchor: Point::new(center.x, top - i as f64 * lh - BASELINE_DROP * size),
            content: line.clone(),
            size,
            color,
        });
    }
}

/// Turns one primitive into drawables.
///
/// Line-like primitives (lines, arcs, Béziers, wiggly lines) are flattened,
/// doubled, dashed and stroked, then get their arrowheads. Arrows anchor on
/// the undashed base curve; for wiggly lines that is the carrier. Closed
/// shapes emit their fill before their outline.
pub fn realize(p: &Primitive, style: &LineStyle, tol: f64) -> Result<Vec<Drawable>, RealizeError> {
    let kind = p.kind().name();
    let geom = |source: GeomError| RealizeError::Geom { kind, source };
    let mut out = Vec::new();
    let fill = |pl: Polyline, color: Color| Drawable::Fill {
        boundary: pl,
        color,
    };

    let line_like = |base: Polyline, anchor: Polyline, out: &mut Vec<Drawable>| {
        line_strokes(&base, style, out);
        for spec in &style.arrows {
            let f = frame_at(&anchor, spec.pos).map_err(geom)?;
            out.push(arrowhead(&f, spec, style.color));
        }
        Ok::<(), RealizeError>(())
    };

    match p {
        Primitive::Line { from, to } => {
            let base = Polyline::new(vec![*from, *to]);
            line_like(base.clone(), base, &mut out)?;
        }
        Primitive::Arc {
            center,
            radius,
            theta1,
            theta2,
        } => {
            let base = flatten_arc(*center, *radius, *theta1, *theta2, tol).map_err(geom)?;
            line_like(base.clone(), base, &mut out)?;
        }
        Primitive::Bezier { points } => {
            let [a, b, c, d] = *points;
            let base = flatten_bezier(a, b, c, d, tol).map_err(geom)?;
            line_like(base.clone(), base, &mut out)?;
        }
        Primitive::Wiggly { carrier, spec } => {
            let base = wiggly_path(carrier, spec, tol).map_err(geom)?;
            let anchor = if style.arrows.is_empty() {
                Polyline::new(Vec::new())
            } else {
                match carrier {
                    Carrier::Segment { from, to } => Polyline::new(vec![*from, *to]),
                    other => other.flatten(tol).map_err(geom)?,
                }
            };
            line_like(base, anchor, &mut out)?;
        }
        Primitive::Vertex { center, radius } => {
            out.push(fill(disc(*center, *radius), style.color));
        }
        Primitive::CircleOutline { center, radius } => {
            let pl = flatten_circle(*center, *radius, tol).map_err(geom)?;
            line_strokes(&pl, style, &mut out);
        }
        Primitive::FilledCircle {
            center,
            radius,
            fill: paint,
        } => {
            let pl = flatten_circle(*center, *radius, tol).map_err(geom)?;
            out.push(fill(pl.clone(), paint.resolve()?));
            line_strokes(&pl, style, &mut out);
        }
        Primitive::Box {
            anchor,
            width,
            height,
            rotation,
            fill: paint,
        } => {
            let center = match *anchor {
                BoxAnchor::Corner(c) => c + Point::new(width / 2.0, height / 2.0),
                BoxAnchor::Center(c) => c,
            };
            let pl = rectangle(center, *width, *height, *rotation);
            if let Some(paint) = paint {
                out.push(fill(pl.clone(), paint.resolve()?));
            }
            line_strokes(&pl, style, &mut out);
        }
        Primitive::Polygon {
            points,
            fill: paint,
        } => {
            let pl = closed(points.clone());
            if let Some(paint) = paint {
                out.push(fill(pl.clone(), paint.resolve()?));
            }
            line_strokes(&pl, style, &mut out);
        }
        Primitive::Oval {
            center,
            rx,
            ry,
            rotation,
            fill: paint,
        } => {
            let pl = flatten_ellipse(*center, *rx, *ry, *rotation, tol).map_err(geom)?;
            if let Some(paint) = paint {
                out.push(fill(pl.clone(), paint.resolve()?));
            }
            line_strokes(&pl, style, &mut out);
        }
        Primitive::Grid {
            origin,
            cell_width,
            cell_height,
            cols,
            rows,
        } => {
            let w = cell_width * *cols as f64;
            let h = cell_height * *rows as f64;
            let mut stroke = |a: Point, b: Point| {
                out.push(Drawable::Stroke {
                    pl: Polyline::new(vec![a, b]),
                    width: style.width,
                    color: style.color,
                })
            };
            for i in 0..=*cols {
                let x = origin.x + cell_width * i as f64;
                stroke(Point::new(x, origin.y), Point::new(x, origin.y + h));
            }
            for j in 0..=*rows {
                let y = origin.y + cell_height * j as f64;
                stroke(Point::new(origin.x, y), Point::new(origin.x + w, y));
            }
        }
        Primitive::TextLabel {
            anchor,
            content,
            size,
        } => text_rows(*anchor, std::slice::from_ref(content), *size, style.color, &mut out),
        Primitive::BoxedText {
            center,
            lines,
            size,
            fill: paint,
        } => {
            let (w, h) = text_frame_size(lines, *size);
            let pl = rectangle(*center, w, h, 0.0);
            let background = match paint {
                Some(paint) => paint.resolve()?,
                None => color_lookup("White")?,
            };
            out.push(fill(pl.clone(), background));
            line_strokes(&pl, style, &mut out);
            text_rows(*center, lines, *size, style.color, &mut out);
        }
        Primitive::OvalText {
            center,
            lines,
            size,
            frame,
            fill: paint,
        } => {
            let (w, h) = text_frame_size(lines, *size);
            let (rx, ry) = (w / std::f64::consts::SQRT_2, h / std::f64::consts::SQRT_2);
            let pl = flatten_ellipse(*center, rx, ry, 0.0, tol).map_err(geom)?;
            let frame_color = frame.resolve()?;
            out.push(fill(pl.clone(), paint.resolve()?));
            let framed = LineStyle {
                color: frame_color,
                ..style.clone()
            };
            line_strokes(&pl, &framed, &mut out);
            text_rows(*center, lines, *size, frame_color, &mut out);
        }
    }
    Ok(out)
}

/// Resolves a diagram and realizes every primitive, in source order.
/// Coordinates stay in diagram units.
pub fn realize_diagram(d: &Diagram, tol: f64) -> Result<Vec<Realized>, RealizeError> {
    d.canvas.validate()?;
    d.resolve()?
        .iter()
        .map(|StyledPrimitive { primitive, style }| {
            Ok(Realized {
                kind: primitive.kind(),
                drawables: realize(primitive, style, tol)?,
            })
        })
        .collect()
}
