//! The typed scene: canvas, primitives, drawing state and colors.

mod color;
mod style;

use thiserror::Error;

use crate::geom::{Carrier, Point, WigglyKind, WigglySpec};

pub use color::{color_lookup, named_colors, Color, Paint, NAMED_COLOR_COUNT};
pub use style::{
    arrow_defaults, resolve_options, ArrowSpec, DrawState, LineStyle, OptionMap, OptionValue,
    DEFAULT_DASH_SIZE, DEFAULT_LINE_WIDTH, DEFAULT_SEPARATION, OPTION_KEYS,
};

/// Font size of text objects when none is given, in pt.
pub const DEFAULT_TEXT_SIZE: f64 = 10.0;
/// Padding between text and its frame in boxed and oval text, in pt.
pub const TEXT_PADDING: f64 = 2.0;
/// Estimated advance of one character as a fraction of the font size.
pub const CHAR_WIDTH: f64 = 0.5;
/// Baseline-to-baseline distance as a fraction of the font size.
pub const LINE_HEIGHT: f64 = 1.2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("unknown color `{name}` (did you mean {}?)", candidates.join(", "))]
    UnknownColor {
        name: String,
        candidates: Vec<String>,
    },
    #[error("unknown option `{0}`")]
    UnknownOption(String),
    #[error("bad value `{value}` for option `{key}`")]
    BadValue { key: String, value: String },
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },
}

fn invalid(what: &'static str, reason: impl Into<String>) -> ModelError {
    ModelError::Invalid {
        what,
        reason: reason.into(),
    }
}

/// The drawing area of a diagram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Canvas {
    pub width: f64,
    pub height: f64,
    /// Lower-left corner.
    pub origin: Point,
    pub scale: f64,
}

impl Canvas {
    pub fn new(width: f64, height: f64) -> Self {
        Canvas {
            width,
            height,
            origin: Point::ZERO,
            scale: 1.0,
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        let ok = |v: f64| v > 0.0 && v.is_finite();
        if !(ok(self.width) && ok(self.height)) {
            return Err(invalid("canvas", "width and height must be positive"));
        }
        if !ok(self.scale) {
            return Err(invalid("canvas", "scale must be positive"));
        }
        if !self.origin.is_finite() {
            return Err(invalid("canvas", "origin must be finite"));
        }
        Ok(())
    }

    /// Maps a diagram point to page coordinates: the picture is scaled
    /// about its origin.
    pub fn to_page(&self, p: Point) -> Point {
        self.origin + (p - self.origin) * self.scale
    }
}

/// Where a box is anchored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoxAnchor {
    /// Lower-left corner.
    Corner(Point),
    Center(Point),
}

/// One drawable object, before styling.
#[derive(Debug, Clone, PartialEq)]
pub enum Primitive {
    Line {
        from: Point,
        to: Point,
    },
    Arc {
        center: Point,
        radius: f64,
        theta1: f64,
        theta2: f64,
    },
    Bezier {
        points: [Point; 4],
    },
    Wiggly {
        carrier: Carrier,
        spec: WigglySpec,
    },
    /// Filled dot.
    Vertex {
        center: Point,
        radius: f64,
    },
    /// Circle with a transparent interior.
    CircleOutline {
        center: Point,
        radius: f64,
    },
    FilledCircle {
        center: Point,
        radius: f64,
        fill: Paint,
    },
    Box {
        anchor: BoxAnchor,
        width: f64,
        height: f64,
        /// Degrees counterclockwise about the box center.
        rotation: f64,
        fill: Option<Paint>,
    },
    Polygon {
        points: Vec<Point>,
        fill: Option<Paint>,
    },
    Oval {
        center: Point,
        rx: f64,
        ry: f64,
        rotation: f64,
        fill: Option<Paint>,
    },
    Grid {
        origin: Point,
        cell_width: f64,
        cell_height: f64,
        cols: u32,
        rows: u32,
    },
    TextLabel {
        anchor: Point,
        content: String,
        size: f64,
    },
    /// One or two rows of text in a rectangular frame.
    BoxedText {
        center: Point,
        lines: Vec<String>,
        size: f64,
        fill: Option<Paint>,
    },
    /// One or two rows of text in an elliptical frame.
    OvalText {
        center: Point,
        lines: Vec<String>,
        size: f64,
        frame: Paint,
        fill: Paint,
    },
}

/// Coarse primitive category, used for option defaults and output grouping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimitiveKind {
    Line,
    Arc,
    Bezier,
    Gluon,
    Photon,
    ZigZag,
    Vertex,
    Circle,
    Box,
    Polygon,
    Oval,
    Grid,
    Text,
}

impl PrimitiveKind {
    pub fn name(self) -> &'static str {
        match self {
            PrimitiveKind::Line => "line",
            PrimitiveKind::Arc => "arc",
            PrimitiveKind::Bezier => "bezier",
            PrimitiveKind::Gluon => "gluon",
            PrimitiveKind::Photon => "photon",
            PrimitiveKind::ZigZag => "zigzag",
            PrimitiveKind::Vertex => "vertex",
            PrimitiveKind::Circle => "circle",
            PrimitiveKind::Box => "box",
            PrimitiveKind::Polygon => "polygon",
            PrimitiveKind::Oval => "oval",
            PrimitiveKind::Grid => "grid",
            PrimitiveKind::Text => "text",
        }
    }
}

/// Width and height of the frame around `lines` of text at `size`.
pub fn text_frame_size(lines: &[String], size: f64) -> (f64, f64) {
    let longest = lines.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let w = longest as f64 * CHAR_WIDTH * size + 2.0 * TEXT_PADDING;
    let h = lines.len() as f64 * LINE_HEIGHT * size + 2.0 * TEXT_PADDING;
    (w, h)
}

impl Primitive {
    pub fn kind(&self) -> PrimitiveKind {
        match self {
            Primitive::Line { .. } => PrimitiveKind::Line,
            Primitive::Arc { .. } => PrimitiveKind::Arc,
            Primitive::Bezier { .. } => PrimitiveKind::Bezier,
            Primitive::Wiggly { spec, .. } => match spec.kind {
                WigglyKind::Gluon => PrimitiveKind::Gluon,
                WigglyKind::Photon => PrimitiveKind::Photon,
                WigglyKind::ZigZag => PrimitiveKind::ZigZag,
            },
            Primitive::Vertex { .. } => PrimitiveKind::Vertex,
            Primitive::CircleOutline { .. } | Primitive::FilledCircle { .. } => {
                PrimitiveKind::Circle
            }
            Primitive::Box { .. } => PrimitiveKind::Box,
            Primitive::Polygon { .. } => PrimitiveKind::Polygon,
            Primitive::Oval { .. } => PrimitiveKind::Oval,
            Primitive::Grid { .. } => PrimitiveKind::Grid,
            Primitive::TextLabel { .. }
            | Primitive::BoxedText { .. }
            | Primitive::OvalText { .. } => PrimitiveKind::Text,
        }
    }

    /// Checks dimensional invariants.
    pub fn validate(&self) -> Result<(), ModelError> {
        let pos = |v: f64| v > 0.0 && v.is_finite();
        let check = |ok: bool, what: &'static str, reason: &str| {
            if ok {
                Ok(())
            } else {
                Err(invalid(what, reason))
            }
        };
        match self {
            Primitive::Arc { radius, .. }
            | Primitive::Vertex { radius, .. }
            | Primitive::CircleOutline { radius, .. }
            | Primitive::FilledCircle { radius, .. } => {
                check(pos(*radius), "radius", "must be positive")
            }
            Primitive::Wiggly { spec, .. } => spec
                .validate()
                .map_err(|e| invalid("wiggly line", e.to_string())),
            Primitive::Box { width, height, .. } => {
                check(pos(*width) && pos(*height), "box", "sides must be positive")
            }
            Primitive::Polygon { points, .. } => {
                check(points.len() >= 3, "polygon", "needs at least 3 points")
            }
            Primitive::Oval { rx, ry, .. } => {
                check(pos(*rx) && pos(*ry), "oval", "radii must be positive")
            }
            Primitive::Grid {
                cell_width,
                cell_height,
                cols,
                rows,
                ..
            } => check(
                pos(*cell_width) && pos(*cell_height) && *cols >= 1 && *rows >= 1,
                "grid",
                "cells and counts must be positive",
            ),
            Primitive::TextLabel { size, .. } => check(pos(*size), "text", "size must be positive"),
            Primitive::BoxedText { lines, size, .. } | Primitive::OvalText { lines, size, .. } => {
                check(
                    pos(*size) && (1..=2).contains(&lines.len()),
                    "text",
                    "needs 1 or 2 rows and a positive size",
                )
            }
            Primitive::Line { .. } | Primitive::Bezier { .. } => Ok(()),
        }
    }

    /// Scales coordinates and lengths about the page origin. Angles, counts
    /// and font sizes are unchanged.
    pub fn scaled(&self, s: f64) -> Primitive {
        if s == 1.0 {
            return self.clone();
        }
        let sp = |p: &Point| *p * s;
        match self {
            Primitive::Line { from, to } => Primitive::Line {
                from: sp(from),
                to: sp(to),
            },
            Primitive::Arc {
                center,
                radius,
                theta1,
                theta2,
            } => Primitive::Arc {
                center: sp(center),
                radius: radius * s,
                theta1: *theta1,
                theta2: *theta2,
            },
            Primitive::Bezier { points } => Primitive::Bezier {
                points: points.map(|p| p * s),
            },
            Primitive::Wiggly { carrier, spec } => Primitive::Wiggly {
                carrier: match *carrier {
                    Carrier::Segment { from, to } => Carrier::Segment {
                        from: from * s,
                        to: to * s,
                    },
                    Carrier::Arc {
                        center,
                        radius,
                        theta1,
                        theta2,
                    } => Carrier::Arc {
                        center: center * s,
                        radius: radius * s,
                        theta1,
                        theta2,
                    },
                    Carrier::Circle {
                        center,
                        radius,
                        phase,
                    } => Carrier::Circle {
                        center: center * s,
                        radius: radius * s,
                        phase,
                    },
                },
                spec: WigglySpec {
                    amplitude: spec.amplitude * s,
                    ..*spec
                },
            },
            Primitive::Vertex { center, radius } => Primitive::Vertex {
                center: sp(center),
                radius: radius * s,
            },
            Primitive::CircleOutline { center, radius } => Primitive::CircleOutline {
                center: sp(center),
                radius: radius * s,
            },
            Primitive::FilledCircle {
                center,
                radius,
                fill,
            } => Primitive::FilledCircle {
                center: sp(center),
                radius: radius * s,
                fill: fill.clone(),
            },
            Primitive::Box {
                anchor,
                width,
                height,
                rotation,
                fill,
            } => Primitive::Box {
                anchor: match anchor {
                    BoxAnchor::Corner(p) => BoxAnchor::Corner(sp(p)),
                    BoxAnchor::Center(p) => BoxAnchor::Center(sp(p)),
                },
                width: width * s,
                height: height * s,
                rotation: *rotation,
                fill: fill.clone(),
            },
            Primitive::Polygon { points, fill } => Primitive::Polygon {
                points: points.iter().map(sp).collect(),
                fill: fill.clone(),
            },
            Primitive::Oval {
                center,
                rx,
                ry,
                rotation,
                fill,
            } => Primitive::Oval {
                center: sp(center),
                rx: rx * s,
                ry: ry * s,
                rotation: *rotation,
                fill: fill.clone(),
            },
            Primitive::Grid {
                origin,
                cell_width,
                cell_height,
                cols,
                rows,
            } => Primitive::Grid {
                origin: sp(origin),
                cell_width: cell_width * s,
                cell_height: cell_height * s,
                cols: *cols,
                rows: *rows,
            },
            Primitive::TextLabel {
                anchor,
                content,
                size,
            } => Primitive::TextLabel {
                anchor: sp(anchor),
                content: content.clone(),
                size: *size,
            },
            Primitive::BoxedText {
                center,
                lines,
                size,
                fill,
            } => Primitive::BoxedText {
                center: sp(center),
                lines: lines.clone(),
                size: *size,
                fill: fill.clone(),
            },
            Primitive::OvalText {
                center,
                lines,
                size,
                frame,
                fill,
            } => Primitive::OvalText {
                center: sp(center),
                lines: lines.clone(),
                size: *size,
                frame: frame.clone(),
                fill: fill.clone(),
            },
        }
    }
}

/// One entry of a diagram body, in source order.
#[derive(Debug, Clone, PartialEq)]
pub enum Item {
    SetColor(Paint),
    SetWidth(f64),
    SetScale(f64),
    Draw {
        primitive: Primitive,
        options: OptionMap,
    },
}

/// A primitive with its resolved style and the drawing scale applied.
#[derive(Debug, Clone, PartialEq)]
pub struct StyledPrimitive {
    pub primitive: Primitive,
    pub style: LineStyle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagram {
    pub canvas: Canvas,
    pub items: Vec<Item>,
}

impl Diagram {
    pub fn new(canvas: Canvas) -> Self {
        Diagram {
            canvas,
            items: Vec::new(),
        }
    }

    /// Walks the items in order, applying state changes to the primitives
    /// that follow them.
    pub fn resolve(&self) -> Result<Vec<StyledPrimitive>, ModelError> {
        let mut state = DrawState::default();
        let mut out = Vec::new();
        for item in &self.items {
            match item {
                Item::SetColor(paint) => state.color = paint.resolve()?,
                Item::SetWidth(w) => {
                    if !(*w > 0.0 && w.is_finite()) {
                        return Err(invalid("width", "must be positive"));
                    }
                    state.width = *w;
                }
                Item::SetScale(s) => {
                    if !(*s > 0.0 && s.is_finite()) {
                        return Err(invalid("scale", "must be positive"));
                    }
                    state.scale = *s;
                }
                Item::Draw { primitive, options } => {
                    primitive.validate()?;
                    let style = resolve_options(primitive.kind(), options, &state)?;
                    out.push(StyledPrimitive {
                        primitive: primitive.scaled(state.scale),
                        style,
                    });
                }
            }
        }
        Ok(out)
    }

    pub fn primitives(&self) -> impl Iterator<Item = &Primitive> {
        self.items.iter().filter_map(|i| match i {
            Item::Draw { primitive, .. } => Some(primitive),
            _ => None,
        })
    }
}

/// Page box `(llx, lly, urx, ury)` in pt. Content is not measured.
pub fn bounding_box(d: &Diagram) -> (f64, f64, f64, f64) {
    let c = &d.canvas;
    (
        c.origin.x,
        c.origin.y,
        c.origin.x + c.width * c.scale,
        c.origin.y + c.height * c.scale,
    )
}
