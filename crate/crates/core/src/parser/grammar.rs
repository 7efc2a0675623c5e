//! Command signatures and their lowering into model items.
//!
//! | command | arguments |
//! |---|---|
//! | `Line`, `ArrowLine`, `LongArrow` | `(x1,y1)(x2,y2)` |
//! | `DashLine`, `DashArrowLine`, `DashLongArrow` | `(x1,y1)(x2,y2){dsize}` |
//! | `DoubleLine` | `(x1,y1)(x2,y2){sep}` |
//! | `DashDoubleLine` | `(x1,y1)(x2,y2){sep}{dsize}` |
//! | `Arc`, `CArc`, `ArrowArc`, `LongArrowArc` | `(x,y)(r,theta1,theta2)` |
//! | `DashArc`, `DashCArc` | `(x,y)(r,theta1,theta2){dsize}` |
//! | `DoubleArc` | `(x,y)(r,theta1,theta2){sep}` |
//! | `Bezier` | `(x0,y0)(x1,y1)(x2,y2)(x3,y3)` |
//! | `DashBezier` | `... {dsize}` |
//! | `Gluon`, `Photon`, `ZigZag` | `(x1,y1)(x2,y2){amplitude}{count}` |
//! | `GluonArc`, `GlueArc`, `PhotonArc`, `ZigZagArc` | `(x,y)(r,theta1,theta2){amplitude}{count}` |
//! | `GluonCircle`, `PhotonCircle`, `ZigZagCircle` | `(x,y)(r,phase){amplitude}{count}` |
//! | `Vertex`, `ECirc` | `(x,y){r}` |
//! | `GCirc` | `(x,y){r}{paint}` |
//! | `EBox` / `GBox` | `(x1,y1)(x2,y2)` / `... {paint}` |
//! | `EBoxc`, `Boxc` / `GBoxc` | `(x,y)(w,h)` / `... {paint}` |
//! | `RBox` / `GRBox` | `(x,y)(w,h){angle}` / `... {paint}` |
//! | `Polygon` / `FPolygon` | `{(x,y)(x,y)...}` / `... {paint}` |
//! | `Oval` / `GOval` | `(x,y)(h,w)(angle)` / `... {paint}` |
//! | `AxoGrid` | `(x,y)(dx,dy)(nx,ny)` |
//! | `Text`, `BText` | `(x,y){text}` |
//! | `GText` | `(x,y){paint}{text}` |
//! | `CText` | `(x,y){frame}{fill}{text}` |
//! | `BTwoText` / `GTwoText` / `CTwoText` | as above with `{text1}{text2}` |
//! | `SetColor` | `{paint}` |
//! | `SetWidth`, `SetScale` | `{value}` |
//!
//! A paint is a color name, a gray level `g`, or `r,g,b`. Text commands
//! take a `size` option besides the line-style options.

use crate::geom::{Carrier, Point, WigglyKind, WigglySpec, MAX_WIGGLE_COUNT};
use crate::model::{BoxAnchor, Item, OptionMap, OptionValue, Paint, Primitive, DEFAULT_TEXT_SIZE};

/// One argument group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ArgKind {
    /// `(a)`
    Paren1,
    /// `(a,b)`
    Paren2,
    /// `(a,b,c)`
    Paren3,
    /// `{v}`
    Number,
    /// `{(x,y)(x,y)...}`
    Points,
    /// `{name}`, `{g}` or `{r,g,b}`
    Paint,
    /// `{text}`, balanced braces
    Text,
}

use ArgKind::*;

/// Argument value as parsed.
#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Arg {
    Numbers(Vec<f64>),
    Points(Vec<Point>),
    Paint(Paint),
    Text(String),
}

pub(crate) fn signature(name: &str) -> Option<&'static [ArgKind]> {
    const SEG: &[ArgKind] = &[Paren2, Paren2];
    const SEG_N: &[ArgKind] = &[Paren2, Paren2, Number];
    const SEG_NN: &[ArgKind] = &[Paren2, Paren2, Number, Number];
    const ARC: &[ArgKind] = &[Paren2, Paren3];
    const ARC_N: &[ArgKind] = &[Paren2, Paren3, Number];
    const ARC_NN: &[ArgKind] = &[Paren2, Paren3, Number, Number];
    const BEZ: &[ArgKind] = &[Paren2, Paren2, Paren2, Paren2];
    const BEZ_N: &[ArgKind] = &[Paren2, Paren2, Paren2, Paren2, Number];
    Some(match name {
        "Line" | "ArrowLine" | "LongArrow" => SEG,
        "DashLine" | "DashArrowLine" | "DashLongArrow" | "DoubleLine" => SEG_N,
        "DashDoubleLine" => SEG_NN,
        "Arc" | "CArc" | "ArrowArc" | "LongArrowArc" => ARC,
        "DashArc" | "DashCArc" | "DoubleArc" => ARC_N,
        "Bezier" => BEZ,
        "DashBezier" => BEZ_N,
        "Gluon" | "Photon" | "ZigZag" => SEG_NN,
        "GluonArc" | "GlueArc" | "PhotonArc" | "ZigZagArc" => ARC_NN,
        "GluonCircle" | "PhotonCircle" | "ZigZagCircle" => SEG_NN,
        "Vertex" | "ECirc" => &[Paren2, Number],
        "GCirc" => &[Paren2, Number, Paint],
        "EBox" | "EBoxc" | "Boxc" => SEG,
        "GBox" | "GBoxc" => &[Paren2, Paren2, Paint],
        "RBox" => &[Paren2, Paren2, Number],
        "GRBox" => &[Paren2, Paren2, Number, Paint],
        "Polygon" => &[Points],
        "FPolygon" => &[Points, Paint],
        "Oval" => &[Paren2, Paren2, Paren1],
        "GOval" => &[Paren2, Paren2, Paren1, Paint],
        "AxoGrid" => &[Paren2, Paren2, Paren2],
        "Text" | "BText" => &[Paren2, Text],
        "GText" => &[Paren2, Paint, Text],
        "CText" => &[Paren2, Paint, Paint, Text],
        "BTwoText" => &[Paren2, Text, Text],
        "GTwoText" => &[Paren2, Paint, Text, Text],
        "CTwoText" => &[Paren2, Paint, Paint, Text, Text],
        "SetColor" => &[Paint],
        "SetWidth" | "SetScale" => &[Number],
        _ => return None,
    })
}

/// Commands that accept the `size` option.
pub(crate) fn is_text_command(name: &str) -> bool {
    matches!(
        name,
        "Text" | "BText" | "GText" | "CText" | "BTwoText" | "GTwoText" | "CTwoText"
    )
}

/// Failure while lowering: the offending argument index (or `None` for the
/// whole command) and a message.
pub(crate) type BuildError = (Option<usize>, String);

struct Args<'a>(&'a [Arg]);

impl Args<'_> {
    fn nums(&self, i: usize) -> &[f64] {
        match &self.0[i] {
            Arg::Numbers(v) => v,
            _ => unreachable!("signature guarantees numbers"),
        }
    }

    fn num(&self, i: usize) -> f64 {
        self.nums(i)[0]
    }

    fn pt(&self, i: usize) -> Point {
        let v = self.nums(i);
        Point::new(v[0], v[1])
    }

    fn text(&self, i: usize) -> String {
        match &self.0[i] {
            Arg::Text(t) => t.clone(),
            _ => unreachable!("signature guarantees text"),
        }
    }

    fn paint(&self, i: usize) -> Paint {
        match &self.0[i] {
            Arg::Paint(p) => p.clone(),
            _ => unreachable!("signature guarantees a paint"),
        }
    }

    fn points(&self, i: usize) -> Vec<Point> {
        match &self.0[i] {
            Arg::Points(p) => p.clone(),
            _ => unreachable!("signature guarantees points"),
        }
    }

    fn positive(&self, i: usize, what: &str) -> Result<f64, BuildError> {
        let v = self.num(i);
        if v > 0.0 {
            Ok(v)
        } else {
            Err((Some(i), format!("{what} must be positive, got {v}")))
        }
    }

    fn count(&self, i: usize, slot: usize, what: &str) -> Result<u32, BuildError> {
        let v = self.nums(i)[slot];
        if v.fract() == 0.0 && v >= 1.0 && v <= MAX_WIGGLE_COUNT as f64 {
            Ok(v as u32)
        } else {
            Err((
                Some(i),
                format!("{what} must be a whole number in 1..={MAX_WIGGLE_COUNT}, got {v}"),
            ))
        }
    }
}

fn set_flag(opts: &mut OptionMap, key: &str) {
    opts.insert(key.to_string(), OptionValue::Flag);
}

fn set_num(opts: &mut OptionMap, key: &str, v: f64) {
    opts.insert(key.to_string(), OptionValue::Number(v));
}

fn arc_prim(a: &Args<'_>) -> Result<Primitive, BuildError> {
    let [r, theta1, theta2] = a.nums(1) else { unreachable!() };
    if *r <= 0.0 {
        return Err((Some(1), format!("radius must be positive, got {r}")));
    }
    if theta1 == theta2 {
        return Err((Some(1), "arc has zero opening angle".into()));
    }
    Ok(Primitive::Arc {
        center: a.pt(0),
        radius: *r,
        theta1: *theta1,
        theta2: *theta2,
    })
}

fn wiggly(name: &str, a: &Args<'_>) -> Result<Primitive, BuildError> {
    let kind = if name.starts_with("Glu") {
        WigglyKind::Gluon
    } else if name.starts_with("Photon") {
        WigglyKind::Photon
    } else {
        WigglyKind::ZigZag
    };
    let carrier = if name.ends_with("Arc") {
        let Primitive::Arc {
            center,
            radius,
            theta1,
            theta2,
        } = arc_prim(a)?
        else {
            unreachable!()
        };
        Carrier::Arc {
            center,
            radius,
            theta1,
            theta2,
        }
    } else if name.ends_with("Circle") {
        let [r, phase] = a.nums(1) else { unreachable!() };
        if *r <= 0.0 {
            return Err((Some(1), format!("radius must be positive, got {r}")));
        }
        Carrier::Circle {
            center: a.pt(0),
            radius: *r,
            phase: *phase,
        }
    } else {
        let (from, to) = (a.pt(0), a.pt(1));
        if from == to {
            return Err((Some(1), "line has zero length".into()));
        }
        Carrier::Segment { from, to }
    };
    let amplitude = a.positive(2, "amplitude")?;
    let count = a.count(3, 0, if kind == WigglyKind::Gluon { "windings" } else { "wiggles" })?;
    Ok(Primitive::Wiggly {
        carrier,
        spec: WigglySpec {
            kind,
            amplitude,
            count,
        },
    })
}

fn text_lines(a: &Args<'_>, first: usize, n: usize) -> Vec<String> {
    (first..first + n).map(|i| a.text(i)).collect()
}

/// Lowers a parsed command into an item, folding convenience names into
/// option flags. `opts` holds the bracket options and is extended in place.
pub(crate) fn build(name: &str, args: &[Arg], mut opts: OptionMap) -> Result<Item, BuildError> {
    let a = Args(args);
    let size = if is_text_command(name) {
        match opts.remove("size") {
            None => DEFAULT_TEXT_SIZE,
            Some(OptionValue::Number(v)) if v > 0.0 => v,
            Some(_) => return Err((None, "option `size` needs a positive number".into())),
        }
    } else {
        DEFAULT_TEXT_SIZE
    };
    let primitive = match name {
        "SetColor" => return Ok(Item::SetColor(a.paint(0))),
        "SetWidth" => return Ok(Item::SetWidth(a.positive(0, "width")?)),
        "SetScale" => return Ok(Item::SetScale(a.positive(0, "scale")?)),

        "Line" | "ArrowLine" | "LongArrow" | "DashLine" | "DashArrowLine" | "DashLongArrow"
        | "DoubleLine" | "DashDoubleLine" => {
            match name {
                "ArrowLine" => set_flag(&mut opts, "arrow"),
                "LongArrow" => {
                    set_flag(&mut opts, "arrow");
                    set_num(&mut opts, "arrowpos", 1.0);
                }
                "DashLine" => {
                    set_flag(&mut opts, "dash");
                    set_num(&mut opts, "dsize", a.positive(2, "dash size")?);
                }
                "DashArrowLine" | "DashLongArrow" => {
                    set_flag(&mut opts, "arrow");
                    if name == "DashLongArrow" {
                        set_num(&mut opts, "arrowpos", 1.0);
                    }
                    set_flag(&mut opts, "dash");
                    set_num(&mut opts, "dsize", a.positive(2, "dash size")?);
                }
                "DoubleLine" => {
                    set_flag(&mut opts, "double");
                    set_num(&mut opts, "sep", a.positive(2, "separation")?);
                }
                "DashDoubleLine" => {
                    set_flag(&mut opts, "double");
                    set_num(&mut opts, "sep", a.positive(2, "separation")?);
                    set_flag(&mut opts, "dash");
                    set_num(&mut opts, "dsize", a.positive(3, "dash size")?);
                }
                _ => {}
            }
            Primitive::Line {
                from: a.pt(0),
                to: a.pt(1),
            }
        }

        "Arc" | "CArc" | "ArrowArc" | "LongArrowArc" | "DashArc" | "DashCArc" | "DoubleArc" => {
            match name {
                "ArrowArc" => set_flag(&mut opts, "arrow"),
                "LongArrowArc" => {
                    set_flag(&mut opts, "arrow");
                    set_num(&mut opts, "arrowpos", 1.0);
                }
                "DashArc" | "DashCArc" => {
                    set_flag(&mut opts, "dash");
                    set_num(&mut opts, "dsize", a.positive(2, "dash size")?);
                }
                "DoubleArc" => {
                    set_flag(&mut opts, "double");
                    set_num(&mut opts, "sep", a.positive(2, "separation")?);
                }
                _ => {}
            }
            arc_prim(&a)?
        }

        "Bezier" | "DashBezier" => {
            if name == "DashBezier" {
                set_flag(&mut opts, "dash");
                set_num(&mut opts, "dsize", a.positive(4, "dash size")?);
            }
            Primitive::Bezier {
                points: [a.pt(0), a.pt(1), a.pt(2), a.pt(3)],
            }
        }

        "Gluon" | "Photon" | "ZigZag" | "GluonArc" | "GlueArc" | "PhotonArc" | "ZigZagArc"
        | "GluonCircle" | "PhotonCircle" | "ZigZagCircle" => wiggly(name, &a)?,

        "Vertex" => Primitive::Vertex {
            center: a.pt(0),
            radius: a.positive(1, "radius")?,
        },
        "ECirc" => Primitive::CircleOutline {
            center: a.pt(0),
            radius: a.positive(1, "radius")?,
        },
        "GCirc" => Primitive::FilledCircle {
            center: a.pt(0),
            radius: a.positive(1, "radius")?,
            fill: a.paint(2),
        },

        "EBox" | "GBox" => {
            let (p, q) = (a.pt(0), a.pt(1));
            let (w, h) = ((q.x - p.x).abs(), (q.y - p.y).abs());
            if w <= 0.0 || h <= 0.0 {
                return Err((Some(1), "box corners must differ in both coordinates".into()));
            }
            Primitive::Box {
                anchor: BoxAnchor::Corner(Point::new(p.x.min(q.x), p.y.min(q.y))),
                width: w,
                height: h,
                rotation: 0.0,
                fill: (name == "GBox").then(|| a.paint(2)),
            }
        }
        "EBoxc" | "Boxc" | "GBoxc" | "RBox" | "GRBox" => {
            let [w, h] = a.nums(1) else { unreachable!() };
            if *w <= 0.0 || *h <= 0.0 {
                return Err((Some(1), "box sides must be positive".into()));
            }
            let rotated = name.ends_with("RBox");
            Primitive::Box {
                anchor: BoxAnchor::Center(a.pt(0)),
                width: *w,
                height: *h,
                rotation: if rotated { a.num(2) } else { 0.0 },
                fill: match name {
                    "GBoxc" => Some(a.paint(2)),
                    "GRBox" => Some(a.paint(3)),
                    _ => None,
                },
            }
        }

        "Polygon" | "FPolygon" => {
            let points = a.points(0);
            if points.len() < 3 {
                return Err((Some(0), "a polygon needs at least 3 points".into()));
            }
            Primitive::Polygon {
                points,
                fill: (name == "FPolygon").then(|| a.paint(1)),
            }
        }

        "Oval" | "GOval" => {
            let [h, w] = a.nums(1) else { unreachable!() };
            if *h <= 0.0 || *w <= 0.0 {
                return Err((Some(1), "oval radii must be positive".into()));
            }
            Primitive::Oval {
                center: a.pt(0),
                rx: *w,
                ry: *h,
                rotation: a.num(2),
                fill: (name == "GOval").then(|| a.paint(3)),
            }
        }

        "AxoGrid" => {
            let [dx, dy] = a.nums(1) else { unreachable!() };
            if *dx <= 0.0 || *dy <= 0.0 {
                return Err((Some(1), "grid cells must be positive".into()));
            }
            Primitive::Grid {
                origin: a.pt(0),
                cell_width: *dx,
                cell_height: *dy,
                cols: a.count(2, 0, "columns")?,
                rows: a.count(2, 1, "rows")?,
            }
        }

        "Text" => Primitive::TextLabel {
            anchor: a.pt(0),
            content: a.text(1),
            size,
        },
        "BText" | "BTwoText" => Primitive::BoxedText {
            center: a.pt(0),
            lines: text_lines(&a, 1, if name == "BText" { 1 } else { 2 }),
            size,
            fill: None,
        },
        "GText" | "GTwoText" => Primitive::BoxedText {
            center: a.pt(0),
            lines: text_lines(&a, 2, if name == "GText" { 1 } else { 2 }),
            size,
            fill: Some(a.paint(1)),
        },
        "CText" | "CTwoText" => Primitive::OvalText {
            center: a.pt(0),
            lines: text_lines(&a, 3, if name == "CText" { 1 } else { 2 }),
            size,
            frame: a.paint(1),
            fill: a.paint(2),
        },
        other => return Err((None, format!("unknown command `\\{other}`"))),
    };
    Ok(Item::Draw {
        primitive,
        options: opts,
    })
}
