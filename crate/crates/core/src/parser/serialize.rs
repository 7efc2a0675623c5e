use std::fmt::Write;

use crate::geom::{Carrier, Point, WigglyKind};
use crate::model::{BoxAnchor, Diagram, Item, OptionMap, OptionValue, Primitive, DEFAULT_TEXT_SIZE};

/// Formats a number with at most 6 significant digits, trailing zeros
/// trimmed and never in exponent notation.
pub fn format_number(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

fn pt(p: Point) -> String {
    format!("({},{})", format_number(p.x), format_number(p.y))
}

fn nums(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format_number(*v)).collect();
    format!("({})", parts.join(","))
}

fn braced(v: f64) -> String {
    format!("{{{}}}", format_number(v))
}

fn options(map: &OptionMap) -> String {
    if map.is_empty() {
        return String::new();
    }
    let parts: Vec<String> = map
        .iter()
        .map(|(k, v)| match v {
            OptionValue::Flag => k.clone(),
            OptionValue::Number(n) => format!("{k}={}", format_number(*n)),
            OptionValue::Word(w) => format!("{k}={w}"),
        })
        .collect();
    format!("[{}]", parts.join(","))
}

fn texts(lines: &[String]) -> String {
    lines.iter().map(|l| format!("{{{l}}}")).collect()
}

/// Command name and argument text of a primitive, plus the text size if
/// it differs from the default.
fn primitive_source(p: &Primitive) -> (String, String, Option<f64>) {
    let with_size = |size: f64| (size != DEFAULT_TEXT_SIZE).then_some(size);
    let (name, args, size): (&str, String, Option<f64>) = match p {
        Primitive::Line { from, to } => ("Line", pt(*from) + &pt(*to), None),
        Primitive::Arc {
            center,
            radius,
            theta1,
            theta2,
        } => ("Arc", pt(*center) + &nums(&[*radius, *theta1, *theta2]), None),
        Primitive::Bezier { points } => ("Bezier", points.iter().map(|q| pt(*q)).collect(), None),
        Primitive::Wiggly { carrier, spec } => {
            let base = match spec.kind {
                WigglyKind::Gluon => "Gluon",
                WigglyKind::Photon => "Photon",
                WigglyKind::ZigZag => "ZigZag",
            };
            let (suffix, geometry) = match carrier {
                Carrier::Segment { from, to } => ("", pt(*from) + &pt(*to)),
                Carrier::Arc {
                    center,
                    radius,
                    theta1,
                    theta2,
                } => ("Arc", pt(*center) + &nums(&[*radius, *theta1, *theta2])),
                Carrier::Circle {
                    center,
                    radius,
                    phase,
                } => ("Circle", pt(*center) + &nums(&[*radius, *phase])),
            };
            let name = format!("{base}{suffix}");
            let args = format!(
                "{geometry}{}{{{}}}",
                braced(spec.amplitude),
                spec.count
            );
            return (name, args, None);
        }
        Primitive::Vertex { center, radius } => ("Vertex", pt(*center) + &braced(*radius), None),
        Primitive::CircleOutline { center, radius } => {
            ("ECirc", pt(*center) + &braced(*radius), None)
        }
        Primitive::FilledCircle {
            center,
            radius,
            fill,
        } => (
            "GCirc",
            format!("{}{}{{{fill}}}", pt(*center), braced(*radius)),
            None,
        ),
        Primitive::Box {
            anchor,
            width,
            height,
            rotation,
            fill,
        } => {
            let center = match *anchor {
                BoxAnchor::Corner(c) if *rotation == 0.0 => {
                    let far = c + Point::new(*width, *height);
                    let args = pt(c) + &pt(far);
                    return match fill {
                        None => ("EBox".into(), args, None),
                        Some(f) => ("GBox".into(), format!("{args}{{{f}}}"), None),
                    };
                }
                BoxAnchor::Corner(c) => c + Point::new(width / 2.0, height / 2.0),
                BoxAnchor::Center(c) => c,
            };
            let base = pt(center) + &nums(&[*width, *height]);
            match (fill, *rotation == 0.0) {
                (None, true) => ("EBoxc", base, None),
                (Some(f), true) => ("GBoxc", format!("{base}{{{f}}}"), None),
                (None, false) => ("RBox", base + &braced(*rotation), None),
                (Some(f), false) => ("GRBox", format!("{base}{}{{{f}}}", braced(*rotation)), None),
            }
        }
        Primitive::Polygon { points, fill } => {
            let list: String = points.iter().map(|q| pt(*q)).collect();
            match fill {
                None => ("Polygon", format!("{{{list}}}"), None),
                Some(f) => ("FPolygon", format!("{{{list}}}{{{f}}}"), None),
            }
        }
        Primitive::Oval {
            center,
            rx,
            ry,
            rotation,
            fill,
        } => {
            let base = pt(*center) + &nums(&[*ry, *rx]) + &nums(&[*rotation]);
            match fill {
                None => ("Oval", base, None),
                Some(f) => ("GOval", format!("{base}{{{f}}}"), None),
            }
        }
        Primitive::Grid {
            origin,
            cell_width,
            cell_height,
            cols,
            rows,
        } => (
            "AxoGrid",
            format!("{}{}({cols},{rows})", pt(*origin), nums(&[*cell_width, *cell_height])),
            None,
        ),
        Primitive::TextLabel {
            anchor,
            content,
            size,
        } => ("Text", format!("{}{{{content}}}", pt(*anchor)), with_size(*size)),
        Primitive::BoxedText {
            center,
            lines,
            size,
            fill,
        } => {
            let two = lines.len() > 1;
            match fill {
                None => (
                    if two { "BTwoText" } else { "BText" },
                    pt(*center) + &texts(lines),
                    with_size(*size),
                ),
                Some(f) => (
                    if two { "GTwoText" } else { "GText" },
                    format!("{}{{{f}}}{}", pt(*center), texts(lines)),
                    with_size(*size),
                ),
            }
        }
        Primitive::OvalText {
            center,
            lines,
            size,
            frame,
            fill,
        } => (
            if lines.len() > 1 { "CTwoText" } else { "CText" },
            format!("{}{{{frame}}}{{{fill}}}{}", pt(*center), texts(lines)),
            with_size(*size),
        ),
    };
    (name.to_string(), args, size)
}

fn item_source(item: &Item) -> String {
    match item {
        Item::SetColor(p) => format!("\\SetColor{{{p}}}"),
        Item::SetWidth(w) => format!("\\SetWidth{}", braced(*w)),
        Item::SetScale(s) => format!("\\SetScale{}", braced(*s)),
        Item::Draw { primitive, options: opts } => {
            let (name, args, size) = primitive_source(primitive);
            let mut all = opts.clone();
            if let Some(s) = size {
                all.insert("size".into(), OptionValue::Number(s));
            }
            format!("\\{name}{}{args}", options(&all))
        }
    }
}

/// Writes a diagram in canonical form: header, one item per line, end.
pub fn serialize(d: &Diagram) -> String {
    let c = &d.canvas;
    let mut out = String::from("\\begin{axopicture}");
    if c.scale != 1.0 {
        let _ = write!(out, "[scale={}]", format_number(c.scale));
    }
    out += &nums(&[c.width, c.height]);
    if c.origin != Point::ZERO {
        out += &pt(c.origin);
    }
    out.push('\n');
    for item in &d.items {
        out += "  ";
        out += &item_source(item);
        out.push('\n');
    }
    out += "\\end{axopicture}\n";
    out
}
