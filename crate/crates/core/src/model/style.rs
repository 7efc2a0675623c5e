//! Line styles and keyword option resolution.

use std::collections::BTreeMap;

use super::{color_lookup, Color, ModelError, PrimitiveKind};

pub const DEFAULT_LINE_WIDTH: f64 = 0.5;
/// Separation used by `double` without `sep`.
pub const DEFAULT_SEPARATION: f64 = 2.0;
/// Dash size used by `dash` without `dsize`.
pub const DEFAULT_DASH_SIZE: f64 = 3.0;

/// Default arrowhead geometry, in pt and fractions.
pub mod arrow_defaults {
    pub const POS: f64 = 0.5;
    pub const LENGTH: f64 = 10.0;
    pub const WIDTH: f64 = 4.0;
    pub const INSET: f64 = 0.2;
    pub const SCALE: f64 = 1.0;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrowSpec {
    /// Fraction of arc length along the base curve.
    pub pos: f64,
    pub length: f64,
    pub width: f64,
    /// Notch depth as a fraction of `length`.
    pub inset: f64,
    pub scale: f64,
    pub flipped: bool,
}

impl Default for ArrowSpec {
    fn default() -> Self {
        ArrowSpec {
            pos: arrow_defaults::POS,
            length: arrow_defaults::LENGTH,
            width: arrow_defaults::WIDTH,
            inset: arrow_defaults::INSET,
            scale: arrow_defaults::SCALE,
            flipped: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineStyle {
    pub width: f64,
    pub color: Color,
    /// Separation of a double line.
    pub double: Option<f64>,
    /// Dash size.
    pub dash: Option<f64>,
    pub arrows: Vec<ArrowSpec>,
}

impl LineStyle {
    pub fn plain(width: f64, color: Color) -> Self {
        LineStyle {
            width,
            color,
            double: None,
            dash: None,
            arrows: Vec::new(),
        }
    }
}

/// Drawing state carried between commands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrawState {
    pub color: Color,
    pub width: f64,
    pub scale: f64,
}

impl Default for DrawState {
    fn default() -> Self {
        DrawState {
            color: Color::BLACK,
            width: DEFAULT_LINE_WIDTH,
            scale: 1.0,
        }
    }
}

/// A keyword option value as written.
#[derive(Debug, Clone, PartialEq)]
pub enum OptionValue {
    /// `key` with no value.
    Flag,
    Number(f64),
    Word(String),
}

/// Keyword options by name; sorted so serialization is canonical.
pub type OptionMap = BTreeMap<String, OptionValue>;

/// Every key accepted in an option list.
pub const OPTION_KEYS: &[&str] = &[
    "arrow",
    "arrowinset",
    "arrowlength",
    "arrowpos",
    "arrowscale",
    "arrowwidth",
    "color",
    "dash",
    "double",
    "dsize",
    "flip",
    "sep",
    "width",
];

fn flag(raw: &OptionMap, key: &str) -> Result<bool, ModelError> {
    match raw.get(key) {
        None => Ok(false),
        Some(OptionValue::Flag) => Ok(true),
        Some(other) => Err(bad_value(key, other)),
    }
}

fn bad_value(key: &str, v: &OptionValue) -> ModelError {
    let text = match v {
        OptionValue::Flag => String::new(),
        OptionValue::Number(n) => n.to_string(),
        OptionValue::Word(w) => w.clone(),
    };
    ModelError::BadValue {
        key: key.to_string(),
        value: text,
    }
}

/// Numeric option: `None` when absent, `Some(default)` for a bare flag.
fn number(
    raw: &OptionMap,
    key: &str,
    default: f64,
    valid: impl Fn(f64) -> bool,
) -> Result<Option<f64>, ModelError> {
    let v = match raw.get(key) {
        None => return Ok(None),
        Some(OptionValue::Flag) => default,
        Some(OptionValue::Number(n)) => *n,
        Some(other) => return Err(bad_value(key, other)),
    };
    if v.is_finite() && valid(v) {
        Ok(Some(v))
    } else {
        Err(bad_value(key, &OptionValue::Number(v)))
    }
}

/// Builds the style of one primitive from its keyword options and the
/// current drawing state.
///
/// Width and color fall back to the state (grids default to LightGray).
/// Options such as `sep` or `arrowpos` switch on their feature by
/// themselves.
pub fn resolve_options(
    kind: PrimitiveKind,
    raw: &OptionMap,
    state: &DrawState,
) -> Result<LineStyle, ModelError> {
    if let Some(k) = raw.keys().find(|k| !OPTION_KEYS.contains(&k.as_str())) {
        return Err(ModelError::UnknownOption(k.clone()));
    }
    let positive = |v: f64| v > 0.0;

    let width = number(raw, "width", state.width, positive)?.unwrap_or(state.width);
    let color = match raw.get("color") {
        None if kind == PrimitiveKind::Grid => color_lookup("LightGray")?,
        None => state.color,
        Some(OptionValue::Word(name)) => color_lookup(name)?,
        Some(other) => return Err(bad_value("color", other)),
    };

    let sep = number(raw, "sep", DEFAULT_SEPARATION, positive)?;
    let double = if flag(raw, "double")? || sep.is_some() {
        Some(sep.unwrap_or(DEFAULT_SEPARATION))
    } else {
        None
    };

    let dsize = number(raw, "dsize", DEFAULT_DASH_SIZE, positive)?;
    let dash = if flag(raw, "dash")? || dsize.is_some() {
        Some(dsize.unwrap_or(DEFAULT_DASH_SIZE))
    } else {
        None
    };

    let d = ArrowSpec::default();
    let pos = number(raw, "arrowpos", d.pos, |v| (0.0..=1.0).contains(&v))?;
    let length = number(raw, "arrowlength", d.length, positive)?;
    let aw = number(raw, "arrowwidth", d.width, positive)?;
    let inset = number(raw, "arrowinset", d.inset, |v| (0.0..1.0).contains(&v))?;
    let scale = number(raw, "arrowscale", d.scale, positive)?;
    let flipped = flag(raw, "flip")?;
    let any_arrow_key = [pos, length, aw, inset, scale].iter().any(Option::is_some);
    let arrows = if flag(raw, "arrow")? || any_arrow_key || flipped {
        vec![ArrowSpec {
            pos: pos.unwrap_or(d.pos),
            length: length.unwrap_or(d.length),
            width: aw.unwrap_or(d.width),
            inset: inset.unwrap_or(d.inset),
            scale: scale.unwrap_or(d.scale),
            flipped,
        }]
    } else {
        Vec::new()
    };

    Ok(LineStyle {
        width,
        color,
        double,
        dash,
        arrows,
    })
}
