use std::fmt;
use std::sync::OnceLock;

use super::ModelError;

/// An RGB color with components in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Color {
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

impl Color {
    pub const BLACK: Color = Color { r: 0.0, g: 0.0, b: 0.0 };
    pub const WHITE: Color = Color { r: 1.0, g: 1.0, b: 1.0 };

    /// Components are clamped into `[0, 1]`; NaN becomes 0.
    pub fn new(r: f64, g: f64, b: f64) -> Self {
        let c = |v: f64| if v.is_nan() { 0.0 } else { v.clamp(0.0, 1.0) };
        Color {
            r: c(r),
            g: c(g),
            b: c(b),
        }
    }

    /// Gray level: 0 is black, 1 is white.
    pub fn gray(level: f64) -> Self {
        Color::new(level, level, level)
    }

    /// `#rrggbb`
    pub fn to_hex(self) -> String {
        let q = |v: f64| (v * 255.0).round() as u8;
        format!("#{:02x}{:02x}{:02x}", q(self.r), q(self.g), q(self.b))
    }
}

const TABLE_SRC: &str = include_str!("colors.tsv");

/// Number of entries in the named-color table.
pub const NAMED_COLOR_COUNT: usize = 73;

/// The named colors in table order.
pub fn named_colors() -> &'static [(String, Color)] {
    static TABLE: OnceLock<Vec<(String, Color)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        TABLE_SRC
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                let f: Vec<&str> = l.split('\t').collect();
                let num = |i: usize| f[i].trim().parse::<f64>().expect("colors.tsv number");
                (f[0].to_string(), Color::new(num(1), num(2), num(3)))
            })
            .collect()
    })
}

/// Looks up a named color. Names are case-sensitive.
pub fn color_lookup(name: &str) -> Result<Color, ModelError> {
    named_colors()
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, c)| *c)
        .ok_or_else(|| ModelError::UnknownColor {
            name: name.to_string(),
            candidates: nearest_names(name, 3),
        })
}

fn edit_distance(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.to_lowercase().chars().collect();
    let b: Vec<char> = b.to_lowercase().chars().collect();
    let mut row: Vec<usize> = (0..=b.len()).collect();
    for i in 1..=a.len() {
        let mut diag = row[0];
        row[0] = i;
        for j in 1..=b.len() {
            let sub = diag + usize::from(a[i - 1] != b[j - 1]);
            diag = row[j];
            row[j] = sub.min(row[j] + 1).min(row[j - 1] + 1);
        }
    }
    row[b.len()]
}

fn nearest_names(name: &str, n: usize) -> Vec<String> {
    let mut scored: Vec<(usize, &str)> = named_colors()
        .iter()
        .map(|(c, _)| (edit_distance(name, c), c.as_str()))
        .collect();
    scored.sort();
    scored.into_iter().take(n).map(|(_, c)| c.to_string()).collect()
}

/// A color as written in source: a table name, a gray level or an RGB
/// triple.
#[derive(Debug, Clone, PartialEq)]
pub enum Paint {
    Named(String),
    Gray(f64),
    Rgb(f64, f64, f64),
}

impl Paint {
    pub fn resolve(&self) -> Result<Color, ModelError> {
        match self {
            Paint::Named(n) => color_lookup(n),
            Paint::Gray(g) => Ok(Color::gray(*g)),
            Paint::Rgb(r, g, b) => Ok(Color::new(*r, *g, *b)),
        }
    }
}

impl fmt::Display for Paint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::parser::format_number as num;
        match self {
            Paint::Named(n) => f.write_str(n),
            Paint::Gray(g) => f.write_str(&num(*g)),
            Paint::Rgb(r, g, b) => write!(f, "{},{},{}", num(*r), num(*g), num(*b)),
        }
    }
}
