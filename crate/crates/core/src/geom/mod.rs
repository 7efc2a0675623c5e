//! Curve geometry: flattening, wiggly lines, offsets, dashes and frames.
//!
//! All lengths are TeX points. Every operation is a pure function of its
//! arguments.

// Negated comparisons reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod flatten;
mod ops;
mod point;
mod polyline;
mod wiggly;

use thiserror::Error;

pub use flatten::{
    arc_sweep, bezier_point, flatten_arc, flatten_bezier, flatten_circle, flatten_ellipse,
};
pub use ops::{dash_count, dash_split, frame_at, offset, self_intersections, Frame, MITER_LIMIT};
pub use point::{cos_sin_deg, Point};
pub use polyline::{arc_length, Polyline};
pub use wiggly::{
    wiggly_path, Carrier, WigglyCurve, WigglyKind, WigglySpec, GLUON_LOOP_FACTOR,
    MAX_WIGGLE_COUNT,
};

/// Flattening tolerance used when none is given, in pt.
pub const DEFAULT_TOLERANCE: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("arc has zero opening angle")]
    EmptyArc,
    #[error("radius must be positive, got {0}")]
    InvalidRadius(f64),
    #[error("flattening tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("carrier has zero length")]
    DegenerateCarrier,
    #[error("path needs at least 2 points, got {0}")]
    TooShort(usize),
    #[error("position {0} is outside [0, 1]")]
    OutOfRange(f64),
    #[error("invalid wiggly line: {0}")]
    InvalidWiggly(String),
    #[error("non-finite coordinate")]
    NonFinite,
}
