//! Tolerance-driven flattening of arcs, cubic Béziers and general
//! parametric curves.

use std::f64::consts::{FRAC_PI_4, TAU};

use super::{cos_sin_deg, GeomError, Point, Polyline};

/// Upper bound on segments emitted for a single curve.
pub(crate) const MAX_SEGMENTS: usize = 1 << 17;

const MAX_BEZIER_DEPTH: u32 = 16;
const MAX_ADAPTIVE_DEPTH: u32 = 18;

pub(crate) fn check_tolerance(tol: f64) -> Result<(), GeomError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(GeomError::InvalidTolerance(tol))
    }
}

/// Counterclockwise opening in degrees from `theta1` to `theta2`.
///
/// The difference is reduced mod 360; a nonzero multiple of 360 is a full
/// turn, and identical angles are an error.
pub fn arc_sweep(theta1: f64, theta2: f64) -> Result<f64, GeomError> {
    if !(theta1.is_finite() && theta2.is_finite()) {
        return Err(GeomError::NonFinite);
    }
    if theta1 == theta2 {
        return Err(GeomError::EmptyArc);
    }
    let sweep = (theta2 - theta1).rem_euclid(360.0);
    Ok(if sweep == 0.0 { 360.0 } else { sweep })
}

/// Number of equal chords needed so the sagitta on a circle of `radius`
/// stays within `tol` over `sweep_rad` radians.
pub(crate) fn arc_segments(radius: f64, sweep_rad: f64, tol: f64) -> usize {
    let step = if tol >= radius {
        FRAC_PI_4
    } else {
        (2.0 * (1.0 - tol / radius).acos()).min(FRAC_PI_4)
    };
    let n = (sweep_rad.abs() / step).ceil();
    if n.is_finite() {
        (n as usize).clamp(1, MAX_SEGMENTS)
    } else {
        MAX_SEGMENTS
    }
}

/// Flattens the counterclockwise arc from `theta1` to `theta2` degrees.
pub fn flatten_arc(
    center: Point,
    radius: f64,
    theta1: f64,
    theta2: f64,
    tol: f64,
) -> Result<Polyline, GeomError> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(GeomError::InvalidRadius(radius));
    }
    check_tolerance(tol)?;
    let sweep = arc_sweep(theta1, theta2)?;
    let n = arc_segments(radius, sweep.to_radians(), tol);
    let mut pts = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let deg = theta1 + sweep * (i as f64 / n as f64);
        let (c, s) = cos_sin_deg(deg);
        pts.push(center + Point::new(c, s) * radius);
    }
    if sweep == 360.0 {
        pts[n] = pts[0];
    }
    Ok(Polyline::new(pts))
}

/// Closed circle starting at angle 0.
pub fn flatten_circle(center: Point, radius: f64, tol: f64) -> Result<Polyline, GeomError> {
    flatten_arc(center, radius, 0.0, 360.0, tol)
}

/// Closed ellipse with semi-axes `rx`, `ry`, rotated by `rotation` degrees.
///
/// Sampled uniformly in the eccentric angle; the sagitta of such a chord is
/// at most that of the same angular step on a circle of radius
/// `max(rx, ry)`, so that circle's chord count is used.
pub fn flatten_ellipse(
    center: Point,
    rx: f64,
    ry: f64,
    rotation: f64,
    tol: f64,
) -> Result<Polyline, GeomError> {
    if !(rx > 0.0 && ry > 0.0) || !(rx.is_finite() && ry.is_finite()) {
        return Err(GeomError::InvalidRadius(rx.min(ry)));
    }
    check_tolerance(tol)?;
    let n = arc_segments(rx.max(ry), TAU, tol).max(8);
    let mut pts = Vec::with_capacity(n + 1);
    for i in 0..n {
        let (c, s) = cos_sin_deg(360.0 * i as f64 / n as f64);
        let local = center + Point::new(rx * c, ry * s);
        pts.push(local.rotate_about(center, rotation));
    }
    pts.push(pts[0]);
    Ok(Polyline::new(pts))
}

fn distance_to_segment(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.distance(a + ab * t)
}

/// Evaluates a cubic Bézier at `t`.
pub fn bezier_point(ctrl: &[Point; 4], t: f64) -> Point {
    let mt = 1.0 - t;
    ctrl[0] * (mt * mt * mt)
        + ctrl[1] * (3.0 * mt * mt * t)
        + ctrl[2] * (3.0 * mt * t * t)
        + ctrl[3] * (t * t * t)
}

/// Flattens a cubic Bézier by recursive midpoint subdivision.
///
/// A piece is accepted when both inner control points lie within `tol` of
/// its chord; distance to a segment is convex, so the whole piece (inside
/// its control hull) is then within `tol` of that chord.
pub fn flatten_bezier(
    p0: Point,
    p1: Point,
    p2: Point,
    p3: Point,
    tol: f64,
) -> Result<Polyline, GeomError> {
    check_tolerance(tol)?;
    let mut pts = vec![p0];
    subdivide_cubic([p0, p1, p2, p3], tol, 0, &mut pts);
    // The final vertex is p3 exactly because the last leaf ends on it.
    Ok(Polyline::new(pts))
}

fn subdivide_cubic(c: [Point; 4], tol: f64, depth: u32, out: &mut Vec<Point>) {
    let flat = distance_to_segment(c[1], c[0], c[3]) <= tol
        && distance_to_segment(c[2], c[0], c[3]) <= tol;
    if flat || depth >= MAX_BEZIER_DEPTH {
        out.push(c[3]);
        return;
    }
    let ab = c[0].lerp(c[1], 0.5);
    let bc = c[1].lerp(c[2], 0.5);
    let cd = c[2].lerp(c[3], 0.5);
    let abc = ab.lerp(bc, 0.5);
    let bcd = bc.lerp(cd, 0.5);
    let mid = abc.lerp(bcd, 0.5);
    subdivide_cubic([c[0], ab, abc, mid], tol, depth + 1, out);
    subdivide_cubic([mid, bcd, cd, c[3]], tol, depth + 1, out);
}

/// Flattens a parametric curve over the seed parameters `seeds`
/// (strictly increasing), splitting each interval until the curve at its
/// quarter points lies within `tol` of the chord.
///
/// The seed parameters are always emitted, so features placed on them
/// (peaks, corners) survive exactly.
pub(crate) fn flatten_parametric(
    f: &dyn Fn(f64) -> Point,
    seeds: &[f64],
    tol: f64,
) -> Vec<Point> {
    let mut out = Vec::with_capacity(seeds.len() * 2);
    let mut budget = MAX_SEGMENTS;
    out.push(f(seeds[0]));
    for w in seeds.windows(2) {
        let (a, b) = (w[0], w[1]);
        adaptive(f, a, f(a), b, f(b), tol, 0, &mut budget, &mut out);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn adaptive(
    f: &dyn Fn(f64) -> Point,
    t0: f64,
    p0: Point,
    t1: f64,
    p1: Point,
    tol: f64,
    depth: u32,
    budget: &mut usize,
    out: &mut Vec<Point>,
) {
    let tm = 0.5 * (t0 + t1);
    let pm = f(tm);
    let flat = depth >= MAX_ADAPTIVE_DEPTH
        || *budget == 0
        || [0.25, 0.75]
            .iter()
            .map(|&u| f(t0 + (t1 - t0) * u))
            .chain(std::iter::once(pm))
            .all(|q| distance_to_segment(q, p0, p1) <= tol);
    if flat {
        *budget = budget.saturating_sub(1);
        out.push(p1);
        return;
    }
    adaptive(f, t0, p0, tm, pm, tol, depth + 1, budget, out);
    adaptive(f, tm, pm, t1, p1, tol, depth + 1, budget, out);
}
