//! Operations on flattened paths: arc-length frames, offsets, dashing and
//! crossing counts.

use super::{GeomError, Point, Polyline};

/// Miter length limit for [`offset`], as a multiple of the offset distance.
pub const MITER_LIMIT: f64 = 4.0;

/// A point on a path with its unit tangent and left normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub at: Point,
    pub tangent: Point,
    pub normal: Point,
}

impl Frame {
    /// Frame at `at` with direction `dir`; `None` if `dir` is zero.
    pub fn new(at: Point, dir: Point) -> Option<Frame> {
        let tangent = dir.normalize()?;
        Some(Frame {
            at,
            tangent,
            normal: tangent.perp(),
        })
    }
}

fn segment_dir(pl: &Polyline, i: usize) -> Option<Point> {
    let pts = pl.points();
    (pts[i + 1] - pts[i]).normalize()
}

/// Direction of segment `i`, or of the nearest non-degenerate segment
/// (searching forward first).
fn nearest_dir(pl: &Polyline, i: usize) -> Option<Point> {
    let segs = pl.len() - 1;
    (i..segs)
        .chain((0..i).rev())
        .find_map(|j| segment_dir(pl, j))
}

/// Frame at fraction `s` of the total arc length.
pub fn frame_at(pl: &Polyline, s: f64) -> Result<Frame, GeomError> {
    if !(0.0..=1.0).contains(&s) {
        return Err(GeomError::OutOfRange(s));
    }
    if pl.len() < 2 {
        return Err(GeomError::TooShort(pl.len()));
    }
    let total = pl.total_length();
    let pts = pl.points();
    let (at, seg) = if s == 0.0 {
        (pts[0], 0)
    } else if s == 1.0 {
        (pts[pts.len() - 1], pts.len() - 2)
    } else {
        let target = s * total;
        let i = pl.segment_at(target);
        (pl.point_at_length(target), i)
    };
    let dir = nearest_dir(pl, seg).ok_or(GeomError::TooShort(pl.len()))?;
    Ok(Frame::new(at, dir).expect("unit direction"))
}

/// Moves every vertex a distance `d` along the local left normal.
///
/// Interior vertices use the averaged normal of their two segments, with
/// the miter length `d / cos(half turn)` clamped to `MITER_LIMIT * |d|`.
/// Closed paths treat the seam as an interior vertex.
pub fn offset(pl: &Polyline, d: f64) -> Polyline {
    if d == 0.0 || pl.len() < 2 {
        return pl.clone();
    }
    let pts = pl.points();
    let segs = pts.len() - 1;
    let Some(fallback) = nearest_dir(pl, 0) else {
        return pl.clone();
    };
    // per-segment unit normals, degenerate segments borrowing a neighbour's
    let mut normals = Vec::with_capacity(segs);
    let mut prev = fallback;
    for i in 0..segs {
        let dir = segment_dir(pl, i).unwrap_or(prev);
        normals.push(dir.perp());
        prev = dir;
    }
    let closed = pl.is_closed();
    let limit = MITER_LIMIT * d.abs();
    let mut out = Vec::with_capacity(pts.len());
    for (i, &p) in pts.iter().enumerate() {
        let before = if i > 0 {
            Some(normals[i - 1])
        } else if closed {
            Some(normals[segs - 1])
        } else {
            None
        };
        let after = if i < segs {
            Some(normals[i])
        } else if closed {
            Some(normals[0])
        } else {
            None
        };
        let moved = match (before, after) {
            (Some(n1), Some(n2)) => p + miter(n1, n2, d, limit),
            (Some(n), None) | (None, Some(n)) => p + n * d,
            (None, None) => p,
        };
        out.push(moved);
    }
    if closed {
        let last = out.len() - 1;
        out[last] = out[0];
    }
    Polyline::new(out)
}

fn miter(n1: Point, n2: Point, d: f64, limit: f64) -> Point {
    let Some(m) = (n1 + n2).normalize() else {
        // full reversal
        return n1 * d;
    };
    let cos_half = m.dot(n1);
    let len = if cos_half > 0.0 { d / cos_half } else { d.signum() * limit };
    m * len.clamp(-limit, limit)
}

/// Number of dash intervals for a path of length `total`: the largest odd
/// integer not above `total / dsize`, and at least one.
pub fn dash_count(total: f64, dsize: f64) -> usize {
    let ratio = (total / dsize).floor();
    if !(ratio >= 1.0) {
        return 1;
    }
    let k = if ratio >= usize::MAX as f64 { usize::MAX } else { ratio as usize };
    // cap so pathological inputs cannot allocate without bound
    let k = k.min(1 << 20);
    if k % 2 == 0 {
        k - 1
    } else {
        k
    }
}

/// Splits `pl` into equal on/off pieces beginning and ending with "on",
/// returning the "on" pieces in order.
pub fn dash_split(pl: &Polyline, dsize: f64) -> Vec<Polyline> {
    let total = pl.total_length();
    if pl.len() < 2 || !(dsize > 0.0) {
        return vec![pl.clone()];
    }
    let k = dash_count(total, dsize);
    if k == 1 {
        return vec![pl.clone()];
    }
    let piece = total / k as f64;
    (0..k)
        .step_by(2)
        .map(|i| {
            let from = piece * i as f64;
            let to = if i + 1 == k { total } else { piece * (i + 1) as f64 };
            pl.slice(from, to)
        })
        .collect()
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// Counts proper crossings between non-adjacent segments by checking every
/// pair. On a closed path the first and last segments count as adjacent.
pub fn self_intersections(pl: &Polyline) -> usize {
    let pts = pl.points();
    if pts.len() < 4 {
        return 0;
    }
    let segs = pts.len() - 1;
    let closed = pl.is_closed();
    let mut count = 0;
    for i in 0..segs {
        for j in (i + 2)..segs {
            if closed && i == 0 && j == segs - 1 {
                continue;
            }
            if segments_cross(pts[i], pts[i + 1], pts[j], pts[j + 1]) {
                count += 1;
            }
        }
    }
    count
}
