use super::{GeomError, Point};

/// An ordered run of points with cumulative arc length.
///
/// Every curve in the crate is flattened into one of these before it is
/// offset, dashed, measured or emitted.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    points: Vec<Point>,
    cumlen: Vec<f64>,
}

impl Polyline {
    pub fn new(points: Vec<Point>) -> Self {
        let mut cumlen = Vec::with_capacity(points.len());
        let mut acc = 0.0;
        for (i, p) in points.iter().enumerate() {
            if i > 0 {
                acc += p.distance(points[i - 1]);
            }
            cumlen.push(acc);
        }
        Polyline { points, cumlen }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn cumlen(&self) -> &[f64] {
        &self.cumlen
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> Option<Point> {
        self.points.first().copied()
    }

    pub fn last(&self) -> Option<Point> {
        self.points.last().copied()
    }

    /// Total length; zero for fewer than two points.
    pub fn total_length(&self) -> f64 {
        self.cumlen.last().copied().unwrap_or(0.0)
    }

    /// True when the path returns exactly to its first point.
    pub fn is_closed(&self) -> bool {
        self.points.len() > 2 && self.points.first() == self.points.last()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// Applies `f` to every vertex, recomputing lengths.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Polyline {
        Polyline::new(self.points.iter().map(|&p| f(p)).collect())
    }

    /// Index of the segment containing arc length `s`. A vertex shared by
    /// two segments belongs to the following one; `s` at the very end
    /// belongs to the last segment.
    pub(crate) fn segment_at(&self, s: f64) -> usize {
        let last_seg = self.points.len().saturating_sub(2);
        let i = self.cumlen.partition_point(|&c| c <= s).saturating_sub(1);
        i.min(last_seg)
    }

    /// Point at arc length `s`, clamped to the path.
    pub fn point_at_length(&self, s: f64) -> Point {
        if s <= 0.0 || self.points.len() < 2 {
            return self.points[0];
        }
        if s >= self.total_length() {
            return *self.points.last().unwrap();
        }
        let i = self.segment_at(s);
        let seg = self.cumlen[i + 1] - self.cumlen[i];
        if seg <= 0.0 {
            return self.points[i];
        }
        self.points[i].lerp(self.points[i + 1], (s - self.cumlen[i]) / seg)
    }

    /// The sub-path between arc lengths `from` and `to` (`from <= to`).
    pub fn slice(&self, from: f64, to: f64) -> Polyline {
        let mut pts = vec![self.point_at_length(from)];
        for (p, &c) in self.points.iter().zip(&self.cumlen) {
            if c > from && c < to {
                pts.push(*p);
            }
        }
        pts.push(self.point_at_length(to));
        Polyline::new(pts)
    }
}

/// Total arc length of a polyline.
pub fn arc_length(pl: &Polyline) -> Result<f64, GeomError> {
    if pl.len() < 2 {
        return Err(GeomError::TooShort(pl.len()));
    }
    Ok(pl.total_length())
}
