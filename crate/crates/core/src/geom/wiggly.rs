//! Gluon, photon and zigzag lines.
//!
//! Each kind is a deviation profile `dev(t)` together with a monotone (or,
//! for gluons, looping) progress `along(t)` in `[0, 1]`. The profile is laid
//! onto a [`Carrier`]: perpendicular to a segment, or radially on arcs and
//! circles.
//!
//! The gluon uses a prolate cycloid with loop factor [`GLUON_LOOP_FACTOR`]:
//!
//! ```text
//! along(t) = (t - q sin t) / (2 pi n)
//! dev(t)   = (a / 2) (1 - cos t)          t in [0, 2 pi n]
//! ```
//!
//! Progress runs backwards whenever `cos t > 1/q`, which happens around every
//! interior multiple of `2 pi`, so `n` windings produce `n - 1` loops on a
//! segment. On a circle the seam sits at `t = 0` where both `dev` and its
//! derivative vanish, so the curve closes with a continuous tangent.

use std::f64::consts::{FRAC_PI_4, PI, TAU};

use super::flatten::{arc_sweep, check_tolerance, flatten_arc, flatten_parametric};
use super::{cos_sin_deg, GeomError, Point, Polyline};

/// Loop factor `q` of the gluon cycloid.
pub const GLUON_LOOP_FACTOR: f64 = 2.0;

/// Windings or half-periods beyond this are rejected.
pub const MAX_WIGGLE_COUNT: u32 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WigglyKind {
    Gluon,
    Photon,
    ZigZag,
}

/// Shape of a wiggly line: `count` is windings for gluons and half-periods
/// for photons and zigzags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WigglySpec {
    pub kind: WigglyKind,
    pub amplitude: f64,
    pub count: u32,
}

impl WigglySpec {
    pub fn new(kind: WigglyKind, amplitude: f64, count: u32) -> Result<Self, GeomError> {
        let spec = WigglySpec {
            kind,
            amplitude,
            count,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), GeomError> {
        if !(self.amplitude > 0.0 && self.amplitude.is_finite()) {
            return Err(GeomError::InvalidWiggly(format!(
                "amplitude must be positive, got {}",
                self.amplitude
            )));
        }
        if self.count == 0 || self.count > MAX_WIGGLE_COUNT {
            return Err(GeomError::InvalidWiggly(format!(
                "count must be in 1..={MAX_WIGGLE_COUNT}, got {}",
                self.count
            )));
        }
        Ok(())
    }

    fn param_end(&self) -> f64 {
        let n = self.count as f64;
        match self.kind {
            WigglyKind::Gluon => TAU * n,
            WigglyKind::Photon => PI * n,
            WigglyKind::ZigZag => n,
        }
    }

    /// `(along, dev)` at parameter `t`.
    fn profile(&self, t: f64) -> (f64, f64) {
        let n = self.count as f64;
        let a = self.amplitude;
        match self.kind {
            WigglyKind::Gluon => (
                (t - GLUON_LOOP_FACTOR * t.sin()) / (TAU * n),
                0.5 * a * (1.0 - t.cos()),
            ),
            WigglyKind::Photon => (t / (PI * n), a * t.sin()),
            WigglyKind::ZigZag => {
                let k = t.floor();
                let frac = t - k;
                let sign = if (k as i64) % 2 == 0 { 1.0 } else { -1.0 };
                (t / n, sign * a * (1.0 - (2.0 * frac - 1.0).abs()))
            }
        }
    }

    /// Derivatives of `(along, dev)` with respect to `t`.
    fn profile_rate(&self, t: f64) -> (f64, f64) {
        let n = self.count as f64;
        let a = self.amplitude;
        match self.kind {
            WigglyKind::Gluon => (
                (1.0 - GLUON_LOOP_FACTOR * t.cos()) / (TAU * n),
                0.5 * a * t.sin(),
            ),
            WigglyKind::Photon => (1.0 / (PI * n), a * t.cos()),
            WigglyKind::ZigZag => {
                let k = t.floor();
                let frac = t - k;
                let sign = if (k as i64) % 2 == 0 { 1.0 } else { -1.0 };
                let slope = if frac < 0.5 { 2.0 } else { -2.0 };
                (1.0 / n, sign * a * slope)
            }
        }
    }

    /// Parameters that must appear in the flattened output: peaks, zero
    /// crossings and (for zigzags) corners.
    fn seeds(&self) -> Vec<f64> {
        let n = self.count as usize;
        match self.kind {
            WigglyKind::Gluon => (0..=8 * n).map(|i| i as f64 * FRAC_PI_4).collect(),
            WigglyKind::Photon => (0..=4 * n).map(|i| i as f64 * FRAC_PI_4).collect(),
            WigglyKind::ZigZag => (0..=2 * n).map(|i| i as f64 * 0.5).collect(),
        }
    }
}

/// The path a wiggly line follows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Carrier {
    Segment {
        from: Point,
        to: Point,
    },
    /// Counterclockwise from `theta1` to `theta2` degrees.
    Arc {
        center: Point,
        radius: f64,
        theta1: f64,
        theta2: f64,
    },
    /// Full circle whose seam sits at angle `phase` degrees.
    Circle {
        center: Point,
        radius: f64,
        phase: f64,
    },
}

#[derive(Debug, Clone, Copy)]
enum Placement {
    Straight {
        from: Point,
        to: Point,
        delta: Point,
        normal: Point,
    },
    Round {
        center: Point,
        radius: f64,
        start: f64,
        sweep: f64,
        closed: bool,
    },
}

impl Carrier {
    fn placement(&self) -> Result<Placement, GeomError> {
        match *self {
            Carrier::Segment { from, to } => {
                if !(from.is_finite() && to.is_finite()) {
                    return Err(GeomError::NonFinite);
                }
                let delta = to - from;
                let dir = delta.normalize().ok_or(GeomError::DegenerateCarrier)?;
                Ok(Placement::Straight {
                    from,
                    to,
                    delta,
                    normal: dir.perp(),
                })
            }
            Carrier::Arc {
                center,
                radius,
                theta1,
                theta2,
            } => {
                check_radius(radius)?;
                let sweep = arc_sweep(theta1, theta2).map_err(|e| match e {
                    GeomError::EmptyArc => GeomError::DegenerateCarrier,
                    other => other,
                })?;
                Ok(Placement::Round {
                    center,
                    radius,
                    start: theta1,
                    sweep,
                    closed: false,
                })
            }
            Carrier::Circle {
                center,
                radius,
                phase,
            } => {
                check_radius(radius)?;
                if !phase.is_finite() {
                    return Err(GeomError::NonFinite);
                }
                Ok(Placement::Round {
                    center,
                    radius,
                    start: phase,
                    sweep: 360.0,
                    closed: true,
                })
            }
        }
    }

    /// The bare carrier, flattened.
    pub fn flatten(&self, tol: f64) -> Result<Polyline, GeomError> {
        match self.placement()? {
            Placement::Straight { from, to, .. } => Ok(Polyline::new(vec![from, to])),
            Placement::Round {
                center,
                radius,
                start,
                sweep,
                ..
            } => flatten_arc(center, radius, start, start + sweep, tol),
        }
    }
}

fn check_radius(radius: f64) -> Result<(), GeomError> {
    if radius > 0.0 && radius.is_finite() {
        Ok(())
    } else {
        Err(GeomError::InvalidRadius(radius))
    }
}

impl Placement {
    fn place(&self, along: f64, dev: f64) -> Point {
        match *self {
            Placement::Straight {
                from,
                delta,
                normal,
                ..
            } => from + delta * along + normal * dev,
            Placement::Round {
                center,
                radius,
                start,
                sweep,
                ..
            } => {
                let (c, s) = cos_sin_deg(start + sweep * along);
                center + Point::new(c, s) * (radius + dev)
            }
        }
    }

    fn rate(&self, along: f64, dev: f64, along_rate: f64, dev_rate: f64) -> Point {
        match *self {
            Placement::Straight { delta, normal, .. } => delta * along_rate + normal * dev_rate,
            Placement::Round {
                radius,
                start,
                sweep,
                ..
            } => {
                let (c, s) = cos_sin_deg(start + sweep * along);
                let radial = Point::new(c, s);
                radial * dev_rate + radial.perp() * ((radius + dev) * sweep.to_radians() * along_rate)
            }
        }
    }

    /// Where the carrier ends, computed directly rather than from the profile.
    fn end(&self) -> Point {
        match *self {
            Placement::Straight { to, .. } => to,
            Placement::Round {
                center,
                radius,
                start,
                sweep,
                ..
            } => {
                let (c, s) = cos_sin_deg(start + sweep);
                center + Point::new(c, s) * radius
            }
        }
    }
}

/// A wiggly profile bound to its carrier, evaluable at any parameter.
#[derive(Debug, Clone, Copy)]
pub struct WigglyCurve {
    spec: WigglySpec,
    placement: Placement,
}

impl WigglyCurve {
    pub fn new(carrier: &Carrier, spec: &WigglySpec) -> Result<Self, GeomError> {
        spec.validate()?;
        Ok(WigglyCurve {
            spec: *spec,
            placement: carrier.placement()?,
        })
    }

    /// Parameter range is `[0, param_end()]`.
    pub fn param_end(&self) -> f64 {
        self.spec.param_end()
    }

    pub fn point(&self, t: f64) -> Point {
        let (along, dev) = self.spec.profile(t);
        self.placement.place(along, dev)
    }

    pub fn derivative(&self, t: f64) -> Point {
        let (along, dev) = self.spec.profile(t);
        let (da, dd) = self.spec.profile_rate(t);
        self.placement.rate(along, dev, da, dd)
    }

    pub fn flatten(&self, tol: f64) -> Result<Polyline, GeomError> {
        check_tolerance(tol)?;
        let f = |t: f64| self.point(t);
        let mut pts = flatten_parametric(&f, &self.spec.seeds(), tol);
        let last = pts.len() - 1;
        pts[last] = match self.placement {
            Placement::Round { closed: true, .. } => pts[0],
            _ => self.placement.end(),
        };
        Ok(Polyline::new(pts))
    }
}

/// Flattens a gluon, photon or zigzag line along `carrier`.
pub fn wiggly_path(carrier: &Carrier, spec: &WigglySpec, tol: f64) -> Result<Polyline, GeomError> {
    WigglyCurve::new(carrier, spec)?.flatten(tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_offset_from_x_axis(pl: &Polyline, y0: f64) -> f64 {
        pl.points()
            .iter()
            .map(|p| (p.y - y0).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn photon_single_bump() {
        let spec = WigglySpec::new(WigglyKind::Photon, 2.0, 1).unwrap();
        let carrier = Carrier::Segment {
            from: Point::new(0.0, 0.0),
            to: Point::new(10.0, 0.0),
        };
        let pl = wiggly_path(&carrier, &spec, 0.05).unwrap();
        assert_eq!(pl.first(), Some(Point::new(0.0, 0.0)));
        assert_eq!(pl.last(), Some(Point::new(10.0, 0.0)));
        assert!((max_offset_from_x_axis(&pl, 0.0) - 2.0).abs() <= 0.05);
        assert!(pl.points().iter().all(|p| p.y >= -1e-12));
    }

    #[test]
    fn zigzag_corners_are_exact() {
        let spec = WigglySpec::new(WigglyKind::ZigZag, 3.0, 4).unwrap();
        let carrier = Carrier::Segment {
            from: Point::new(0.0, 0.0),
            to: Point::new(40.0, 0.0),
        };
        let pl = wiggly_path(&carrier, &spec, 0.05).unwrap();
        let ys: Vec<f64> = pl.points().iter().map(|p| p.y).collect();
        assert_eq!(ys, vec![0.0, 3.0, 0.0, -3.0, 0.0, 3.0, 0.0, -3.0, 0.0]);
    }

    #[test]
    fn gluon_endpoints_and_bulge() {
        let spec = WigglySpec::new(WigglyKind::Gluon, 5.0, 4).unwrap();
        let carrier = Carrier::Segment {
            from: Point::new(0.0, 50.0),
            to: Point::new(60.0, 50.0),
        };
        let pl = wiggly_path(&carrier, &spec, 0.05).unwrap();
        assert_eq!(pl.first(), Some(Point::new(0.0, 50.0)));
        assert_eq!(pl.last(), Some(Point::new(60.0, 50.0)));
        assert!((max_offset_from_x_axis(&pl, 50.0) - 5.0).abs() <= 0.05);
        // one-sided bulge
        assert!(pl.points().iter().all(|p| p.y >= 50.0 - 1e-12));
    }

    #[test]
    fn gluon_circle_closes_smoothly() {
        let spec = WigglySpec::new(WigglyKind::Gluon, 5.0, 8).unwrap();
        let carrier = Carrier::Circle {
            center: Point::ZERO,
            radius: 40.0,
            phase: 0.0,
        };
        let curve = WigglyCurve::new(&carrier, &spec).unwrap();
        let pl = curve.flatten(0.05).unwrap();
        assert_eq!(pl.first(), pl.last());
        let t0 = curve.derivative(0.0).normalize().unwrap();
        let t1 = curve.derivative(curve.param_end()).normalize().unwrap();
        assert!(t0.distance(t1) < 1e-6);
    }

    #[test]
    fn arc_carrier_hits_analytic_endpoints() {
        let spec = WigglySpec::new(WigglyKind::Photon, 2.0, 5).unwrap();
        let carrier = Carrier::Arc {
            center: Point::new(10.0, 10.0),
            radius: 20.0,
            theta1: 30.0,
            theta2: 150.0,
        };
        let pl = wiggly_path(&carrier, &spec, 0.05).unwrap();
        let (c1, s1) = cos_sin_deg(30.0);
        let (c2, s2) = cos_sin_deg(30.0 + 120.0);
        assert_eq!(pl.first(), Some(Point::new(10.0, 10.0) + Point::new(c1, s1) * 20.0));
        assert_eq!(pl.last(), Some(Point::new(10.0, 10.0) + Point::new(c2, s2) * 20.0));
    }

    #[test]
    fn degenerate_carriers() {
        let spec = WigglySpec::new(WigglyKind::Gluon, 1.0, 2).unwrap();
        let p = Point::new(1.0, 1.0);
        assert_eq!(
            wiggly_path(&Carrier::Segment { from: p, to: p }, &spec, 0.05),
            Err(GeomError::DegenerateCarrier)
        );
        let arc = Carrier::Arc {
            center: p,
            radius: 5.0,
            theta1: 20.0,
            theta2: 20.0,
        };
        assert_eq!(wiggly_path(&arc, &spec, 0.05), Err(GeomError::DegenerateCarrier));
    }

    #[test]
    fn invalid_spec() {
        assert!(WigglySpec::new(WigglyKind::Photon, 0.0, 1).is_err());
        assert!(WigglySpec::new(WigglyKind::Photon, 1.0, 0).is_err());
    }
}
