//! Builds a gluon along a straight carrier and reports its shape.

use axoforge::geom::{self_intersections, wiggly_path, Carrier, Point, WigglyKind, WigglySpec};

fn main() {
    let carrier = Carrier::Segment { from: Point::new(0.0, 50.0), to: Point::new(60.0, 50.0) };
    for windings in 1..=6 {
        let spec = WigglySpec::new(WigglyKind::Gluon, 5.0, windings).expect("valid gluon");
        let pl = wiggly_path(&carrier, &spec, 0.05).expect("flattened gluon");
        let deviation = pl.points().iter().map(|p| (p.y - 50.0).abs()).fold(0.0, f64::max);
        println!(
            "{windings} windings: {} points, length {:.3}, max deviation {:.3}, {} crossings",
            pl.points().len(),
            pl.total_length(),
            deviation,
            self_intersections(&pl)
        );
    }
}
