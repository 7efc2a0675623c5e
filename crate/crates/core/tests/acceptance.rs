//! The acceptance criteria, one check each. Prints one PASS/FAIL line per
//! criterion and fails if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use axoforge::backends::{emit_pdf, emit_svg, pt_to_bp, CONTENT_PRELUDE};
use axoforge::compat::process_ax1;
use axoforge::geom::{
    dash_split, flatten_arc, frame_at, self_intersections, wiggly_path, Carrier, Frame, Point,
    Polyline, WigglyKind, WigglySpec,
};
use axoforge::model::{color_lookup, named_colors, Item, OptionMap, OptionValue, Primitive, PrimitiveKind};
use axoforge::model::{resolve_options, ArrowSpec, Color, DrawState};
use axoforge::parser::{parse_command, parse_document, serialize};
use axoforge::stroker::{arrowhead, realize, Drawable};
use common::{check_pdf, document, shoelace, CORPUS, EXAMPLE};
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const TOL: f64 = 0.05;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn timed(limit: Duration, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}"))
}

// 1
fn unit_correction() -> Check {
    timed(Duration::from_secs(1), || {
        let inch = pt_to_bp(72.27);
        ensure((inch.to_bits() as i64 - 72f64.to_bits() as i64).abs() <= 1, || {
            format!("pt_to_bp(72.27) = {inch:?}")
        })?;
        let pdf = emit_pdf(&parse_document(EXAMPLE).map_err(|e| e.to_string())?, TOL)
            .map_err(|e| e.to_string())?;
        let (_, media, _) = check_pdf(&pdf);
        let want = [0.0, 0.0, 199.2528, 109.5891];
        ensure(media.iter().zip(want).all(|(a, b)| (a - b).abs() <= 1e-3), || {
            format!("MediaBox {media:?}")
        })
    })
}

// 2
fn golden_end_to_end() -> Check {
    timed(Duration::from_secs(1), || {
        let d = parse_document(EXAMPLE).map_err(|e| e.to_string())?;
        ensure(d.items.len() == 9, || format!("{} items", d.items.len()))?;
        let kinds: Vec<&str> = d
            .items
            .iter()
            .map(|i| match i {
                Item::SetColor(_) => "color",
                Item::Draw { primitive, .. } => primitive.kind().name(),
                _ => "other",
            })
            .collect();
        let want = ["color", "arc", "text", "color", "arc", "gluon", "vertex", "gluon", "vertex"];
        ensure(kinds == want, || format!("item order {kinds:?}"))?;
        let svg = emit_svg(&d, TOL).map_err(|e| e.to_string())?;
        let xml = roxmltree::Document::parse(&svg).map_err(|e| e.to_string())?;
        ensure(xml.root_element().attribute("width") == Some("200pt"), || "svg width".into())?;
        let pdf = emit_pdf(&d, TOL).map_err(|e| e.to_string())?;
        // panics inside check_pdf are caught by the caller
        let (objects, _, _) = check_pdf(&pdf);
        ensure(objects == 5, || format!("{objects} objects"))
    })
}

// 3
fn color_table() -> Check {
    let table = named_colors();
    ensure(table.len() == 73, || format!("{} colors", table.len()))?;
    for name in ["LightYellow", "LightRed", "LightBlue", "LightGray", "VeryLightBlue"] {
        ensure(table.iter().any(|(n, _)| n == name), || format!("{name} missing"))?;
    }
    for (name, c) in table {
        ensure(color_lookup(name).ok() == Some(*c), || format!("lookup {name}"))?;
    }
    ensure(color_lookup("Octarine").is_err(), || "unknown name accepted".into())
}

/// Proper crossings between non-adjacent segments, solved parametrically.
fn crossings_oracle(pts: &[Point]) -> usize {
    let n = pts.len() - 1;
    let mut count = 0;
    for i in 0..n {
        for j in i + 2..n {
            let (p, r) = (pts[i], pts[i + 1] - pts[i]);
            let (q, s) = (pts[j], pts[j + 1] - pts[j]);
            let denom = r.x * s.y - r.y * s.x;
            if denom == 0.0 {
                continue;
            }
            let qp = q - p;
            let t = (qp.x * s.y - qp.y * s.x) / denom;
            let u = (qp.x * r.y - qp.y * r.x) / denom;
            if t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0 {
                count += 1;
            }
        }
    }
    count
}

// 4
fn gluon_structure() -> Check {
    let from = Point::new(0.0, 50.0);
    let to = Point::new(60.0, 50.0);
    let carrier = Carrier::Segment { from, to };
    let gluon = |n: u32| {
        let spec = WigglySpec::new(WigglyKind::Gluon, 5.0, n).unwrap();
        wiggly_path(&carrier, &spec, TOL).unwrap()
    };
    let pl = gluon(4);
    ensure(pl.first() == Some(from) && pl.last() == Some(to), || "endpoints moved".into())?;
    let dev = pl.points().iter().map(|p| (p.y - 50.0).abs()).fold(0.0, f64::max);
    ensure((dev - 5.0).abs() <= 0.1, || format!("max deviation {dev}"))?;
    for n in 1..=8 {
        let pl = gluon(n);
        let ours = self_intersections(&pl);
        let oracle = crossings_oracle(pl.points());
        ensure(ours == oracle && oracle == n as usize - 1, || {
            format!("{n} windings: {ours} crossings, oracle {oracle}")
        })?;
    }
    Ok(())
}

/// Distance from `q` to the segments of `pl` with index in `window`.
fn local_distance(pl: &Polyline, q: Point, window: std::ops::Range<usize>) -> f64 {
    let pts = pl.points();
    window
        .filter(|&j| j + 1 < pts.len())
        .map(|j| {
            let d = pts[j + 1] - pts[j];
            let t = if d.dot(d) == 0.0 { 0.0 } else { ((q - pts[j]).dot(d) / d.dot(d)).clamp(0.0, 1.0) };
            q.distance(pts[j] + d * t)
        })
        .fold(f64::INFINITY, f64::min)
}

// 5
fn double_lines() -> Check {
    let cases = [
        r"\Line[double,sep=2.5](0,2)(35,2)",
        r"\Arc[double,sep=2.5](50,50)(30,10,280)",
        r"\Gluon[double,sep=2.5](0,50)(60,50){5}{4}",
        r"\Photon[double,sep=2.5](0,0)(60,0){3}{6}",
    ];
    for line in cases {
        let Item::Draw { primitive, options } = parse_command(line).map_err(|e| e.to_string())? else {
            unreachable!()
        };
        let style = resolve_options(primitive.kind(), &options, &DrawState::default()).map_err(|e| e.to_string())?;
        let out = realize(&primitive, &style, TOL).map_err(|e| e.to_string())?;
        let strands: Vec<&Polyline> = out
            .iter()
            .filter_map(|d| match d {
                Drawable::Stroke { pl, .. } => Some(pl),
                _ => None,
            })
            .collect();
        ensure(strands.len() == 2, || format!("{line}: {} strokes", strands.len()))?;
        let (a, b) = (strands[0], strands[1]);
        let mut min = f64::INFINITY;
        for k in 0..200 {
            // stay clear of the two ends
            let s = a.total_length() * (0.02 + 0.96 * k as f64 / 199.0);
            let i = a.cumlen().partition_point(|&c| c <= s).saturating_sub(1);
            let q = a.point_at_length(s);
            min = min.min(local_distance(b, q, i.saturating_sub(4)..i + 5));
        }
        ensure((min - 2.5).abs() <= 0.1, || format!("{line}: min distance {min}"))?;
    }
    Ok(())
}

// 6
fn arrow_placement() -> Check {
    let Item::Draw { primitive, options } = parse_command(r"\Line[arrow,arrowpos=0.8](0,2)(30,2)").unwrap() else {
        unreachable!()
    };
    let style = resolve_options(PrimitiveKind::Line, &options, &DrawState::default()).unwrap();
    let base = Polyline::new(vec![Point::new(0.0, 2.0), Point::new(30.0, 2.0)]);
    let f = frame_at(&base, style.arrows[0].pos).map_err(|e| e.to_string())?;
    ensure(f.at.distance(Point::new(24.0, 2.0)) <= 1e-9, || format!("frame at {:?}", f.at))?;
    let out = realize(&primitive, &style, TOL).map_err(|e| e.to_string())?;
    let Some(Drawable::Fill { boundary, .. }) = out.iter().find(|d| matches!(d, Drawable::Fill { .. })) else {
        return Err("no arrowhead".into());
    };
    let p = boundary.points();
    let anchor = (p[0] + (p[1] + p[3]) * 0.5) * 0.5;
    ensure(anchor.distance(Point::new(24.0, 2.0)) <= 1e-9, || format!("head centered at {anchor:?}"))?;

    let strategy = (
        (-1e3f64..1e3, -1e3f64..1e3, 0.0f64..360.0),
        (0.5f64..40.0, 0.5f64..20.0, 0.0f64..0.99, 0.1f64..5.0, proptest::bool::ANY),
    );
    runner(100)
        .run(&strategy, |((x, y, deg), (length, width, inset, scale, flipped))| {
            let dir = Point::new(deg.to_radians().cos(), deg.to_radians().sin());
            let f = Frame::new(Point::new(x, y), dir).unwrap();
            let spec = ArrowSpec { pos: 0.5, length, width, inset, scale, flipped };
            let Drawable::Fill { boundary, .. } = arrowhead(&f, &spec, Color::BLACK) else { unreachable!() };
            let want = (1.0 - inset) * length * scale * width * scale / 2.0;
            let got = shoelace(boundary.points()).abs();
            proptest::prop_assert!((got - want).abs() <= 1e-9 * want.max(1.0), "area {} vs {}", got, want);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

// 7
fn dash_rule() -> Check {
    let strategy = (1.0f64..500.0, 0.05f64..50.0, 5.0f64..100.0).prop_filter("at least one piece", |(l, d, _)| l >= d);
    runner(50)
        .run(&strategy, |(length, dsize, radius)| {
            // an arc of the requested length, flattened finely
            let sweep = (length / radius).to_degrees().min(359.0);
            let pl = flatten_arc(Point::ZERO, radius, 0.0, sweep, 1e-3).unwrap();
            let total: f64 = pl.points().windows(2).map(|w| w[0].distance(w[1])).sum();
            let mut k = (total / dsize).floor() as usize;
            while k > 1 && k.is_multiple_of(2) {
                k -= 1;
            }
            let k = k.max(1);
            let pieces = dash_split(&pl, dsize);
            proptest::prop_assert_eq!(pieces.len(), k.div_ceil(2));
            for piece in &pieces {
                let len: f64 = piece.points().windows(2).map(|w| w[0].distance(w[1])).sum();
                proptest::prop_assert!((len - total / k as f64).abs() < 1e-9 * total.max(1.0));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

// 8
fn parser_round_trip() -> Check {
    ensure(CORPUS.len() >= 30, || "corpus too small".into())?;
    let src = document(200.0, 200.0, CORPUS);
    let d1 = parse_document(&src).map_err(|e| e.to_string())?;
    let d2 = parse_document(&serialize(&d1)).map_err(|e| e.to_string())?;
    let d3 = parse_document(&serialize(&d2)).map_err(|e| e.to_string())?;
    ensure(d2 == d3, || "second and third parse differ".into())?;
    let glue = parse_command(r"\GlueArc(100,50)(40,0,180){5}{4}").unwrap();
    let gluon = parse_command(r"\GluonArc(100,50)(40,0,180){5}{4}").unwrap();
    ensure(glue == gluon, || "GlueArc differs from GluonArc".into())?;
    let Item::Draw { primitive, options } = parse_command(r"\DashDoubleLine(0,0)(30,0){2}{3}").unwrap() else {
        unreachable!()
    };
    let want: OptionMap = [
        ("dash", OptionValue::Flag),
        ("double", OptionValue::Flag),
        ("dsize", OptionValue::Number(3.0)),
        ("sep", OptionValue::Number(2.0)),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    ensure(matches!(primitive, Primitive::Line { .. }) && options == want, || {
        format!("DashDoubleLine normalized to {primitive:?} {options:?}")
    })
}

// 9
fn compat_pipeline() -> Check {
    let cmds = [
        r"\Line(0,0)(10,0)",
        r"\Gluon(0,50)(60,50){5}{4}",
        r"\Arc[arrow](100,50)(40,0,180)",
        r"\Photon(0,0)(60,0){3}{6}",
        r"\Vertex(60,50){2}",
        r"\GCirc(50,50){10}{0.5}",
        r"\EBoxc(50,50)(20,10)",
        r"\Text(10,10){label}",
        r"\ZigZag(0,0)(60,0){3}{8}",
        r"\Bezier(0,0)(10,20)(30,20)(40,0)",
    ];
    let ids = [12, 3, 7, 1, 99, 4, 5, 60, 8, 2];
    let ax1: String = ids.iter().zip(cmds).map(|(id, c)| format!("{id};1;1;{c}\n")).collect();
    let ax2 = process_ax1(&ax1, TOL).map_err(|e| e.to_string())?;
    let got: Vec<u64> = ax2.lines().map(|l| l.split(" ; ").next().unwrap().parse().unwrap()).collect();
    ensure(got == ids, || format!("ids {got:?}"))?;

    let payload = ax2.lines().next().unwrap().splitn(3, " ; ").nth(2).unwrap();
    let d = parse_document(&document(100.0, 100.0, &[cmds[0]])).unwrap();
    let (_, _, content) = check_pdf(&emit_pdf(&d, TOL).map_err(|e| e.to_string())?);
    let stream: Vec<&str> = content.strip_prefix(CONTENT_PRELUDE).unwrap().split_whitespace().collect();
    let tokens: Vec<&str> = payload.split_whitespace().collect();
    ensure(tokens == stream, || format!("payload {tokens:?} vs stream {stream:?}"))
}

// 10
fn determinism() -> Check {
    let mut sources: Vec<String> = CORPUS.iter().map(|l| document(150.0, 150.0, &[l])).collect();
    sources.push(EXAMPLE.to_string());
    sources.push(document(200.0, 200.0, CORPUS));
    for src in &sources {
        let d = parse_document(src).map_err(|e| e.to_string())?;
        let svg = (emit_svg(&d, TOL).unwrap(), emit_svg(&d, TOL).unwrap());
        let pdf = (emit_pdf(&d, TOL).unwrap(), emit_pdf(&d, TOL).unwrap());
        ensure(svg.0 == svg.1 && pdf.0 == pdf.1, || format!("output differs for {src}"))?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("unit correction", unit_correction),
        ("golden end-to-end", golden_end_to_end),
        ("color table", color_table),
        ("gluon structure", gluon_structure),
        ("double lines", double_lines),
        ("arrow placement", arrow_placement),
        ("dash rule", dash_rule),
        ("parser round-trip", parser_round_trip),
        ("compat pipeline", compat_pipeline),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = std::panic::catch_unwind(check)
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        match result {
            Ok(()) => println!("[PASS] {:>2}. {name}", i + 1),
            Err(why) => {
                println!("[FAIL] {:>2}. {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
