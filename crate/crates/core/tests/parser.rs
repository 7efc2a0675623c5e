mod common;

use axoforge::geom::{Carrier, Point, WigglyKind};
use axoforge::model::{Color, Item, OptionMap, OptionValue, Paint, Primitive};
use axoforge::parser::{parse_command, parse_document, serialize, ParseError};
use common::{document, CORPUS, EXAMPLE};
use proptest::prelude::*;

fn draw(item: &Item) -> (&Primitive, &OptionMap) {
    match item {
        Item::Draw { primitive, options } => (primitive, options),
        other => panic!("expected a drawing command, got {other:?}"),
    }
}

#[test]
fn corpus_covers_every_command() {
    let names = [
        "Line", "DashLine", "DoubleLine", "DashDoubleLine", "ArrowLine", "LongArrow",
        "DashArrowLine", "DashLongArrow", "Arc", "CArc", "DashArc", "DashCArc", "DoubleArc",
        "ArrowArc", "LongArrowArc", "Bezier", "DashBezier", "Gluon", "GluonArc", "GlueArc",
        "GluonCircle", "Photon", "PhotonArc", "PhotonCircle", "ZigZag", "ZigZagArc",
        "ZigZagCircle", "Vertex", "ECirc", "GCirc", "EBox", "GBox", "EBoxc", "Boxc", "GBoxc",
        "RBox", "GRBox", "Polygon", "FPolygon", "Oval", "GOval", "AxoGrid", "Text", "BText",
        "GText", "CText", "BTwoText", "GTwoText", "CTwoText", "SetColor", "SetWidth", "SetScale",
    ];
    for name in names {
        let prefix = format!("\\{name}");
        assert!(
            CORPUS.iter().any(|l| l.starts_with(&prefix)
                && l[prefix.len()..].starts_with(['(', '{', '['])),
            "corpus lacks {name}"
        );
    }
    assert!(CORPUS.len() >= 30);
    for line in CORPUS {
        parse_command(line).unwrap_or_else(|e| panic!("{line}: {e}"));
    }
}

#[test]
fn corpus_round_trip_is_a_fixed_point() {
    let src = document(200.0, 200.0, CORPUS);
    let d1 = parse_document(&src).unwrap();
    let s1 = serialize(&d1);
    let d2 = parse_document(&s1).unwrap();
    let s2 = serialize(&d2);
    let d3 = parse_document(&s2).unwrap();
    assert_eq!(d2, d3);
    assert_eq!(s1, s2);
    // every corpus number has at most 6 significant digits, so nothing is lost
    assert_eq!(d1, d2);
}

#[test]
fn each_command_round_trips_alone() {
    for line in CORPUS {
        let d1 = parse_document(&document(100.0, 100.0, &[line])).unwrap();
        let d2 = parse_document(&serialize(&d1)).unwrap();
        assert_eq!(d1, d2, "{line}");
    }
}

#[test]
fn worked_example_parses_in_order() {
    let d = parse_document(EXAMPLE).unwrap();
    assert_eq!((d.canvas.width, d.canvas.height), (200.0, 110.0));
    assert_eq!(d.items.len(), 9);
    assert_eq!(d.items[0], Item::SetColor(Paint::Named("Red".into())));
    let (arc, opts) = draw(&d.items[1]);
    assert!(matches!(arc, Primitive::Arc { theta1, theta2, .. } if *theta1 == 0.0 && *theta2 == 180.0));
    assert_eq!(opts.get("arrow"), Some(&OptionValue::Flag));
    assert!(matches!(draw(&d.items[2]).0, Primitive::TextLabel { content, .. } if content == r"$\alpha P_1 + \beta P_2 + k_\perp$"));
    assert_eq!(d.items[3], Item::SetColor(Paint::Named("Black".into())));
    assert!(matches!(draw(&d.items[4]).0, Primitive::Arc { theta1, .. } if *theta1 == 180.0));
    for i in [5, 7] {
        let (p, _) = draw(&d.items[i]);
        assert!(matches!(p, Primitive::Wiggly { spec, .. } if spec.kind == WigglyKind::Gluon && spec.count == 4 && spec.amplitude == 5.0));
    }
    for i in [6, 8] {
        assert!(matches!(draw(&d.items[i]).0, Primitive::Vertex { radius, .. } if *radius == 2.0));
    }
}

#[test]
fn worked_example_canonical_text() {
    let d = parse_document(EXAMPLE).unwrap();
    let canonical = serialize(&d);
    assert_eq!(canonical, EXAMPLE);
    assert_eq!(parse_document(&canonical).unwrap(), d);
}

#[test]
fn synonyms_normalize() {
    let glue = parse_command(r"\GlueArc(100,50)(40,0,180){5}{4}").unwrap();
    let gluon = parse_command(r"\GluonArc(100,50)(40,0,180){5}{4}").unwrap();
    assert_eq!(glue, gluon);
    assert!(matches!(draw(&gluon).0, Primitive::Wiggly { carrier: Carrier::Arc { .. }, .. }));

    assert_eq!(
        parse_command(r"\CArc(1,2)(3,10,20)").unwrap(),
        parse_command(r"\Arc(1,2)(3,10,20)").unwrap()
    );
    assert_eq!(
        parse_command(r"\Boxc(1,2)(3,4)").unwrap(),
        parse_command(r"\EBoxc(1,2)(3,4)").unwrap()
    );
    assert_eq!(
        parse_command(r"\DashDoubleLine(0,0)(30,0){2}{3}").unwrap(),
        parse_command(r"\Line[dash,double,dsize=3,sep=2](0,0)(30,0)").unwrap()
    );
    assert_eq!(
        parse_command(r"\LongArrow(0,0)(30,0)").unwrap(),
        parse_command(r"\Line[arrow,arrowpos=1](0,0)(30,0)").unwrap()
    );
    assert_eq!(
        parse_command(r"\RBox(1,2)(3,4){0}").unwrap(),
        parse_command(r"\EBoxc(1,2)(3,4)").unwrap()
    );
}

#[test]
fn paints() {
    let fill = |line: &str| match draw(&parse_command(line).unwrap()).0 {
        Primitive::FilledCircle { fill, .. } => fill.clone(),
        other => panic!("{other:?}"),
    };
    assert_eq!(fill(r"\GCirc(0,0){1}{Red}"), Paint::Named("Red".into()));
    assert_eq!(fill(r"\GCirc(0,0){1}{0.25}"), Paint::Gray(0.25));
    assert_eq!(fill(r"\GCirc(0,0){1}{ 1 , 0.5 , 0 }"), Paint::Rgb(1.0, 0.5, 0.0));
    assert_eq!(Paint::Gray(0.25).resolve().unwrap(), Color::gray(0.25));
}

#[test]
fn whitespace_and_comments() {
    let src = "% header comment\n\n\\begin{axopicture}(10,10) % size\n  \\Line ( 0 , 0 ) ( 1 , 1 )   % a line\n\n\\end{axopicture}\n% trailing\n";
    let d = parse_document(src).unwrap();
    assert_eq!(d.items.len(), 1);
    assert_eq!(
        draw(&d.items[0]).0,
        &Primitive::Line {
            from: Point::ZERO,
            to: Point::new(1.0, 1.0)
        }
    );
    // several commands on one line
    let d = parse_document("\\begin{axopicture}(10,10)\\Line(0,0)(1,1)\\Vertex(1,1){1}\\end{axopicture}").unwrap();
    assert_eq!(d.items.len(), 2);
}

fn err(line: &str) -> ParseError {
    parse_command(line).unwrap_err()
}

#[test]
fn error_messages_and_spans() {
    let e = err(r"\Line[arrow,arrowpos](0,0)(1,1");
    assert!(e.message.contains("expected ')'"));
    assert_eq!(e.span.column, 31);

    let e = err(r"\Glun(0,0)(1,1){1}{2}");
    assert!(e.message.contains("unknown command"));
    assert_eq!((e.span.column, e.span.length), (1, 5));

    let e = err(r"\Gluon(0,50)(60,50){5}{4.5}");
    assert!(e.message.contains("whole number"));
    assert_eq!(e.span.column, 23);

    let e = err(r"\Line[sep=](0,0)(1,1)");
    assert!(e.message.contains("bad value"));
    assert_eq!(e.span.column, 7);

    let e = err(r"\Line[color=Rde](0,0)(1,1)");
    assert!(e.message.contains("Red"), "{}", e.message);

    let e = err(r"\Line[wobble](0,0)(1,1)");
    assert!(e.message.contains("unknown option"));

    let e = err(r"\Line(0,0)(1,1e3)");
    assert!(e.message.contains("expected ')'"));

    let e = err(r"\Arc(0,0)(0,0,90)");
    assert!(e.message.contains("radius"));

    let e = err(r"\Line(0,0)(1,1) x");
    assert!(e.message.contains("unexpected"));

    let e = err(r"\Text(0,0){unclosed {brace}");
    assert!(e.message.contains("unbalanced"));
}

#[test]
fn document_errors_point_at_their_line() {
    let cases: &[(&str, usize, &str)] = &[
        ("\\begin{axopicture}(10,10)\n\\Line(0,0)(1,1)\n", 2, "missing \\end"),
        ("\\Line(0,0)(1,1)\n", 1, "\\begin{axopicture}"),
        ("", 1, "missing \\begin"),
        ("\\begin{axopicture}(10,-1)\n\\end{axopicture}", 1, "positive"),
        ("\\begin{axopicture}(10,10)\n\\Line(0,0)(1,1)\n\\Vertex(0,0){-1}\n\\end{axopicture}", 3, "positive"),
        ("\\begin{axopicture}(10,10)\n\\end{axopicture}\n\\Line(0,0)(1,1)", 3, "after"),
        ("\\begin{axopicture}(10,10)\nLine(0,0)(1,1)\n\\end{axopicture}", 2, "expected a command"),
    ];
    for (src, line, needle) in cases {
        let e = parse_document(src).unwrap_err();
        assert_eq!(e.span.line, *line, "{src:?}: {e}");
        assert!(e.message.contains(needle), "{src:?}: {e}");
        check_span_in_line(src, &e);
    }
}

fn check_span_in_line(src: &str, e: &ParseError) {
    let lines: Vec<&str> = src.lines().collect();
    let len = lines.get(e.span.line - 1).map_or(0, |l| l.chars().count());
    assert!(e.span.line >= 1 && e.span.line <= lines.len().max(1), "{e:?}");
    assert!(e.span.column >= 1, "{e:?}");
    assert!(e.span.column + e.span.length <= len + 1, "{e:?} in line of {len} chars");
    assert!(!e.message.is_empty());
}

#[test]
fn render_shows_the_caret() {
    let src = "\\begin{axopicture}(10,10)\n\\Line(0,0)(1,\n\\end{axopicture}";
    let e = parse_document(src).unwrap_err();
    let shown = e.render(src);
    assert!(shown.contains("2:14"));
    assert!(shown.contains("\\Line(0,0)(1,"));
}

fn number() -> impl Strategy<Value = f64> {
    (-100_000i32..100_000).prop_map(|v| v as f64 / 100.0)
}

fn positive() -> impl Strategy<Value = f64> {
    (1i32..100_000).prop_map(|v| v as f64 / 100.0)
}

fn command() -> impl Strategy<Value = String> {
    prop_oneof![
        (number(), number(), number(), number())
            .prop_map(|(a, b, c, d)| format!(r"\Line({a},{b})({c},{d})")),
        (number(), number(), positive(), number(), number())
            .prop_filter("open arc", |(_, _, _, t1, t2)| t1 != t2)
            .prop_map(|(x, y, r, t1, t2)| format!(r"\Arc[arrow,arrowpos=0.25]({x},{y})({r},{t1},{t2})")),
        (number(), number(), number(), positive(), 1u32..30)
            .prop_filter("open segment", |(x1, _, x2, _, _)| x1 != x2)
            .prop_map(|(x1, y, x2, a, n)| format!(r"\Gluon({x1},{y})({x2},{y}){{{a}}}{{{n}}}")),
        (number(), number(), positive(), positive(), number())
            .prop_map(|(x, y, w, h, r)| format!(r"\GRBox({x},{y})({w},{h}){{{r}}}{{0.3,0.2,1}}")),
        (positive(), positive()).prop_map(|(s, d)| format!(r"\DashDoubleLine(0,0)(5,5){{{s}}}{{{d}}}")),
        "[a-z ]{0,12}".prop_map(|t| format!(r"\Text[size=7](0,0){{{t}}}")),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generated_documents_round_trip(cmds in prop::collection::vec(command(), 0..8)) {
        let body: Vec<&str> = cmds.iter().map(String::as_str).collect();
        let d1 = parse_document(&document(100.0, 80.0, &body)).unwrap();
        let d2 = parse_document(&serialize(&d1)).unwrap();
        prop_assert_eq!(&d1, &d2);
        prop_assert_eq!(serialize(&d1), serialize(&d2));
    }

    #[test]
    fn arbitrary_input_never_panics(src in "\\PC{0,80}") {
        if let Err(e) = parse_document(&src) {
            check_span_in_line(&src, &e);
        }
    }

    #[test]
    fn mangled_commands_report_spans_in_line(idx in 0..CORPUS.len(), cut in 0usize..200, junk in "[(){}\\[\\],.=a-z0-9-]{0,3}") {
        let line = CORPUS[idx];
        let cut = cut.min(line.len());
        let cut = (0..=cut).rev().find(|&i| line.is_char_boundary(i)).unwrap();
        let mangled = format!("{}{}", &line[..cut], junk);
        let src = document(10.0, 10.0, &[&mangled]);
        if let Err(e) = parse_document(&src) {
            check_span_in_line(&src, &e);
        }
    }
}
