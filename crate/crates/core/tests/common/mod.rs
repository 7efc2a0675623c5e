#![allow(dead_code)]

/// One line per command form.
pub const CORPUS: &[&str] = &[
    r"\Line(0,0)(10,10)",
    r"\Line[double,sep=2.5](0,2)(35,2)",
    r"\Line[arrow,arrowpos=0.8](0,2)(30,2)",
    r"\DashLine(0,0)(30,0){3}",
    r"\DoubleLine(0,0)(30,0){2}",
    r"\DashDoubleLine(0,0)(30,0){2}{3}",
    r"\ArrowLine(0,0)(30,0)",
    r"\LongArrow(0,0)(30,0)",
    r"\DashArrowLine(0,0)(30,0){3}",
    r"\DashLongArrow(0,0)(30,0){3}",
    r"\Arc(50,50)(20,0,90)",
    r"\CArc(50,50)(20,30,300)",
    r"\DashArc(50,50)(20,0,180){2}",
    r"\DashCArc(50,50)(20,0,180){2}",
    r"\DoubleArc(50,50)(20,0,180){2}",
    r"\ArrowArc(50,50)(20,0,180)",
    r"\LongArrowArc(50,50)(20,0,180)",
    r"\Bezier(0,0)(10,20)(30,20)(40,0)",
    r"\DashBezier(0,0)(10,20)(30,20)(40,0){2}",
    r"\Gluon(0,50)(60,50){5}{4}",
    r"\GluonArc(100,50)(40,0,180){5}{4}",
    r"\GlueArc(100,50)(40,0,180){5}{4}",
    r"\GluonCircle(50,50)(20,0){4}{10}",
    r"\Photon(0,0)(60,0){3}{6}",
    r"\PhotonArc(50,50)(20,0,180){3}{7}",
    r"\PhotonCircle(50,50)(20,0){2}{12}",
    r"\ZigZag(0,0)(60,0){3}{8}",
    r"\ZigZagArc(50,50)(20,0,180){3}{7}",
    r"\ZigZagCircle(50,50)(20,0){2}{12}",
    r"\Vertex(60,50){2}",
    r"\ECirc(50,50){10}",
    r"\GCirc(50,50){10}{0.5}",
    r"\EBox(0,0)(20,10)",
    r"\GBox(0,0)(20,10){Yellow}",
    r"\EBoxc(50,50)(20,10)",
    r"\Boxc(50,50)(20,10)",
    r"\GBoxc(50,50)(20,10){0.9}",
    r"\RBox(50,50)(20,10){30}",
    r"\GRBox(50,50)(20,10){45}{LightBlue}",
    r"\Polygon{(0,0)(10,0)(5,8)}",
    r"\FPolygon{(0,0)(10,0)(5,8)}{0.2,0.4,0.6}",
    r"\Oval(50,50)(10,20)(0)",
    r"\GOval(50,50)(10,20)(30){LightYellow}",
    r"\AxoGrid(0,0)(10,10)(5,3)",
    r"\Text(100,100){$\alpha P_1 + \beta P_2 + k_\perp$}",
    r"\Text[size=12](10,10){label}",
    r"\BText(50,50){box}",
    r"\GText(50,50){LightGray}{gray box}",
    r"\CText(50,50){Red}{Yellow}{oval}",
    r"\BTwoText(50,50){top}{bottom}",
    r"\GTwoText(50,50){VeryLightBlue}{top}{bottom}",
    r"\CTwoText(50,50){Blue}{LightRed}{top}{bottom}",
    r"\SetColor{Red}",
    r"\SetColor{0.5}",
    r"\SetColor{1,0,0}",
    r"\SetWidth{1}",
    r"\SetScale{1.5}",
    r"\Gluon[dash,dsize=2](0,0)(60,0){5}{4}",
    r"\Photon[double,sep=2](0,0)(60,0){3}{6}",
    r"\Line[arrow,arrowpos=0.3,arrowlength=6,arrowwidth=3,arrowinset=0.1,arrowscale=1.5,flip,color=Blue,width=1](0,0)(10,0)",
];

/// The worked example: a quark loop between two gluon lines.
pub const EXAMPLE: &str = r"\begin{axopicture}(200,110)
  \SetColor{Red}
  \Arc[arrow](100,50)(40,0,180)
  \Text(100,100){$\alpha P_1 + \beta P_2 + k_\perp$}
  \SetColor{Black}
  \Arc[arrow](100,50)(40,180,360)
  \Gluon(0,50)(60,50){5}{4}
  \Vertex(60,50){2}
  \Gluon(140,50)(200,50){5}{4}
  \Vertex(140,50){2}
\end{axopicture}
";

/// Wraps body lines in a picture environment.
pub fn document(width: f64, height: f64, body: &[&str]) -> String {
    let mut s = format!("\\begin{{axopicture}}({width},{height})\n");
    for line in body {
        s.push_str(line);
        s.push('\n');
    }
    s.push_str("\\end{axopicture}\n");
    s
}

/// Shoelace area of a closed polygon.
pub fn shoelace(pts: &[axoforge::geom::Point]) -> f64 {
    let mut a = 0.0;
    for w in pts.windows(2) {
        a += w[0].x * w[1].y - w[1].x * w[0].y;
    }
    a / 2.0
}

/// Independent reader for our own output: finds every `N 0 obj`, reads the
/// xref table and returns (object count, MediaBox, content stream).
pub fn check_pdf(pdf: &[u8]) -> (usize, Vec<f64>, String) {
    assert!(pdf.starts_with(b"%PDF-1.4\n"));
    assert!(pdf.ends_with(b"%%EOF\n"));
    // non-ASCII bytes become '?' so string indices stay byte offsets
    let text: String = pdf.iter().map(|&b| if b.is_ascii() { b as char } else { '?' }).collect();

    let startxref: usize = text
        .rsplit("startxref\n")
        .next()
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(pdf[startxref..].starts_with(b"xref\n"));
    let mut lines = text[startxref..].lines().skip(1);
    let header: Vec<usize> = lines.next().unwrap().split(' ').map(|v| v.parse().unwrap()).collect();
    assert_eq!(header[0], 0);
    let count = header[1];
    let entries: Vec<&str> = lines.by_ref().take(count).collect();
    assert_eq!(entries[0], "0000000000 65535 f ");
    let mut last = 0;
    for (id, e) in entries.iter().enumerate().skip(1) {
        assert_eq!(e.len(), 19, "entry plus newline is 20 bytes");
        let off: usize = e[..10].parse().unwrap();
        assert!(off > last);
        last = off;
        let marker = format!("{id} 0 obj\n");
        assert!(pdf[off..].starts_with(marker.as_bytes()), "object {id} at {off}");
    }
    // no object is missing from the table
    let objects = text.matches(" 0 obj\n").count();
    assert_eq!(objects, count - 1);
    assert!(text.contains(&format!("/Size {count}")));

    let mb_at = text.find("/MediaBox [").unwrap() + "/MediaBox [".len();
    let mb_end = mb_at + text[mb_at..].find(']').unwrap();
    let media: Vec<f64> = text[mb_at..mb_end].split(' ').map(|v| v.parse().unwrap()).collect();

    let len_at = text.find("/Length ").unwrap() + "/Length ".len();
    let len_end = len_at + text[len_at..].find(' ').unwrap();
    let length: usize = text[len_at..len_end].parse().unwrap();
    let start = text.find("stream\n").unwrap() + "stream\n".len();
    assert!(text[start + length..].starts_with("\nendstream"));
    let content = text[start..start + length].to_string();
    (count - 1, media, content)
}
