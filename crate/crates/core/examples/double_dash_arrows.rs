//! Shows how line options turn one primitive into several drawables.

use axoforge::model::{resolve_options, DrawState, Item};
use axoforge::parser::parse_command;
use axoforge::stroker::{realize, Drawable};

fn main() {
    for line in [
        r"\Line(0,0)(40,0)",
        r"\Line[double,sep=2.5](0,0)(40,0)",
        r"\Line[dash,dsize=3](0,0)(40,0)",
        r"\Line[arrow,arrowpos=0.8](0,2)(30,2)",
        r"\Photon[double,arrow](0,0)(60,0){3}{6}",
        r"\DashDoubleLine(0,0)(30,0){2}{3}",
    ] {
        let Item::Draw { primitive, options } = parse_command(line).expect("valid command") else {
            continue;
        };
        let style = resolve_options(primitive.kind(), &options, &DrawState::default()).expect("valid options");
        let out = realize(&primitive, &style, 0.05).expect("realizes");
        let strokes = out.iter().filter(|d| matches!(d, Drawable::Stroke { .. })).count();
        let fills = out.iter().filter(|d| matches!(d, Drawable::Fill { .. })).count();
        println!("{line:45} {strokes} strokes, {fills} fills");
    }
}
