//! Renders a diagram to SVG. Writes to the path given as the first argument,
//! or to standard output.

use axoforge::backends::emit_svg;
use axoforge::parser::parse_document;

fn main() {
    let diagram = parse_document(include_str!("diagrams/two_loop.axo")).expect("example parses");
    let svg = emit_svg(&diagram, 0.05).expect("renders");
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(path, svg).expect("write svg"),
        None => print!("{svg}"),
    }
}
