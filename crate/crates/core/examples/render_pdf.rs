//! Renders a diagram to a one-page PDF.

use axoforge::backends::emit_pdf;
use axoforge::parser::parse_document;

fn main() {
    let diagram = parse_document(include_str!("diagrams/two_loop.axo")).expect("example parses");
    let pdf = emit_pdf(&diagram, 0.05).expect("renders");
    let path = std::env::args().nth(1).unwrap_or_else(|| "two_loop.pdf".into());
    std::fs::write(&path, &pdf).expect("write pdf");
    println!("wrote {} bytes to {path}", pdf.len());
}
