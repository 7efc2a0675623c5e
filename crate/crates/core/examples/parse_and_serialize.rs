//! Parses a diagram, prints its canonical form and shows a rendered parse error.

use axoforge::parser::{parse_document, serialize};

const SOURCE: &str = include_str!("diagrams/two_loop.axo");

fn main() {
    let diagram = parse_document(SOURCE).expect("example parses");
    println!("{} items", diagram.items.len());
    print!("{}", serialize(&diagram));

    let broken = "\\begin{axopicture}(10,10)\n\\Gluon(0,0)(10,0){2}\n\\end{axopicture}\n";
    if let Err(e) = parse_document(broken) {
        println!("\n{}", e.render(broken));
    }
}
