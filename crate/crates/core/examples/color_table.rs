//! Lists the named colors and resolves a few paint specifications.

use axoforge::model::{color_lookup, named_colors};

fn main() {
    for (name, c) in named_colors() {
        println!("{name:16} {:.2} {:.2} {:.2}", c.r, c.g, c.b);
    }
    for name in ["Red", "LightBlue", "Octarine"] {
        match color_lookup(name) {
            Ok(c) => println!("{name} -> {c:?}"),
            Err(e) => println!("{name} -> {e}"),
        }
    }
}
