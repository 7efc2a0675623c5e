//! Compiler for the axodraw2 diagram language: parses `.axo` sources into a
//! typed scene, computes the curve geometry and writes SVG or PDF.
//!
//! ```
//! use axoforge::{backends::emit_svg, parser::parse_document};
//!
//! let src = "\\begin{axopicture}(60,20)\n\\Gluon(0,10)(60,10){5}{4}\n\\end{axopicture}\n";
//! let diagram = parse_document(src).unwrap();
//! let svg = emit_svg(&diagram, 0.05).unwrap();
//! assert!(svg.contains("class=\"gluon\""));
//! ```

pub mod backends;
pub mod cli;
pub mod compat;
pub mod geom;
pub mod model;
pub mod parser;
pub mod stroker;
