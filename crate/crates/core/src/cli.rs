//! Command-line front end.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::backends::{emit_pdf, emit_svg};
use crate::compat::process_ax1;
use crate::geom::{Point, DEFAULT_TOLERANCE};
use crate::model::{named_colors, Diagram, Item, OptionMap, Primitive};
use crate::parser::{parse_document, serialize};

/// Exit status for bad input files.
pub const EXIT_INPUT: i32 = 1;
/// Exit status for bad command lines.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "axoforge", version, about = "Feynman diagram compiler for .axo sources")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Svg,
    Pdf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Render one or more .axo files to SVG or PDF.
    Render {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Output file, or a directory when several inputs are given.
        #[arg(short, long)]
        output: PathBuf,
        /// Output format; defaults to the output file extension.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Flattening tolerance in pt.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        /// Overlay a layout grid with this cell size in pt.
        #[arg(long, value_name = "CELL")]
        grid: Option<f64>,
    },
    /// Parse files and report diagnostics.
    Check {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Print the canonical form of each file.
        #[arg(long)]
        canonical: bool,
    },
    /// Read NAME.ax1 and write NAME.ax2.
    Compat {
        name: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// List the named colors.
    Colors,
}

fn format_for(path: &Path, explicit: Option<Format>) -> Result<Format, String> {
    if let Some(f) = explicit {
        return Ok(f);
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("svg") => Ok(Format::Svg),
        Some(e) if e.eq_ignore_ascii_case("pdf") => Ok(Format::Pdf),
        _ => Err(format!(
            "cannot infer the output format of {}; use --format",
            path.display()
        )),
    }
}

/// Appends an overlay grid covering the picture.
fn add_grid(d: &mut Diagram, cell: f64) {
    let c = d.canvas;
    d.items.push(Item::SetScale(1.0));
    d.items.push(Item::Draw {
        primitive: Primitive::Grid {
            origin: Point::new(c.origin.x, c.origin.y),
            cell_width: cell,
            cell_height: cell,
            cols: ((c.width / cell).ceil() as u32).max(1),
            rows: ((c.height / cell).ceil() as u32).max(1),
        },
        options: OptionMap::new(),
    });
}

fn read_source(path: &Path) -> Result<String, String> {
    let bytes = fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    String::from_utf8(bytes).map_err(|_| format!("{}: not valid UTF-8", path.display()))
}

fn render_one(
    input: &Path,
    output: &Path,
    format: Format,
    tol: f64,
    grid: Option<f64>,
) -> Result<(), String> {
    let src = read_source(input)?;
    let mut diagram =
        parse_document(&src).map_err(|e| format!("{}\n{}", input.display(), e.render(&src)))?;
    if let Some(cell) = grid {
        add_grid(&mut diagram, cell);
    }
    let bytes = match format {
        Format::Svg => emit_svg(&diagram, tol).map(String::into_bytes),
        Format::Pdf => emit_pdf(&diagram, tol),
    }
    .map_err(|e| format!("{}: {e}", input.display()))?;
    fs::write(output, bytes).map_err(|e| format!("{}: {e}", output.display()))
}

fn render(
    inputs: &[PathBuf],
    output: &Path,
    format: Option<Format>,
    tol: f64,
    grid: Option<f64>,
) -> i32 {
    if !(tol > 0.0 && tol.is_finite()) || grid.is_some_and(|g| !(g > 0.0 && g.is_finite())) {
        eprintln!("error: --tol and --grid need positive values");
        return EXIT_USAGE;
    }
    let jobs: Vec<(PathBuf, PathBuf, Format)> = if inputs.len() == 1 {
        match format_for(output, format) {
            Ok(f) => vec![(inputs[0].clone(), output.to_path_buf(), f)],
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
    } else {
        let Some(f) = format else {
            eprintln!("error: --format is required with several inputs");
            return EXIT_USAGE;
        };
        if let Err(e) = fs::create_dir_all(output) {
            eprintln!("error: {}: {e}", output.display());
            return EXIT_INPUT;
        }
        let ext = match f {
            Format::Svg => "svg",
            Format::Pdf => "pdf",
        };
        inputs
            .iter()
            .map(|i| {
                let stem = i.file_stem().unwrap_or(i.as_os_str());
                (i.clone(), output.join(stem).with_extension(ext), f)
            })
            .collect()
    };

    let results: Vec<Result<(), String>> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|(i, o, f)| s.spawn(move || render_one(i, o, *f, tol, grid)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err("internal error".into())))
            .collect()
    });
    let mut status = 0;
    for r in results {
        if let Err(e) = r {
            eprintln!("error: {e}");
            status = EXIT_INPUT;
        }
    }
    status
}

fn check(inputs: &[PathBuf], canonical: bool) -> i32 {
    let mut status = 0;
    for input in inputs {
        let parsed = read_source(input).and_then(|src| {
            parse_document(&src)
                .map_err(|e| e.render(&src))
                .and_then(|d| d.resolve().map(|_| d).map_err(|e| format!("error: {e}")))
        });
        match parsed {
            Ok(d) if canonical => print!("{}", serialize(&d)),
            Ok(d) => println!("{}: ok, {} items", input.display(), d.items.len()),
            Err(e) => {
                eprintln!("{}\n{e}", input.display());
                status = EXIT_INPUT;
            }
        }
    }
    status
}

fn compat(name: &Path, tol: f64) -> i32 {
    let ax1 = name.with_extension("ax1");
    let ax2 = name.with_extension("ax2");
    let result = read_source(&ax1)
        .and_then(|src| process_ax1(&src, tol).map_err(|e| format!("{}: {e}", ax1.display())))
        .and_then(|out| fs::write(&ax2, out).map_err(|e| format!("{}: {e}", ax2.display())));
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

/// Runs the tool with `args` (the first one is the program name) and
/// returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match cli.command {
        Command::Render {
            inputs,
            output,
            format,
            tol,
            grid,
        } => render(&inputs, &output, format, tol, grid),
        Command::Check { inputs, canonical } => check(&inputs, canonical),
        Command::Compat { name, tol } => compat(&name, tol),
        Command::Colors => {
            for (name, c) in named_colors() {
                println!("{name}\t{}\t{}\t{}", c.r, c.g, c.b);
            }
            0
        }
    }
}
