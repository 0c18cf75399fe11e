//! Command-line interface. Exit codes: 0 success, 1 other failure, 2 parse
//! error, 3 invalid arrangement, 4 verification failure, 5 cap exceeded.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coloring::{
    degree_ge4_coloring, greedy_cell_coloring, greedy_pl_coloring, line_respecting_coloring, lll_coloring,
    Coloring, LllParams,
};
use crate::construct::{
    construct_efl_reduction, construct_gap, construct_polygon_cell, construct_twisted_bundles,
};
use crate::diagram::{Arrangement, WiringDiagram};
use crate::error::Error;
use crate::format::{parse_coloring, parse_wd, serialize_coloring, serialize_report, serialize_wd};
use crate::generate::{enumerate_all, enumerate_canonical, gen_random, gen_random_simple, gen_trivial};
use crate::graph::Graph;
use crate::oracles::{
    min_colors, mx_gap_scan, search_simultaneous_counterexample, verify_coloring, Minimum, Mode, MxGapOptions,
    ScanOptions,
};
use crate::render::{render_svg, RenderSpec};
use crate::topology::build_cells;

pub const SEED_ENV: &str = "PSEUDOLINE_SEED";

#[derive(Debug, Parser)]
#[command(name = "pseudoline", version, about = "Pseudoline arrangements as wiring diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated or constructed diagram as `.wd`.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
        /// Output file (stdout if omitted); a directory for `enumerate`.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Check that every pair of wires crosses exactly once.
    Validate { input: PathBuf },
    /// Crossing, cell and degree statistics.
    Stats { input: PathBuf },
    /// Run a coloring algorithm and verify its output.
    Color {
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: ColorMode,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        /// Color budget for `line`.
        #[arg(long)]
        budget: Option<usize>,
        /// Lowest forbidden degree for `lll`.
        #[arg(long, default_value_t = 3)]
        l: usize,
        /// Forbidden degrees for `lll` are `l..=l+r`.
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exact minimum number of colors.
    Exact {
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: ExactMode,
        #[arg(long)]
        cap: Option<usize>,
        /// Where to write the optimal coloring.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive or sampled searches.
    Search {
        #[arg(value_enum)]
        kind: SearchArg,
        #[arg(long)]
        n: usize,
        /// Witness threshold for `simultaneous` (default n + 1).
        #[arg(long)]
        threshold: Option<usize>,
        /// Enumeration index to start from.
        #[arg(long, default_value_t = 0)]
        start: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        max_witnesses: Option<usize>,
        /// `mx-gap`: sample this many random diagrams instead of enumerating.
        #[arg(long)]
        samples: Option<usize>,
        /// Merge probability for sampled diagrams.
        #[arg(long, default_value_t = 0.3)]
        merge: f64,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Draw a diagram as SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = 30.0)]
        wire_spacing: f64,
        #[arg(long, default_value_t = 40.0)]
        event_spacing: f64,
        /// Comma-separated display colors.
        #[arg(long, value_delimiter = ',')]
        palette: Option<Vec<String>>,
        #[arg(long)]
        no_labels: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenerateKind {
    /// Random simple arrangement.
    Simple {
        n: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
    },
    /// Random arrangement with merged crossings.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        merge: f64,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
    },
    /// All wires through one point.
    Trivial { n: usize },
    /// Arrangement with a cell bounded by all `n` wires.
    Polygon { n: usize },
    TwistedBundles { k: usize, n: usize },
    Gap { r: usize },
    EflReduction(GraphArg),
    /// Every diagram on `n` wires, one file each.
    Enumerate {
        n: usize,
        /// One representative per reflection class.
        #[arg(long)]
        canonical: bool,
    },
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// `K<n>`, `P<n>`, `E<n>` or `n:a-b,c-d` with 0-based vertices.
    pub graph: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ColorMode {
    Cell,
    Line,
    Pl,
    Deg4,
    Lll,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ExactMode {
    Cell,
    Line,
    Pl,
    Simultaneous,
}

impl From<ExactMode> for Mode {
    fn from(m: ExactMode) -> Mode {
        match m {
            ExactMode::Cell => Mode::Cell,
            ExactMode::Line => Mode::Line,
            ExactMode::Pl => Mode::Pl,
            ExactMode::Simultaneous => Mode::Simultaneous,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SearchArg {
    Simultaneous,
    MxGap,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::IllegalEvent { .. } | Error::NoWires => 2,
            Error::InvalidArrangement(_) => 3,
            Error::CapExceeded { .. } => 5,
            _ => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn io_fail(path: &Path, e: io::Error) -> Failure {
    Failure { code: 1, msg: format!("{}: {e}", path.display()) }
}

/// Parses an input graph description.
pub fn parse_graph(s: &str) -> Result<Graph, Error> {
    let bad = || Error::InvalidParameter(format!("cannot read graph {s:?}"));
    let s = s.trim();
    if let Some((n, edges)) = s.split_once(':') {
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let mut list = Vec::new();
        for e in edges.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (a, b) = e.split_once('-').ok_or_else(bad)?;
            list.push((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?));
        }
        return Graph::new(n, list);
    }
    let (kind, n) = s.split_at(1);
    let n: usize = n.parse().map_err(|_| bad())?;
    match kind {
        "K" | "k" => Ok(Graph::complete(n)),
        "P" | "p" => Ok(Graph::path(n)),
        "E" | "e" => Ok(Graph::empty(n)),
        _ => Err(bad()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_fail(path, e))
}

fn load(path: &Path) -> Result<Arrangement, Failure> {
    Ok(Arrangement::new(parse_wd(&read(path)?)?)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| io_fail(p, e)),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure { code: 1, msg: e.to_string() }),
    }
}

/// Prints to stdout, or to stderr when stdout carries the main output.
fn note(to_stderr: bool, msg: &str) {
    if to_stderr {
        eprintln!("{msg}");
    } else {
        println!("{msg}");
    }
}

fn generate(kind: &GenerateKind, out: Option<&Path>) -> Result<(), Failure> {
    let arr = match kind {
        GenerateKind::Simple { n, seed } => gen_random_simple(*n, *seed)?,
        GenerateKind::Random { n, merge, seed } => gen_random(*n, *seed, *merge)?,
        GenerateKind::Trivial { n } => gen_trivial(*n)?,
        GenerateKind::Polygon { n } => construct_polygon_cell(*n)?,
        GenerateKind::TwistedBundles { k, n } => construct_twisted_bundles(*k, *n)?,
        GenerateKind::Gap { r } => construct_gap(*r)?,
        GenerateKind::EflReduction(g) => construct_efl_reduction(&parse_graph(&g.graph)?)?.arrangement,
        GenerateKind::Enumerate { n, canonical } => {
            let dir = out.ok_or_else(|| Failure { code: 1, msg: "enumerate needs --out DIR".into() })?;
            fs::create_dir_all(dir).map_err(|e| io_fail(dir, e))?;
            let it = if *canonical { enumerate_canonical(*n)? } else { enumerate_all(*n)? };
            let mut count = 0;
            for (i, d) in it.enumerate() {
                let p = dir.join(format!("n{n}_{i:06}.wd"));
                fs::write(&p, serialize_wd(&d)).map_err(|e| io_fail(&p, e))?;
                count += 1;
            }
            println!("wrote {count} diagrams to {}", dir.display());
            return Ok(());
        }
    };
    emit(out, &serialize_wd(arr.diagram()))
}

fn validate(path: &Path) -> Result<(), Failure> {
    let d: WiringDiagram = parse_wd(&read(path)?)?;
    let report = d.validate();
    println!("{report}");
    if report.valid {
        Ok(())
    } else {
        Err(Failure { code: 3, msg: "invalid arrangement".into() })
    }
}

fn stats(path: &Path) -> Result<(), Failure> {
    let arr = load(path)?;
    let cx = build_cells(&arr);
    println!("wires {}", arr.n());
    println!("crossings {}", arr.num_crossings());
    println!("simple {}", arr.is_simple());
    println!("mx {}", arr.mx());
    println!("ordinary {}", arr.ordinary_points().len());
    let hist: Vec<String> = arr
        .degree_histogram()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(d, c)| format!("{d}:{c}"))
        .collect();
    println!("degrees {}", hist.join(" "));
    println!("cells {}", cx.num_cells());
    println!("bounded {}", cx.num_bounded());
    println!("max_boundary {}", cx.max_boundary());
    Ok(())
}

fn color(
    path: &Path,
    mode: ColorMode,
    seed: u64,
    budget: Option<usize>,
    l: usize,
    r: usize,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let arr = load(path)?;
    let (verify_mode, col): (Mode, Coloring) = match mode {
        ColorMode::Cell => (Mode::Cell, greedy_cell_coloring(&arr)),
        ColorMode::Line => (Mode::Line, line_respecting_coloring(&arr, budget)?),
        ColorMode::Pl => (Mode::Pl, greedy_pl_coloring(&arr)),
        ColorMode::Deg4 => (Mode::PlDegreeAtLeast(4), degree_ge4_coloring(&arr, seed)?),
        ColorMode::Lll => {
            let col = lll_coloring(&arr, &LllParams::new(l, r, seed))?;
            // crossings above l + r are not constrained; verify only the range
            let bad = arr.crossings().iter().any(|c| {
                (l..=l + r).contains(&c.degree()) && c.lines.iter().all(|&w| col.line_color(w) == col.line_color(c.lines[0]))
            });
            if bad {
                return Err(Failure { code: 4, msg: "verification failed: monochromatic crossing in range".into() });
            }
            emit(out, &serialize_coloring(Mode::PlDegreeAtLeast(l), &col))?;
            note(out.is_none(), &format!("K {}", col.num_colors()));
            note(out.is_none(), &format!("verified degrees {l}..={}", l + r));
            return Ok(());
        }
    };
    let violations = verify_coloring(&arr, &col, verify_mode)?;
    emit(out, &serialize_coloring(verify_mode, &col))?;
    note(out.is_none(), &format!("K {}", col.num_colors()));
    if violations.is_empty() {
        note(out.is_none(), "verified");
        Ok(())
    } else {
        for v in &violations {
            eprintln!("{v:?}");
        }
        Err(Failure { code: 4, msg: format!("verification failed: {} violations", violations.len()) })
    }
}

fn exact(path: &Path, mode: Mode, cap: Option<usize>, out: Option<&Path>) -> Result<(), Failure> {
    let arr = load(path)?;
    match min_colors(&arr, mode, cap)? {
        Minimum::Exact { colors, witness } => {
            if !verify_coloring(&arr, &witness, mode)?.is_empty() {
                return Err(Failure { code: 4, msg: "optimal coloring failed verification".into() });
            }
            println!("minimum {colors}");
            if let Some(p) = out {
                emit(Some(p), &serialize_coloring(mode, &witness))?;
            }
            Ok(())
        }
        Minimum::ExceedsCap { cap } => {
            println!("exceeds cap {cap}");
            Err(Failure { code: 5, msg: format!("minimum exceeds cap {cap}") })
        }
    }
}

pub fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate { kind, out } => generate(&kind, out.as_deref()),
        Command::Validate { input } => validate(&input),
        Command::Stats { input } => stats(&input),
        Command::Color { input, mode, seed, budget, l, r, out } => color(&input, mode, seed, budget, l, r, out.as_deref()),
        Command::Exact { input, mode, cap, out } => exact(&input, mode.into(), cap, out.as_deref()),
        Command::Search { kind, n, threshold, start, limit, max_witnesses, samples, merge, seed, out } => {
            let scan = ScanOptions { start, limit, max_witnesses };
            let report = match (kind, samples) {
                (SearchArg::Simultaneous, _) => search_simultaneous_counterexample(n, threshold, &scan)?,
                (SearchArg::MxGap, None) => mx_gap_scan(n, &MxGapOptions::Enumerate(scan))?,
                (SearchArg::MxGap, Some(count)) => {
                    mx_gap_scan(n, &MxGapOptions::Sample { count, seed, merge, max_witnesses })?
                }
            };
            emit(out.as_deref(), &serialize_report(&report))?;
            eprintln!("elapsed {:.3}s", report.elapsed.as_secs_f64());
            Ok(())
        }
        Command::Render { input, coloring, wire_spacing, event_spacing, palette, no_labels, out } => {
            let arr = load(&input)?;
            let col = match coloring {
                Some(p) => Some(parse_coloring(&read(&p)?)?.coloring),
                None => None,
            };
            let mut spec = RenderSpec { wire_spacing, event_spacing, labels: !no_labels, ..RenderSpec::default() };
            if let Some(p) = palette {
                spec.palette = p;
            }
            emit(out.as_deref(), &render_svg(&arr, col.as_ref(), &spec)?)
        }
    }
}

/// Entry point for the binary.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
