//! Verifiers, exact solvers and exhaustive searches used to check the
//! constructive algorithms independently.

mod exact;
mod search;

pub use exact::{chi_graph, min_colors, Minimum};
pub use search::{
    mx_gap_scan, search_simultaneous_counterexample, sigma_bounds_check, Bound, MxGapOptions, ScanOptions,
    SearchKind, SearchReport, SigmaReport, Witness,
};

use std::fmt;
use std::str::FromStr;

use crate::coloring::{Coloring, Domain};
use crate::diagram::Arrangement;
use crate::error::{Error, Result};
use crate::topology::{build_cells, CellId};

/// Which coloring constraint is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Crossings: no color twice on a cell boundary.
    Cell,
    /// Crossings: no color twice along a pseudoline.
    Line,
    /// Crossings: `Cell` and `Line` together.
    Simultaneous,
    /// Pseudolines: no monochromatic crossing.
    Pl,
    /// Pseudolines: no monochromatic crossing of degree at least `l`.
    PlDegreeAtLeast(usize),
}

impl Mode {
    pub fn domain(self) -> Domain {
        match self {
            Mode::Cell | Mode::Line | Mode::Simultaneous => Domain::Crossings,
            Mode::Pl | Mode::PlDegreeAtLeast(_) => Domain::Lines,
        }
    }

    /// Search cap used when none is given.
    pub fn default_cap(self, n: usize) -> usize {
        match self {
            Mode::Cell | Mode::Line => n + 2,
            Mode::Simultaneous => 2 * n,
            Mode::Pl | Mode::PlDegreeAtLeast(_) => n,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Cell => f.write_str("cell"),
            Mode::Line => f.write_str("line"),
            Mode::Simultaneous => f.write_str("simultaneous"),
            Mode::Pl => f.write_str("pl"),
            Mode::PlDegreeAtLeast(l) => write!(f, "pl-deg-at-least-{l}"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cell" => Ok(Mode::Cell),
            "line" => Ok(Mode::Line),
            "simultaneous" => Ok(Mode::Simultaneous),
            "pl" => Ok(Mode::Pl),
            _ => s
                .strip_prefix("pl-deg-at-least-")
                .and_then(|l| l.parse().ok())
                .map(Mode::PlDegreeAtLeast)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two crossings of one color on the boundary of a cell.
    Cell { cell: CellId, color: usize, crossings: (usize, usize) },
    /// Two crossings of one color along a wire.
    Line { wire: usize, color: usize, crossings: (usize, usize) },
    /// All wires through a crossing share a color.
    Monochromatic { crossing: usize, color: usize },
}

/// Lists every violated constraint; empty means the coloring is proper.
pub fn verify_coloring(arr: &Arrangement, col: &Coloring, mode: Mode) -> Result<Vec<Violation>> {
    let domain = mode.domain();
    if col.domain() != domain || col.len() != domain.size(arr) {
        return Err(Error::DomainMismatch {
            expected: format!("{} coloring of {} items", domain, domain.size(arr)),
            found: format!("{} coloring of {} items", col.domain(), col.len()),
        });
    }
    let mut out = Vec::new();
    if matches!(mode, Mode::Cell | Mode::Simultaneous) {
        let cx = build_cells(arr);
        for cell in cx.cells() {
            for (color, a, b) in repeated_colors(cx.boundary(cell.id), col) {
                out.push(Violation::Cell { cell: cell.id, color, crossings: (a, b) });
            }
        }
    }
    if matches!(mode, Mode::Line | Mode::Simultaneous) {
        for (i, along) in arr.wire_crossings().iter().enumerate() {
            for (color, a, b) in repeated_colors(along, col) {
                out.push(Violation::Line { wire: i + 1, color, crossings: (a, b) });
            }
        }
    }
    let min_degree = match mode {
        Mode::Pl => Some(2),
        Mode::PlDegreeAtLeast(l) => Some(l),
        _ => None,
    };
    if let Some(l) = min_degree {
        for c in arr.crossings().iter().filter(|c| c.degree() >= l) {
            let color = col.line_color(c.lines[0]);
            if c.lines.iter().all(|&w| col.line_color(w) == color) {
                out.push(Violation::Monochromatic { crossing: c.index, color });
            }
        }
    }
    Ok(out)
}

/// `(color, first, second)` for every color met twice among `items`.
fn repeated_colors(items: &[usize], col: &Coloring) -> Vec<(usize, usize, usize)> {
    let mut first: Vec<Option<usize>> = vec![None; col.num_colors()];
    let mut reported = vec![false; col.num_colors()];
    let mut out = Vec::new();
    for &x in items {
        let c = col.color(x);
        match first[c] {
            None => first[c] = Some(x),
            Some(a) if !reported[c] => {
                reported[c] = true;
                out.push((c, a, x));
            }
            Some(_) => {}
        }
    }
    out
}
