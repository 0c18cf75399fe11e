//! Exhaustive chromatic-number solvers.
//!
//! Both solvers deepen the number of colors `K = 1, 2, ...` and run a plain
//! backtracking search over a fixed vertex order, where each next vertex is
//! the one with most neighbours already placed. A vertex may only open the
//! next unused color, which fixes the first vertex to color 0 and removes
//! color permutations.

use crate::coloring::Coloring;
use crate::diagram::Arrangement;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::Mode;
use crate::topology::build_cells;

/// Outcome of an exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Minimum {
    Exact { colors: usize, witness: Coloring },
    ExceedsCap { cap: usize },
}

impl Minimum {
    pub fn value(&self) -> Option<usize> {
        match self {
            Minimum::Exact { colors, .. } => Some(*colors),
            Minimum::ExceedsCap { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Coloring> {
        match self {
            Minimum::Exact { witness, .. } => Some(witness),
            Minimum::ExceedsCap { .. } => None,
        }
    }
}

/// Exact minimum number of colors for `mode`, searching up to `cap`
/// (default [`Mode::default_cap`]).
pub fn min_colors(arr: &Arrangement, mode: Mode, cap: Option<usize>) -> Result<Minimum> {
    let cap = cap.unwrap_or_else(|| mode.default_cap(arr.n()));
    let found = match mode {
        Mode::Cell | Mode::Line | Mode::Simultaneous => {
            let adj = crossing_conflicts(arr, mode);
            let edges: Vec<Vec<usize>> = (0..adj.len())
                .flat_map(|a| adj[a].iter().filter(move |&&b| a < b).map(move |&b| vec![a, b]))
                .collect();
            deepen(adj.len(), &edges, cap)
        }
        Mode::Pl | Mode::PlDegreeAtLeast(_) => {
            let l = if let Mode::PlDegreeAtLeast(l) = mode { l } else { 2 };
            let edges: Vec<Vec<usize>> = arr
                .crossings()
                .iter()
                .filter(|c| c.degree() >= l)
                .map(|c| c.lines.iter().map(|w| w - 1).collect())
                .collect();
            deepen(arr.n(), &edges, cap)
        }
    };
    Ok(match found {
        Some(colors) => {
            let witness = Coloring::new(mode.domain(), colors).expect("search output is compact");
            Minimum::Exact { colors: witness.num_colors(), witness }
        }
        None => Minimum::ExceedsCap { cap },
    })
}

/// Exact chromatic number of a graph, or `CapExceeded`.
pub fn chi_graph(g: &Graph, cap: usize) -> Result<usize> {
    let edges: Vec<Vec<usize>> = g.edges().iter().map(|&(a, b)| vec![a, b]).collect();
    deepen(g.n(), &edges, cap)
        .map(|c| c.iter().max().map_or(0, |m| m + 1))
        .ok_or(Error::CapExceeded { cap })
}

/// Conflict adjacency between crossings, derived directly from cells and
/// line sets.
fn crossing_conflicts(arr: &Arrangement, mode: Mode) -> Vec<Vec<usize>> {
    let m = arr.num_crossings();
    let cx = matches!(mode, Mode::Cell | Mode::Simultaneous).then(|| build_cells(arr));
    let check_line = matches!(mode, Mode::Line | Mode::Simultaneous);
    let mut adj = vec![Vec::new(); m];
    for a in 0..m {
        for b in a + 1..m {
            let by_cell = cx.as_ref().is_some_and(|cx| cx.share_cell(a, b));
            let by_line = check_line && arr.crossing(a).lines.iter().any(|&w| arr.crossing(b).contains(w));
            if by_cell || by_line {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    adj
}

/// Smallest proper coloring of the hypergraph (a hyperedge is violated when
/// all its vertices share a color), trying `K = 1..=cap`.
fn deepen(n: usize, edges: &[Vec<usize>], cap: usize) -> Option<Vec<usize>> {
    if n == 0 {
        return Some(Vec::new());
    }
    let order = placement_order(n, edges);
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    // each hyperedge is checked when its last vertex in the order is placed
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        let last = *e.iter().max_by_key(|&&v| rank[v]).expect("non-empty edge");
        closing[last].push(i);
    }
    let mut colors = vec![usize::MAX; n];
    for k in 1..=cap {
        if place(0, 0, k, &order, edges, &closing, &mut colors) {
            return Some(colors);
        }
    }
    None
}

fn placement_order(n: usize, edges: &[Vec<usize>]) -> Vec<usize> {
    let mut adj = vec![std::collections::BTreeSet::new(); n];
    for e in edges {
        for &a in e {
            for &b in e {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
    }
    let mut placed = vec![false; n];
    let mut back = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (back[v], adj[v].len(), std::cmp::Reverse(v)))
            .expect("vertex left");
        placed[v] = true;
        order.push(v);
        for &u in &adj[v] {
            back[u] += 1;
        }
    }
    order
}

fn place(
    i: usize,
    used: usize,
    k: usize,
    order: &[usize],
    edges: &[Vec<usize>],
    closing: &[Vec<usize>],
    colors: &mut [usize],
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    for c in 0..k.min(used + 1) {
        colors[v] = c;
        let ok = closing[v].iter().all(|&e| edges[e].iter().any(|&u| colors[u] != c));
        if ok && place(i + 1, used.max(c + 1), k, order, edges, closing, colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}
