//! Cells, the oriented arrangement graph, conflict ancestors and the two
//! incidence hypergraphs of an arrangement.
//!
//! Cells come from a slab sweep. Slab `s` is the vertical strip before event
//! `s` (the last slab follows the last event) and has `n + 1` gaps; gap `g`
//! lies between tracks `g - 1` and `g`. Event `(p, k)` closes the interior
//! gaps `p + 1 .. p + k` and every other gap continues into the next slab.
//! Continuing gaps are merged with a union-find, so each cell is one gap
//! index over a contiguous run of slabs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::Arrangement;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub id: CellId,
    pub gap: usize,
    /// First and last slab covered.
    pub slabs: (usize, usize),
    pub bounded: bool,
}

#[derive(Debug, Clone)]
pub struct CellComplex {
    cells: Vec<Cell>,
    /// Per crossing: incident cells, top cell first, then the closing cells
    /// on the left, the opening cells on the right, the bottom cell last.
    incidence: Vec<Vec<CellId>>,
    /// Per cell: crossings on its boundary, ascending.
    boundary: Vec<Vec<usize>>,
    north: CellId,
}

impl CellComplex {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn num_bounded(&self) -> usize {
        self.cells.iter().filter(|c| c.bounded).count()
    }

    pub fn incident_cells(&self, crossing: usize) -> &[CellId] {
        &self.incidence[crossing]
    }

    pub fn boundary(&self, cell: CellId) -> &[usize] {
        &self.boundary[cell.0]
    }

    pub fn north(&self) -> CellId {
        self.north
    }

    /// Largest number of crossings on one cell boundary.
    pub fn max_boundary(&self) -> usize {
        self.boundary.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Do the two crossings lie on the boundary of a common cell?
    pub fn share_cell(&self, a: usize, b: usize) -> bool {
        self.incidence[a].iter().any(|x| self.incidence[b].contains(x))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Cell decomposition by slab sweep; ids follow first occurrence in
/// slab-major, gap-minor order, so the north cell (gap 0) is always `CellId(0)`.
pub fn build_cells(arr: &Arrangement) -> CellComplex {
    let n = arr.n();
    let events = arr.events();
    let slabs = events.len() + 1;
    let gaps = n + 1;
    let key = |s: usize, g: usize| s * gaps + g;

    let mut uf = UnionFind::new(slabs * gaps);
    for (s, e) in events.iter().enumerate() {
        for g in 0..gaps {
            if g <= e.p || g >= e.p + e.k {
                uf.union(key(s, g), key(s + 1, g));
            }
        }
    }

    let mut id_of_root = vec![usize::MAX; slabs * gaps];
    let mut cells: Vec<Cell> = Vec::new();
    let mut cell_of = vec![CellId(0); slabs * gaps];
    for s in 0..slabs {
        for g in 0..gaps {
            let r = uf.find(key(s, g));
            if id_of_root[r] == usize::MAX {
                id_of_root[r] = cells.len();
                cells.push(Cell { id: CellId(cells.len()), gap: g, slabs: (s, s), bounded: true });
            }
            let c = &mut cells[id_of_root[r]];
            c.slabs.1 = s;
            cell_of[key(s, g)] = c.id;
        }
    }
    for c in &mut cells {
        c.bounded = !(c.gap == 0 || c.gap == n || c.slabs.0 == 0 || c.slabs.1 == slabs - 1);
    }

    let mut incidence = Vec::with_capacity(events.len());
    let mut boundary = vec![Vec::new(); cells.len()];
    for (s, e) in events.iter().enumerate() {
        let mut inc = vec![cell_of[key(s, e.p)]];
        inc.extend((e.p + 1..e.p + e.k).map(|g| cell_of[key(s, g)]));
        inc.extend((e.p + 1..e.p + e.k).map(|g| cell_of[key(s + 1, g)]));
        inc.push(cell_of[key(s, e.p + e.k)]);
        for c in &inc {
            boundary[c.0].push(s);
        }
        incidence.push(inc);
    }
    CellComplex { cells, incidence, boundary, north: CellId(0) }
}

/// The cell above every wire, unbounded by construction.
pub fn north_cell(cx: &CellComplex) -> CellId {
    cx.north()
}

/// Wires bounding each cell from above and below, one entry per slab of the
/// cell, as `(upper, lower)`; `None` on the outer side of gap 0 or gap `n`.
pub fn cell_sides(arr: &Arrangement, cx: &CellComplex) -> Vec<Vec<(Option<usize>, Option<usize>)>> {
    let slabs = arr.diagram().slabs();
    cx.cells()
        .iter()
        .map(|c| {
            (c.slabs.0..=c.slabs.1)
                .map(|s| {
                    let order = &slabs[s];
                    let upper = c.gap.checked_sub(1).map(|t| order[t]);
                    let lower = order.get(c.gap).copied();
                    (upper, lower)
                })
                .collect()
        })
        .collect()
}

/// Every wire appears on the boundary of each cell in at most one maximal
/// run of slabs, and never on both sides of the same cell.
pub fn boundary_segments_contiguous(arr: &Arrangement, cx: &CellComplex) -> bool {
    cell_sides(arr, cx).iter().all(|sides| {
        let uppers: Vec<Option<usize>> = sides.iter().map(|s| s.0).collect();
        let lowers: Vec<Option<usize>> = sides.iter().map(|s| s.1).collect();
        let single_run = |seq: &[Option<usize>]| {
            let mut seen = BTreeSet::new();
            let mut prev = None;
            for &w in seq.iter().flatten() {
                if prev != Some(w) && !seen.insert(w) {
                    return false;
                }
                prev = Some(w);
            }
            true
        };
        let up: BTreeSet<usize> = uppers.iter().flatten().copied().collect();
        let low: BTreeSet<usize> = lowers.iter().flatten().copied().collect();
        single_run(&uppers) && single_run(&lowers) && up.is_disjoint(&low)
    })
}

/// Arrangement graph oriented from left to right. Crossing `i` is event `i`,
/// so the event order is a topological sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedArrangementGraph {
    pub num_vertices: usize,
    /// `(from, to)` for consecutive crossings along a wire; duplicates are
    /// impossible since two crossings share at most one wire.
    pub arcs: Vec<(usize, usize)>,
}

impl OrientedArrangementGraph {
    pub fn topo_order(&self) -> Vec<usize> {
        (0..self.num_vertices).collect()
    }

    /// Every arc points to a later crossing, which rules out directed cycles.
    pub fn is_acyclic(&self) -> bool {
        self.arcs.iter().all(|&(a, b)| a < b)
    }

    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_vertices];
        for &(a, b) in &self.arcs {
            out[a].push(b);
        }
        out
    }

    /// A topological sort drawn at random: Kahn's algorithm picking a uniform
    /// available vertex at each step.
    pub fn random_topological_order<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<usize> {
        let succ = self.successors();
        let mut indeg = vec![0usize; self.num_vertices];
        for &(_, b) in &self.arcs {
            indeg[b] += 1;
        }
        let mut ready: Vec<usize> = (0..self.num_vertices).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.num_vertices);
        while !ready.is_empty() {
            let i = rng.gen_range(0..ready.len());
            let v = ready.swap_remove(i);
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        order
    }
}

pub fn arrangement_graph(arr: &Arrangement) -> OrientedArrangementGraph {
    let mut arcs = Vec::new();
    for along in arr.wire_crossings() {
        arcs.extend(along.windows(2).map(|w| (w[0], w[1])));
    }
    arcs.sort_unstable();
    let g = OrientedArrangementGraph { num_vertices: arr.num_crossings(), arcs };
    debug_assert!(g.is_acyclic());
    g
}

/// A checked topological sort of the arrangement graph, stored as ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoOrder {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl TopoOrder {
    pub fn new(graph: &OrientedArrangementGraph, order: Vec<usize>) -> Result<Self> {
        let n = graph.num_vertices;
        if order.len() != n {
            return Err(Error::NotTopological);
        }
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::NotTopological);
            }
            rank[v] = i;
        }
        if graph.arcs.iter().any(|&(a, b)| rank[a] >= rank[b]) {
            return Err(Error::NotTopological);
        }
        Ok(TopoOrder { order, rank })
    }

    /// The event order.
    pub fn event_order(num_crossings: usize) -> Self {
        TopoOrder { order: (0..num_crossings).collect(), rank: (0..num_crossings).collect() }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, crossing: usize) -> usize {
        self.rank[crossing]
    }
}

/// Crossings before `c` in `order` that share a cell with `c`.
pub fn conflict_ancestors(cx: &CellComplex, order: &TopoOrder, c: usize) -> Vec<usize> {
    let mut out: Vec<usize> = cx
        .incident_cells(c)
        .iter()
        .flat_map(|&cell| cx.boundary(cell).iter().copied())
        .filter(|&x| order.rank(x) < order.rank(c))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Hypergraph on vertices `0..num_vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    pub num_vertices: usize,
    pub edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Largest intersection of two distinct hyperedges.
    pub fn codegree(&self) -> usize {
        let sets: Vec<BTreeSet<usize>> = self.edges.iter().map(|e| e.iter().copied().collect()).collect();
        let mut best = 0;
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                best = best.max(sets[i].intersection(&sets[j]).count());
            }
        }
        best
    }

    /// Simple in the sense of the Erdős–Faber–Lovász setting: edges of size
    /// at least two meeting pairwise in at most one vertex.
    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|e| e.len() >= 2) && self.codegree() <= 1
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0; self.num_vertices];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg.into_iter().max().unwrap_or(0)
    }
}

/// Vertices are cells; each crossing contributes the cells around it.
pub fn cell_vertex_hypergraph(cx: &CellComplex) -> Hypergraph {
    let edges = (0..cx.incidence.len())
        .map(|c| {
            let mut e: Vec<usize> = cx.incident_cells(c).iter().map(|id| id.0).collect();
            e.sort_unstable();
            e
        })
        .collect();
    Hypergraph { num_vertices: cx.num_cells(), edges }
}

/// Vertices are pseudolines (label `w` is vertex `w - 1`); each crossing
/// contributes its line set.
pub fn line_vertex_hypergraph(arr: &Arrangement) -> Hypergraph {
    let edges = arr
        .crossings()
        .iter()
        .map(|c| c.lines.iter().map(|w| w - 1).collect())
        .collect();
    Hypergraph { num_vertices: arr.n(), edges }
}

/// Random topological sorts for sampling, the event order first.
pub fn sample_orders<R: Rng + ?Sized>(graph: &OrientedArrangementGraph, count: usize, rng: &mut R) -> Vec<TopoOrder> {
    let mut out = vec![TopoOrder::event_order(graph.num_vertices)];
    while out.len() < count {
        let order = graph.random_topological_order(rng);
        out.push(TopoOrder::new(graph, order).expect("Kahn output is topological"));
    }
    out.truncate(count.max(1));
    out
}

/// Shuffles crossings into an arbitrary order, useful to exercise rejection.
pub fn shuffled_order<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}
