use crate::coloring::{Coloring, Domain};
use crate::diagram::Arrangement;
use crate::error::{Error, Result};

/// Circle-method edge coloring of `K_n` transported to the crossings of a
/// simple arrangement (crossing `{i, j}` is edge `ij`). Uses `n` colors for
/// odd `n` and `n - 1` for even `n`. Returns `None` for non-simple input.
pub fn round_robin_coloring(arr: &Arrangement) -> Option<Coloring> {
    if !arr.is_simple() {
        return None;
    }
    let n = arr.n();
    let colors = arr
        .crossings()
        .iter()
        .map(|c| {
            let (i, j) = (c.lines[0] - 1, c.lines[1] - 1);
            if n % 2 == 1 {
                (i + j) % n
            } else if j == n - 1 {
                (2 * i) % (n - 1)
            } else {
                (i + j) % (n - 1)
            }
        })
        .collect();
    Some(Coloring::new(Domain::Crossings, colors).expect("round robin uses every color"))
}

/// Crossings adjacent iff they share a wire.
pub fn line_conflict_graph(arr: &Arrangement) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); arr.num_crossings()];
    for along in arr.wire_crossings() {
        for (i, &a) in along.iter().enumerate() {
            for &b in &along[i + 1..] {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    adj
}

/// Crossing coloring in which no pseudoline sees a color twice, with at most
/// `budget` colors (default `n`).
///
/// Simple arrangements use [`round_robin_coloring`]. Otherwise a DSATUR
/// first fit is tried, then an exhaustive DSATUR backtracking search. By
/// the Erdős–Faber–Lovász theorem a coloring with `n` colors always exists,
/// so failure at the default budget is a bug.
pub fn line_respecting_coloring(arr: &Arrangement, budget: Option<usize>) -> Result<Coloring> {
    let budget = budget.unwrap_or(arr.n());
    if let Some(c) = round_robin_coloring(arr) {
        return if c.num_colors() <= budget { Ok(c) } else { Err(Error::BudgetExhausted { budget }) };
    }
    let adj = line_conflict_graph(arr);
    let first_fit = dsatur_first_fit(&adj);
    if first_fit.iter().max().map_or(0, |m| m + 1) <= budget {
        return Ok(Coloring::new(Domain::Crossings, first_fit).expect("first fit is compact"));
    }
    let mut search = Dsatur::new(&adj, budget);
    if search.solve() {
        Ok(Coloring::compact(Domain::Crossings, &search.colors))
    } else {
        debug_assert!(budget < arr.n(), "no {budget}-coloring although one must exist");
        Err(Error::BudgetExhausted { budget })
    }
}

fn dsatur_first_fit(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut colors = vec![usize::MAX; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut seen: Vec<usize> = adj[v].iter().map(|&u| colors[u]).filter(|&c| c != usize::MAX).collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), adj[v].len(), std::cmp::Reverse(v))
            })
            .expect("uncolored vertex left");
        colors[v] = (0..)
            .find(|c| adj[v].iter().all(|&u| colors[u] != *c))
            .expect("unbounded range");
    }
    colors
}

/// Backtracking with saturation ordering and forward checking.
struct Dsatur<'a> {
    adj: &'a [Vec<usize>],
    k: usize,
    colors: Vec<usize>,
    // counts[v * k + c]: colored neighbours of v with color c
    counts: Vec<u32>,
    saturation: Vec<usize>,
}

impl<'a> Dsatur<'a> {
    fn new(adj: &'a [Vec<usize>], k: usize) -> Self {
        let n = adj.len();
        Dsatur { adj, k, colors: vec![usize::MAX; n], counts: vec![0; n * k], saturation: vec![0; n] }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        let adj = self.adj;
        for &u in &adj[v] {
            let slot = &mut self.counts[u * self.k + c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = usize::MAX;
        let adj = self.adj;
        for &u in &adj[v] {
            let slot = &mut self.counts[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn solve(&mut self) -> bool {
        if self.k == 0 {
            return self.adj.is_empty();
        }
        self.search(0, 0)
    }

    fn search(&mut self, done: usize, used: usize) -> bool {
        if done == self.adj.len() {
            return true;
        }
        let v = (0..self.adj.len())
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation[v], self.adj[v].len(), std::cmp::Reverse(v)))
            .expect("uncolored vertex left");
        // colors above `used` are interchangeable; try only the first of them
        for c in 0..self.k.min(used + 1) {
            if self.counts[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c);
            let wiped = self.adj[v]
                .iter()
                .any(|&u| self.colors[u] == usize::MAX && self.saturation[u] >= self.k);
            if !wiped && self.search(done + 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}
