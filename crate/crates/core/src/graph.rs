//! Small undirected simple graphs on vertices `0..n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    /// Edges are stored normalized as `(lo, hi)` in the given order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::NotSimpleGraph(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::NotSimpleGraph(format!("edge ({a}, {b}) outside 0..{n}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::NotSimpleGraph(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
            out.push(e);
        }
        Ok(Graph { n, edges: out })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Graph { n, edges: (1..n).map(|i| (i - 1, i)).collect() }
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let mut part_of = Vec::new();
        for (i, &s) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, s));
        }
        let n = part_of.len();
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| part_of[a] != part_of[b])
            .collect();
        Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = (a.min(b), a.max(b));
        self.edges.contains(&e)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Same edge set regardless of edge order.
    pub fn same_edges(&self, other: &Graph) -> bool {
        let a: BTreeSet<_> = self.edges.iter().collect();
        let b: BTreeSet<_> = other.edges.iter().collect();
        self.n == other.n && a == b
    }
}

/// Sizes of a balanced partition of `n` into `k` parts, larger parts first.
pub fn balanced_parts(n: usize, k: usize) -> Vec<usize> {
    (0..k).map(|i| n / k + usize::from(i < n % k)).collect()
}

/// Turán number `t_k(n)`: edges of the balanced complete `k`-partite graph on `n` vertices.
pub fn turan_number(n: usize, k: usize) -> Result<usize> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("Turán number needs 1 <= k <= n, got k={k}, n={n}")));
    }
    let within: usize = balanced_parts(n, k).iter().map(|s| s * s.saturating_sub(1) / 2).sum();
    Ok(n * (n - 1) / 2 - within)
}
