//! Constructive colorings of crossings and of pseudolines.

mod greedy;
mod line;
mod lll;

use std::fmt;

pub use greedy::{greedy_cell_coloring, greedy_cell_coloring_with_order, greedy_pl_coloring};
pub use line::{line_conflict_graph, line_respecting_coloring, round_robin_coloring};
pub use lll::{
    ceil_sqrt, degree_ge4_coloring, degree_ge4_details, degree_ge4_reference_bound, lll_color_budget, lll_coloring,
    lll_resample, Degree4Outcome, LllParams, Resampled,
};

use crate::diagram::Arrangement;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// What a coloring assigns colors to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// Index `i` is crossing (event) `i`.
    Crossings,
    /// Index `i` is wire `i + 1`.
    Lines,
}

impl Domain {
    pub fn size(self, arr: &Arrangement) -> usize {
        match self {
            Domain::Crossings => arr.num_crossings(),
            Domain::Lines => arr.n(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Domain::Crossings => "crossing",
            Domain::Lines => "line",
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A total assignment of colors `0..K` to a domain, every color used.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    domain: Domain,
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    /// Accepts an assignment whose colors are exactly `0..K` for some `K`.
    pub fn new(domain: Domain, colors: Vec<usize>) -> Result<Self> {
        let num_colors = colors.iter().max().map_or(0, |m| m + 1);
        let mut used = vec![false; num_colors];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(Error::InvalidParameter(format!("color {missing} is unused in a {num_colors}-coloring")));
        }
        Ok(Coloring { domain, colors, num_colors })
    }

    /// Renames colors by first appearance, so any assignment becomes compact.
    pub fn compact(domain: Domain, raw: &[usize]) -> Self {
        let mut rename = std::collections::HashMap::new();
        let colors = raw
            .iter()
            .map(|c| {
                let next = rename.len();
                *rename.entry(*c).or_insert(next)
            })
            .collect();
        Coloring { domain, colors, num_colors: rename.len() }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, index: usize) -> usize {
        self.colors[index]
    }

    /// Color of wire `w` in a line coloring.
    pub fn line_color(&self, wire: usize) -> usize {
        debug_assert_eq!(self.domain, Domain::Lines);
        self.colors[wire - 1]
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

/// Graph on the pseudolines (wire `w` is vertex `w - 1`) with an edge for
/// every ordinary point.
pub fn ordinary_graph(arr: &Arrangement) -> Graph {
    let edges = arr
        .crossings()
        .iter()
        .filter(|c| c.degree() == 2)
        .map(|c| (c.lines[0] - 1, c.lines[1] - 1));
    Graph::new(arr.n(), edges).expect("each pair crosses once")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct_gap;
    use crate::generate::gen_trivial;

    #[test]
    fn coloring_invariants() {
        assert!(Coloring::new(Domain::Lines, vec![0, 2]).is_err());
        let c = Coloring::new(Domain::Lines, vec![1, 0, 1]).unwrap();
        assert_eq!(c.num_colors(), 2);
        let k = Coloring::compact(Domain::Crossings, &[5, 5, 9, 2]);
        assert_eq!(k.colors(), &[0, 0, 1, 2]);
        assert_eq!(k.num_colors(), 3);
        assert_eq!(Coloring::new(Domain::Lines, vec![]).unwrap().num_colors(), 0);
    }

    #[test]
    fn ordinary_graph_examples() {
        let a = Arrangement::from_pairs(3, &[(0, 2), (1, 2), (0, 2)]).unwrap();
        assert!(ordinary_graph(&a).same_edges(&Graph::complete(3)));
        assert_eq!(ordinary_graph(&gen_trivial(5).unwrap()).num_edges(), 0);
        let gap = construct_gap(3).unwrap();
        assert!(ordinary_graph(&gap).same_edges(&Graph::complete_multipartite(&[3, 3, 3])));
    }
}
