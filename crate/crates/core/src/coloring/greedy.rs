use crate::coloring::{Coloring, Domain};
use crate::diagram::Arrangement;
use crate::topology::{build_cells, conflict_ancestors, CellComplex, TopoOrder};

/// Colors crossings left to right, each with the smallest color not used by
/// one of its conflict ancestors. At most `n - 1` ancestors exist, so at
/// most `n` colors are used and no cell sees a color twice.
pub fn greedy_cell_coloring(arr: &Arrangement) -> Coloring {
    let cx = build_cells(arr);
    greedy_cell_coloring_with_order(&cx, &TopoOrder::event_order(arr.num_crossings()))
}

/// Same greedy rule along an arbitrary topological sort.
pub fn greedy_cell_coloring_with_order(cx: &CellComplex, order: &TopoOrder) -> Coloring {
    let mut colors = vec![usize::MAX; order.order().len()];
    for &c in order.order() {
        let taken: Vec<usize> = conflict_ancestors(cx, order, c).into_iter().map(|a| colors[a]).collect();
        colors[c] = (0..).find(|x| !taken.contains(x)).expect("unbounded range");
    }
    Coloring::new(Domain::Crossings, colors).expect("smallest-free coloring is compact")
}

/// Pseudoline coloring by first fit in label order: each wire takes the
/// smallest color that leaves no fully colored crossing monochromatic.
pub fn greedy_pl_coloring(arr: &Arrangement) -> Coloring {
    let n = arr.n();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let along = arr.wire_crossings();
    for w in 1..=n {
        // a crossing whose other wires already share one color forbids it
        // only if `w` is the last wire of the crossing to be colored
        let forbidden: Vec<usize> = along[w - 1]
            .iter()
            .filter_map(|&c| {
                let others: Vec<usize> = arr.crossing(c).lines.iter().copied().filter(|&x| x != w).collect();
                if others.iter().any(|&x| x > w) {
                    return None;
                }
                let first = colors[others[0] - 1]?;
                others.iter().all(|&x| colors[x - 1] == Some(first)).then_some(first)
            })
            .collect();
        colors[w - 1] = Some((0..).find(|x| !forbidden.contains(x)).expect("unbounded range"));
    }
    let raw: Vec<usize> = colors.into_iter().map(|c| c.expect("all colored")).collect();
    Coloring::compact(Domain::Lines, &raw)
}
