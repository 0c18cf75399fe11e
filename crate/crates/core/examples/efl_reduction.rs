//! Builds the arrangement that encodes a graph and compares its pseudoline
//! chromatic number with the graph's chromatic number.

use pseudoline::construct::construct_efl_reduction;
use pseudoline::oracles::{chi_graph, min_colors, Mode};
use pseudoline::Graph;

fn main() -> pseudoline::Result<()> {
    let graphs = [
        ("K2", Graph::complete(2)),
        ("P3", Graph::path(3)),
        ("K3", Graph::complete(3)),
        ("C4", Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)])?),
    ];
    for (name, g) in graphs {
        let red = construct_efl_reduction(&g)?;
        let chi = chi_graph(&g, g.n())?;
        let pl = min_colors(&red.arrangement, Mode::Pl, None)?.value();
        println!(
            "{name}: {} wires (base {:?}, star {}, {} connectors), chi = {chi}, chi_pl = {pl:?}",
            red.arrangement.n(),
            red.base,
            red.star,
            red.connectors.len()
        );
    }
    Ok(())
}
