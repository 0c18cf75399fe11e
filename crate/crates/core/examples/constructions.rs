//! Extremal constructions: a cell bounded by every wire, twisted bundles
//! with many ordinary points, and the gap arrangement.

use pseudoline::coloring::ordinary_graph;
use pseudoline::construct::{construct_gap, construct_polygon_cell};
use pseudoline::format::serialize_wd;
use pseudoline::oracles::{chi_graph, min_colors, sigma_bounds_check, Mode};
use pseudoline::topology::build_cells;

fn main() -> pseudoline::Result<()> {
    let poly = construct_polygon_cell(6)?;
    println!("polygon(6): largest cell boundary {}", build_cells(&poly).max_boundary());
    print!("{}", serialize_wd(poly.diagram()));

    for (k, n) in [(3, 7), (4, 14), (5, 12)] {
        let r = sigma_bounds_check(k, n, false)?;
        println!(
            "twisted bundles k={k} n={n}: {} ordinary points, t_k(n) - n = {}, strip coloring valid {}",
            r.ordinary, r.lower_bound, r.strip_coloring_valid
        );
    }

    for r in 2..=3 {
        let gap = construct_gap(r)?;
        let chi = chi_graph(&ordinary_graph(&gap), gap.n())?;
        let pl = min_colors(&gap, Mode::Pl, None)?.value();
        println!("gap({r}): {} wires, chi(ordinary graph) = {chi}, pseudoline chromatic number {pl:?}", gap.n());
    }
    Ok(())
}
