//! Colors the crossings of a few arrangements so that no cell sees a color
//! twice, and compares the greedy count with the exact minimum.

use pseudoline::coloring::greedy_cell_coloring;
use pseudoline::construct::construct_polygon_cell;
use pseudoline::generate::{gen_random, gen_random_simple};
use pseudoline::oracles::{min_colors, verify_coloring, Mode};
use pseudoline::topology::build_cells;

fn main() -> pseudoline::Result<()> {
    let cases = [
        ("polygon(5)", construct_polygon_cell(5)?),
        ("simple(5)", gen_random_simple(5, 1)?),
        ("random(6, merge 0.5)", gen_random(6, 7, 0.5)?),
    ];
    for (name, arr) in cases {
        let cx = build_cells(&arr);
        let col = greedy_cell_coloring(&arr);
        let ok = verify_coloring(&arr, &col, Mode::Cell)?.is_empty();
        let exact = min_colors(&arr, Mode::Cell, None)?.value();
        println!(
            "{name}: {} crossings, {} cells, greedy {} colors (verified {ok}), minimum {:?}",
            arr.num_crossings(),
            cx.num_cells(),
            col.num_colors(),
            exact
        );
        println!("  colors {:?}", col.colors());
    }
    Ok(())
}
