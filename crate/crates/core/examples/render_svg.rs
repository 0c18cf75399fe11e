//! Writes colored SVG drawings of two arrangements into the temp directory.

use pseudoline::coloring::{degree_ge4_coloring, greedy_cell_coloring};
use pseudoline::construct::{construct_polygon_cell, construct_twisted_bundles};
use pseudoline::render::{render_svg, RenderSpec};

fn main() -> pseudoline::Result<()> {
    let dir = std::env::temp_dir();
    let poly = construct_polygon_cell(5)?;
    let svg = render_svg(&poly, Some(&greedy_cell_coloring(&poly)), &RenderSpec::default())?;
    let p = dir.join("polygon5.svg");
    std::fs::write(&p, svg)?;
    println!("wrote {}", p.display());

    let bundles = construct_twisted_bundles(3, 9)?;
    let spec = RenderSpec { event_spacing: 25.0, ..RenderSpec::default() };
    let svg = render_svg(&bundles, Some(&degree_ge4_coloring(&bundles, 0)?), &spec)?;
    let p = dir.join("bundles3_9.svg");
    std::fs::write(&p, svg)?;
    println!("wrote {}", p.display());
    Ok(())
}
