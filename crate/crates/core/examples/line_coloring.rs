//! Crossing colorings with no color repeated along a pseudoline.

use pseudoline::coloring::{line_respecting_coloring, round_robin_coloring};
use pseudoline::generate::{gen_random, gen_random_simple};
use pseudoline::oracles::{min_colors, verify_coloring, Mode};

fn main() -> pseudoline::Result<()> {
    for n in 3..=8 {
        let arr = gen_random_simple(n, 0)?;
        let col = round_robin_coloring(&arr).expect("simple");
        println!("simple n={n}: round robin uses {} colors", col.num_colors());
    }
    for seed in 0..4 {
        let arr = gen_random(7, seed, 0.6)?;
        let col = line_respecting_coloring(&arr, None)?;
        let ok = verify_coloring(&arr, &col, Mode::Line)?.is_empty();
        let best = min_colors(&arr, Mode::Line, None)?.value();
        println!(
            "random n=7 seed {seed}: mx {}, {} colors (verified {ok}), minimum {:?}",
            arr.mx(),
            col.num_colors(),
            best
        );
    }
    Ok(())
}
