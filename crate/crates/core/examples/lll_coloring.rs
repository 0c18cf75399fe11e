//! Randomized pseudoline colorings that avoid monochromatic crossings of
//! high degree.

use pseudoline::coloring::{degree_ge4_details, degree_ge4_reference_bound, lll_color_budget, lll_resample, LllParams};
use pseudoline::generate::{gen_random, gen_trivial};
use pseudoline::oracles::{verify_coloring, Mode};

fn main() -> pseudoline::Result<()> {
    for (n, l, r) in [(9, 3, 6), (100, 4, 6), (1000, 5, 0)] {
        println!("budget n={n} l={l} r={r}: {}", lll_color_budget(n, l, r)?);
    }

    let arr = gen_random(9, 11, 0.7)?;
    println!("random n=9: degree histogram {:?}", arr.degree_histogram());
    let res = lll_resample(&arr, &LllParams::new(3, 6, 5))?;
    println!("  resampling: palette {}, {} rounds, {} colors used", res.palette, res.rounds, res.coloring.num_colors());

    for arr in [arr, gen_trivial(9)?] {
        let out = degree_ge4_details(&arr, 5)?;
        let ok = verify_coloring(&arr, &out.coloring, Mode::PlDegreeAtLeast(4))?.is_empty();
        println!(
            "degree >= 4 scheme: threshold {}, bundles {:?}, {} colors (bound {}), verified {ok}",
            out.threshold,
            out.bundles,
            out.coloring.num_colors(),
            degree_ge4_reference_bound(arr.n())
        );
    }
    Ok(())
}
