//! Searches all arrangements on few wires for ones whose crossings need
//! more than `n` colors when cells and pseudolines are constrained at once.

use pseudoline::format::{format_bound, serialize_coloring, to_inline};
use pseudoline::oracles::{search_simultaneous_counterexample, Mode, ScanOptions};

fn main() -> pseudoline::Result<()> {
    for n in 3..=5 {
        let opts = ScanOptions { max_witnesses: Some(2), ..ScanOptions::default() };
        let r = search_simultaneous_counterexample(n, None, &opts)?;
        println!("n={n}: {} of {} diagrams need more than {n} colors", r.witness_count, r.examined);
        for w in &r.witnesses {
            println!("  {} needs {}", to_inline(&w.diagram), format_bound(w.minimum));
            if let Some(c) = &w.certificate {
                print!("{}", serialize_coloring(Mode::Simultaneous, c));
            }
        }
    }
    Ok(())
}
