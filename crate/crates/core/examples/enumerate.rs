//! Enumerates wiring diagrams, groups them into reflection classes and runs
//! the mx-gap scan.

use pseudoline::generate::{enumerate_all, enumerate_canonical};
use pseudoline::oracles::{mx_gap_scan, MxGapOptions, ScanOptions};
use pseudoline::Arrangement;

fn main() -> pseudoline::Result<()> {
    for n in 1..=5 {
        let all: Vec<Arrangement> = enumerate_all(n)?.map(|d| Arrangement::new(d).expect("valid")).collect();
        let simple = all.iter().filter(|a| a.is_simple()).count();
        let classes = enumerate_canonical(n)?.count();
        println!("n={n}: {} diagrams, {simple} simple, {classes} reflection classes", all.len());
    }
    for n in 2..=5 {
        let r = mx_gap_scan(n, &MxGapOptions::Enumerate(ScanOptions::default()))?;
        println!("n={n}: max(min line colors - mx) = {:?} on {} diagrams", r.max_gap, r.witness_count);
    }
    let r = mx_gap_scan(7, &MxGapOptions::Sample { count: 200, seed: 1, merge: 0.4, max_witnesses: Some(1) })?;
    println!("n=7 sampled: max gap {:?}", r.max_gap);
    Ok(())
}
