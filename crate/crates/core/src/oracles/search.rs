//! Exhaustive and sampled scans over arrangements.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coloring::{ordinary_graph, Coloring, Domain};
use crate::construct::{bundle_strips, construct_twisted_bundles};
use crate::diagram::{Arrangement, WiringDiagram};
use crate::error::{Error, Result};
use crate::generate::{enumerate_all, gen_random};
use crate::graph::turan_number;
use crate::oracles::{chi_graph, min_colors, verify_coloring, Minimum, Mode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchKind {
    Simultaneous,
    MxGap,
}

impl SearchKind {
    pub fn name(self) -> &'static str {
        match self {
            SearchKind::Simultaneous => "simultaneous",
            SearchKind::MxGap => "mx-gap",
        }
    }
}

/// Exact value or a lower bound when the search cap was hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Exact(usize),
    Exceeds(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub diagram: WiringDiagram,
    pub mode: Mode,
    pub minimum: Bound,
    pub mx: usize,
    /// Optimal coloring when the minimum is exact.
    pub certificate: Option<Coloring>,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub kind: SearchKind,
    pub n: usize,
    /// Index in enumeration order where this run started.
    pub start: usize,
    pub examined: usize,
    pub witnesses: Vec<Witness>,
    /// Number of instances that qualified, which may exceed `witnesses.len()`.
    pub witness_count: usize,
    /// Mx-gap scans: largest `min line colors - mx` seen.
    pub max_gap: Option<i64>,
    pub elapsed: Duration,
}

impl SearchReport {
    /// Enumeration index to resume from.
    pub fn checkpoint(&self) -> usize {
        self.start + self.examined
    }
}

/// Slice of the enumeration to process.
#[derive(Debug, Clone, Default)]
pub struct ScanOptions {
    pub start: usize,
    pub limit: Option<usize>,
    /// Keep at most this many witnesses (all by default).
    pub max_witnesses: Option<usize>,
}

fn enumerated(n: usize, opts: &ScanOptions) -> Result<Vec<WiringDiagram>> {
    let it = enumerate_all(n)?.skip(opts.start);
    Ok(match opts.limit {
        Some(l) => it.take(l).collect(),
        None => it.collect(),
    })
}

fn verified(arr: &Arrangement, mode: Mode, m: &Minimum) -> Bound {
    match m {
        Minimum::Exact { colors, witness } => {
            assert!(
                verify_coloring(arr, witness, mode).expect("domain matches").is_empty(),
                "optimal certificate fails verification"
            );
            Bound::Exact(*colors)
        }
        Minimum::ExceedsCap { cap } => Bound::Exceeds(*cap),
    }
}

/// Finds arrangements whose crossings cannot be colored with fewer than
/// `threshold` colors under the cell and line constraints together.
/// `threshold` defaults to `n + 1`; minima are searched up to `2n` colors
/// (or `threshold` if larger).
pub fn search_simultaneous_counterexample(
    n: usize,
    threshold: Option<usize>,
    opts: &ScanOptions,
) -> Result<SearchReport> {
    if n > 5 {
        return Err(Error::InvalidParameter(format!("simultaneous search enumerates n <= 5, got {n}")));
    }
    let threshold = threshold.unwrap_or(n + 1);
    let cap = threshold.max(2 * n);
    let started = Instant::now();
    let diagrams = enumerated(n, opts)?;
    let found: Vec<Option<Witness>> = diagrams
        .par_iter()
        .map(|d| {
            let arr = Arrangement::new(d.clone()).expect("enumeration yields valid diagrams");
            let m = min_colors(&arr, Mode::Simultaneous, Some(cap)).expect("crossing mode");
            let minimum = verified(&arr, Mode::Simultaneous, &m);
            let qualifies = match minimum {
                Bound::Exact(v) => v >= threshold,
                Bound::Exceeds(_) => true,
            };
            qualifies.then(|| Witness {
                diagram: d.clone(),
                mode: Mode::Simultaneous,
                minimum,
                mx: arr.mx(),
                certificate: m.witness().cloned(),
            })
        })
        .collect();
    let mut witnesses: Vec<Witness> = found.into_iter().flatten().collect();
    let witness_count = witnesses.len();
    if let Some(k) = opts.max_witnesses {
        witnesses.truncate(k);
    }
    Ok(SearchReport {
        kind: SearchKind::Simultaneous,
        n,
        start: opts.start,
        examined: diagrams.len(),
        witnesses,
        witness_count,
        max_gap: None,
        elapsed: started.elapsed(),
    })
}

/// Source of arrangements for the mx-gap scan.
#[derive(Debug, Clone)]
pub enum MxGapOptions {
    /// Full enumeration (n <= 5 recommended).
    Enumerate(ScanOptions),
    /// `count` random arrangements from consecutive seeds.
    Sample { count: usize, seed: u64, merge: f64, max_witnesses: Option<usize> },
}

/// Records `min line colors - mx` per arrangement; witnesses are the
/// arrangements attaining the largest gap.
pub fn mx_gap_scan(n: usize, opts: &MxGapOptions) -> Result<SearchReport> {
    let started = Instant::now();
    let (start, max_witnesses, diagrams): (usize, Option<usize>, Vec<WiringDiagram>) = match opts {
        MxGapOptions::Enumerate(o) => (o.start, o.max_witnesses, enumerated(n, o)?),
        MxGapOptions::Sample { count, seed, merge, max_witnesses } => {
            let ds = (0..*count as u64)
                .map(|i| gen_random(n, seed.wrapping_add(i), *merge).map(Arrangement::into_diagram))
                .collect::<Result<_>>()?;
            (0, *max_witnesses, ds)
        }
    };
    let scored: Vec<(i64, Witness)> = diagrams
        .par_iter()
        .map(|d| {
            let arr = Arrangement::new(d.clone()).expect("valid diagram");
            let m = min_colors(&arr, Mode::Line, None).expect("crossing mode");
            let minimum = verified(&arr, Mode::Line, &m);
            let mx = arr.mx();
            let value = match minimum {
                Bound::Exact(v) => v,
                Bound::Exceeds(c) => c + 1,
            };
            let w = Witness { diagram: d.clone(), mode: Mode::Line, minimum, mx, certificate: m.witness().cloned() };
            (value as i64 - mx as i64, w)
        })
        .collect();
    let max_gap = scored.iter().map(|(g, _)| *g).max();
    let mut witnesses: Vec<Witness> =
        scored.into_iter().filter(|(g, _)| Some(*g) == max_gap).map(|(_, w)| w).collect();
    let witness_count = witnesses.len();
    if let Some(k) = max_witnesses {
        witnesses.truncate(k);
    }
    Ok(SearchReport {
        kind: SearchKind::MxGap,
        n,
        start,
        examined: diagrams.len(),
        witnesses,
        witness_count,
        max_gap,
        elapsed: started.elapsed(),
    })
}

#[derive(Debug, Clone)]
pub struct SigmaReport {
    pub k: usize,
    pub n: usize,
    pub ordinary: usize,
    pub turan: usize,
    /// `t_k(n) - n`, saturating at zero.
    pub lower_bound: usize,
    /// Coloring by strip index.
    pub strip_coloring: Coloring,
    pub strip_coloring_valid: bool,
    /// Exact pseudoline chromatic number searched up to `k`.
    pub min_pl: Option<usize>,
    /// Chromatic number of the ordinary graph, at most `k` if the strip coloring is proper.
    pub chi_ordinary: Option<usize>,
}

impl SigmaReport {
    pub fn meets_lower_bound(&self) -> bool {
        self.ordinary >= self.lower_bound && self.strip_coloring_valid && self.strip_coloring.num_colors() <= self.k
    }
}

/// Checks the twisted-bundle construction as a witness for
/// `σ_k(n) >= t_k(n) - n`.
pub fn sigma_bounds_check(k: usize, n: usize, exact: bool) -> Result<SigmaReport> {
    let arr = construct_twisted_bundles(k, n)?;
    let turan = turan_number(n, k)?;
    let strips = bundle_strips(k, n);
    let raw: Vec<usize> = (1..=n).map(|w| strips.iter().position(|s| s.contains(&w)).expect("strip")).collect();
    let strip_coloring = Coloring::compact(Domain::Lines, &raw);
    let strip_coloring_valid = verify_coloring(&arr, &strip_coloring, Mode::Pl)?.is_empty();
    let (min_pl, chi_ordinary) = if exact {
        (
            min_colors(&arr, Mode::Pl, Some(k))?.value(),
            chi_graph(&ordinary_graph(&arr), k).ok(),
        )
    } else {
        (None, None)
    };
    Ok(SigmaReport {
        k,
        n,
        ordinary: arr.ordinary_points().len(),
        turan,
        lower_bound: turan.saturating_sub(n),
        strip_coloring,
        strip_coloring_valid,
        min_pl,
        chi_ordinary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simultaneous_small_n_has_no_witness() {
        for n in 2..=3 {
            let r = search_simultaneous_counterexample(n, None, &ScanOptions::default()).unwrap();
            assert!(r.witnesses.is_empty(), "n={n}");
        }
        let r = search_simultaneous_counterexample(3, None, &ScanOptions::default()).unwrap();
        assert_eq!(r.examined, 3);
        assert_eq!(r.checkpoint(), 3);
    }

    #[test]
    fn resumable_slices_cover_the_enumeration() {
        let whole = search_simultaneous_counterexample(4, Some(1), &ScanOptions::default()).unwrap();
        let first = search_simultaneous_counterexample(4, Some(1), &ScanOptions { limit: Some(10), ..Default::default() })
            .unwrap();
        let rest = search_simultaneous_counterexample(
            4,
            Some(1),
            &ScanOptions { start: first.checkpoint(), ..Default::default() },
        )
        .unwrap();
        assert_eq!(first.examined + rest.examined, whole.examined);
        assert_eq!(first.witness_count + rest.witness_count, whole.witness_count);
    }

    #[test]
    fn mx_gap_small() {
        let r = mx_gap_scan(3, &MxGapOptions::Enumerate(ScanOptions::default())).unwrap();
        // simple 3-arrangements need 3 colors with mx = 2
        assert_eq!(r.max_gap, Some(1));
        let r2 = mx_gap_scan(2, &MxGapOptions::Enumerate(ScanOptions::default())).unwrap();
        assert_eq!(r2.max_gap, Some(0));
    }

    #[test]
    fn sigma_small_cases() {
        let r = sigma_bounds_check(2, 4, true).unwrap();
        assert_eq!(r.ordinary, 0);
        assert!(r.meets_lower_bound());
        let r = sigma_bounds_check(3, 7, true).unwrap();
        assert_eq!(r.ordinary, r.lower_bound);
        assert!(r.min_pl.unwrap() <= 3);
    }
}
