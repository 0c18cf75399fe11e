//! Pseudoline colorings that avoid monochromatic crossings in a degree
//! range, by Moser–Tardos resampling, and the bundle-removal scheme for
//! all degrees of at least four.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Coloring, Domain};
use crate::diagram::Arrangement;
use crate::error::{Error, Result};

/// Smallest `k` with `k >= (4(l+r)n / (l-1))^(1/(l-1))`, computed in exact
/// integer arithmetic as the least `k` with `k^(l-1) * (l-1) >= 4(l+r)n`.
pub fn lll_color_budget(n: usize, l: usize, r: usize) -> Result<usize> {
    if l < 3 {
        return Err(Error::InvalidParameter(format!("degree range must start at l >= 3, got {l}")));
    }
    if n == 0 {
        return Err(Error::NoWires);
    }
    let target = 4 * (l + r) as u128 * n as u128;
    let e = (l - 1) as u32;
    let meets = |k: u128| k.checked_pow(e).is_none_or(|p| p.saturating_mul((l - 1) as u128) >= target);
    // exponential then binary search
    let mut hi: u128 = 1;
    while !meets(hi) {
        hi *= 2;
    }
    let mut lo = hi / 2;
    while lo + 1 < hi {
        let mid = (lo + hi) / 2;
        if meets(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi.max(1) as usize)
}

/// `⌈√n⌉`.
pub fn ceil_sqrt(n: usize) -> usize {
    let mut s = (n as f64).sqrt() as usize;
    while s * s < n {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= n {
        s -= 1;
    }
    s
}

#[derive(Debug, Clone)]
pub struct LllParams {
    /// Lowest forbidden degree, at least 3.
    pub l: usize,
    /// Forbidden degrees are `l..=l+r`.
    pub r: usize,
    /// Palette size; defaults to [`lll_color_budget`].
    pub k: Option<usize>,
    pub seed: u64,
    /// Defaults to `1000 * |events|`.
    pub max_rounds: Option<usize>,
}

impl LllParams {
    pub fn new(l: usize, r: usize, seed: u64) -> Self {
        LllParams { l, r, k: None, seed, max_rounds: None }
    }
}

#[derive(Debug, Clone)]
pub struct Resampled {
    pub coloring: Coloring,
    /// Palette the colors were drawn from.
    pub palette: usize,
    pub rounds: usize,
}

/// Line coloring with no monochromatic crossing of degree in `l..=l+r`.
pub fn lll_coloring(arr: &Arrangement, params: &LllParams) -> Result<Coloring> {
    lll_resample(arr, params).map(|r| r.coloring)
}

/// Moser–Tardos: draw every wire's color uniformly from the palette, then
/// while some targeted crossing is monochromatic, redraw the colors of the
/// wires through the lowest-index such crossing.
pub fn lll_resample(arr: &Arrangement, params: &LllParams) -> Result<Resampled> {
    let LllParams { l, r, seed, .. } = *params;
    let palette = match params.k {
        Some(k) => k,
        None => lll_color_budget(arr.n(), l, r)?,
    };
    if l < 3 {
        return Err(Error::InvalidParameter(format!("degree range must start at l >= 3, got {l}")));
    }
    if palette == 0 {
        return Err(Error::InvalidParameter("palette must have at least one color".into()));
    }
    let max_rounds = params.max_rounds.unwrap_or(1000 * arr.num_crossings().max(1));
    let targets: Vec<&[usize]> = arr
        .crossings()
        .iter()
        .filter(|c| (l..=l + r).contains(&c.degree()))
        .map(|c| c.lines.as_slice())
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colors: Vec<usize> = (0..arr.n()).map(|_| rng.gen_range(0..palette)).collect();
    let mut rounds = 0;
    loop {
        let bad = targets.iter().find(|lines| {
            let c0 = colors[lines[0] - 1];
            lines.iter().all(|&w| colors[w - 1] == c0)
        });
        let Some(lines) = bad else { break };
        if rounds == max_rounds {
            return Err(Error::ResamplingLimit { rounds });
        }
        for &w in lines.iter() {
            colors[w - 1] = rng.gen_range(0..palette);
        }
        rounds += 1;
    }
    Ok(Resampled { coloring: Coloring::compact(Domain::Lines, &colors), palette, rounds })
}

#[derive(Debug, Clone)]
pub struct Degree4Outcome {
    pub coloring: Coloring,
    /// Removed bundles in removal order, by wire label.
    pub bundles: Vec<Vec<usize>>,
    /// Palette of the resampling stage, `None` when it was skipped.
    pub lll_palette: Option<usize>,
    /// `⌈√n⌉`, the degree threshold for bundle removal.
    pub threshold: usize,
}

/// Line coloring with no monochromatic crossing of degree at least four.
pub fn degree_ge4_coloring(arr: &Arrangement, seed: u64) -> Result<Coloring> {
    degree_ge4_details(arr, seed).map(|o| o.coloring)
}

/// Bundle removal, resampling, reinsertion.
///
/// 1. While the remaining arrangement has a crossing of degree above
///    `s = ⌈√n⌉`, drop all wires through it (one bundle).
/// 2. Color the rest by resampling with `l = 4`, `r = s - 4`; skipped when
///    no crossing of degree four or more is left.
/// 3. Give each bundle two fresh colors, alternating in label order.
///
/// Two wires of a bundle meet only at the bundle's own crossing, so every
/// other crossing holds at most one wire per bundle.
pub fn degree_ge4_details(arr: &Arrangement, seed: u64) -> Result<Degree4Outcome> {
    let n = arr.n();
    let s = ceil_sqrt(n);
    let mut remaining: BTreeSet<usize> = (1..=n).collect();
    let mut bundles = Vec::new();
    while !remaining.is_empty() {
        let labels: Vec<usize> = remaining.iter().copied().collect();
        let sub = arr.restrict(&remaining)?;
        let Some(c) = sub.crossings().iter().find(|c| c.degree() > s) else { break };
        let bundle: Vec<usize> = c.lines.iter().map(|&w| labels[w - 1]).collect();
        for w in &bundle {
            remaining.remove(w);
        }
        bundles.push(bundle);
    }

    let mut colors = vec![0usize; n];
    let mut next = 0;
    let mut lll_palette = None;
    if !remaining.is_empty() {
        let labels: Vec<usize> = remaining.iter().copied().collect();
        let sub = arr.restrict(&remaining)?;
        if sub.crossings().iter().any(|c| c.degree() >= 4) {
            debug_assert!(s >= 4);
            let params = LllParams::new(4, s - 4, seed);
            let res = lll_resample(&sub, &params)?;
            for (i, &w) in labels.iter().enumerate() {
                colors[w - 1] = res.coloring.color(i);
            }
            next = res.coloring.num_colors();
            lll_palette = Some(res.palette);
        } else {
            next = 1;
        }
    }
    for bundle in &bundles {
        for (i, &w) in bundle.iter().enumerate() {
            colors[w - 1] = next + i % 2;
        }
        next += 2;
    }
    Ok(Degree4Outcome {
        coloring: Coloring::compact(Domain::Lines, &colors),
        bundles,
        lll_palette,
        threshold: s,
    })
}

/// `⌈(4√n·n/3)^(1/3)⌉ + 2⌈√n⌉`, the color bound of the degree-four scheme
/// with the real square root in the resampling term.
pub fn degree_ge4_reference_bound(n: usize) -> usize {
    let x = 4.0 * (n as f64).sqrt() * n as f64 / 3.0;
    let mut c = x.cbrt().ceil() as usize;
    // guard against rounding on exact cubes
    while c > 0 && ((c - 1) as f64).powi(3) >= x {
        c -= 1;
    }
    c + 2 * ceil_sqrt(n)
}
