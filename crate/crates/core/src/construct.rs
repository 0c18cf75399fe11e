//! Combinatorial constructions of extremal arrangements.
//!
//! Every construction is assembled as a sequence of block reversals by a
//! small [`Builder`] that tracks wire positions, and is validated on exit.

use crate::diagram::{Arrangement, Event, WiringDiagram};
use crate::error::{Error, Result};
use crate::graph::{balanced_parts, Graph};

/// Incremental wiring-diagram assembly by wire label.
struct Builder {
    order: Vec<usize>,
    events: Vec<Event>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { order: (1..=n).collect(), events: Vec::new() }
    }

    fn pos(&self, wire: usize) -> usize {
        self.order.iter().position(|&w| w == wire).expect("wire present")
    }

    fn reverse(&mut self, p: usize, k: usize) {
        let block = &self.order[p..p + k];
        assert!(
            block.windows(2).all(|w| w[0] < w[1]),
            "construction re-crosses a pair in block {block:?}"
        );
        self.order[p..p + k].reverse();
        self.events.push(Event::new(p, k));
    }

    /// Moves `wire` one track down, crossing its lower neighbour.
    fn step_down(&mut self, wire: usize) {
        let p = self.pos(wire);
        self.reverse(p, 2);
    }

    fn step_up(&mut self, wire: usize) {
        let p = self.pos(wire);
        self.reverse(p - 1, 2);
    }

    /// Adds adjacent swaps (leftmost first) until the order is reversed.
    fn complete(&mut self) {
        while let Some(p) = (0..self.order.len().saturating_sub(1)).find(|&i| self.order[i] < self.order[i + 1]) {
            self.reverse(p, 2);
        }
    }

    fn finish(self) -> Result<Arrangement> {
        Arrangement::new(WiringDiagram::new(self.order.len(), self.events)?)
    }
}

/// The bubble-sort reduced word of the reversal on `n` tracks.
fn staircase(n: usize) -> impl Iterator<Item = usize> {
    (0..n).flat_map(move |i| 0..n.saturating_sub(1 + i))
}

/// Simple arrangement of `n` pseudolines with a bounded cell that has all
/// `n` crossings on its boundary, the wiring analogue of extending the sides
/// of a convex `n`-gon.
///
/// The cell lives in the gap between tracks `a - 1` and `a` with
/// `a = n / 2`. It opens with the crossing of wires `a` and `a + 1`; wires
/// `a - 1, ..., 1` then take over its upper side one by one and wires
/// `a + 2, ..., n` its lower side, and it closes where the last upper and
/// lower wires meet.
pub fn construct_polygon_cell(n: usize) -> Result<Arrangement> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("polygon cell needs n >= 3, got {n}")));
    }
    let a = n / 2;
    let mut b = Builder::new(n);
    b.reverse(a - 1, 2);
    for w in (1..a).rev() {
        while b.pos(w) < a - 1 {
            b.step_down(w);
        }
    }
    for w in a + 2..=n {
        while b.pos(w) > a {
            b.step_up(w);
        }
    }
    b.reverse(a - 1, 2);
    b.complete();
    b.finish()
}

/// Wires of each strip in [`construct_twisted_bundles`], by label.
pub fn bundle_strips(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut next = 1;
    balanced_parts(n, k)
        .into_iter()
        .map(|s| {
            let strip: Vec<usize> = (next..next + s).collect();
            next += s;
            strip
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Twist {
    None,
    Upper,
    Lower,
}

/// Swaps two adjacent strips (`upper` directly above `lower`, both
/// contiguous). A twisted strip is reversed together with the first wire of
/// the other strip that passes it, in a single crossing.
fn swap_strips(b: &mut Builder, upper: &[usize], lower: &[usize], twist: Twist) {
    match twist {
        Twist::Lower if lower.len() >= 2 => {
            // bottom wire of `upper` passes the whole lower strip at once
            let x = *upper.iter().max_by_key(|&&w| b.pos(w)).expect("non-empty");
            let p = b.pos(x);
            b.reverse(p, lower.len() + 1);
            let mut rest: Vec<usize> = upper.iter().copied().filter(|&w| w != x).collect();
            rest.sort_by_key(|&w| std::cmp::Reverse(b.pos(w)));
            for w in rest {
                for _ in 0..lower.len() {
                    b.step_down(w);
                }
            }
        }
        Twist::Upper if upper.len() >= 2 => {
            let y = *lower.iter().min_by_key(|&&w| b.pos(w)).expect("non-empty");
            let p = b.pos(y) - upper.len();
            b.reverse(p, upper.len() + 1);
            let mut rest: Vec<usize> = lower.iter().copied().filter(|&w| w != y).collect();
            rest.sort_by_key(|&w| b.pos(w));
            for w in rest {
                for _ in 0..upper.len() {
                    b.step_up(w);
                }
            }
        }
        _ => {
            let mut moving: Vec<usize> = lower.to_vec();
            moving.sort_by_key(|&w| b.pos(w));
            for w in moving {
                for _ in 0..upper.len() {
                    b.step_up(w);
                }
            }
        }
    }
}

/// Arrangement with many ordinary points that is still `k`-colorable.
///
/// Each wire of a simple `k`-arrangement becomes a strip of `⌊n/k⌋` or
/// `⌈n/k⌉` parallel wires ([`bundle_strips`]). Strip `i` is twisted in the
/// crossing where one wire of strip `i + 1 (mod k)` passes it, so every
/// crossing of degree at least three contains wires of two strips and
/// coloring by strip index is a proper pseudoline coloring. For `k >= 3`
/// and strips of size at least two the ordinary points number exactly
/// `t_k(n) - n`.
///
/// Two strips cannot both be twisted this way, so `k = 2` yields the
/// trivial pencil, which is 2-colorable with no ordinary points.
pub fn construct_twisted_bundles(k: usize, n: usize) -> Result<Arrangement> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameter(format!(
            "twisted bundles need 2 <= k <= n, got k={k}, n={n}"
        )));
    }
    if k == 2 {
        return crate::generate::gen_trivial(n);
    }
    let strips = bundle_strips(k, n);
    let mut b = Builder::new(n);
    // strip slots top to bottom
    let mut slots: Vec<usize> = (0..k).collect();
    for t in staircase(k) {
        let (up, low) = (slots[t], slots[t + 1]);
        let twist = if (up + 1) % k == low {
            Twist::Upper
        } else if (low + 1) % k == up {
            Twist::Lower
        } else {
            Twist::None
        };
        swap_strips(&mut b, &strips[up], &strips[low], twist);
        slots.swap(t, t + 1);
    }
    b.finish()
}

/// Simple arrangement of `r` strips of three wires, each strip twisted in
/// its own crossing of degree three. The ordinary graph is `K_{3,...,3}`.
pub fn construct_gap(r: usize) -> Result<Arrangement> {
    if r == 0 {
        return Err(Error::InvalidParameter("gap construction needs r >= 1".into()));
    }
    let strips = bundle_strips(r, 3 * r);
    let mut b = Builder::new(3 * r);
    for i in 0..r {
        b.reverse(3 * i, 3);
    }
    let mut slots: Vec<usize> = (0..r).collect();
    for t in staircase(r) {
        let (up, low) = (slots[t], slots[t + 1]);
        swap_strips(&mut b, &strips[up], &strips[low], Twist::None);
        slots.swap(t, t + 1);
    }
    b.finish()
}

/// Output of [`construct_efl_reduction`] with the role of every wire.
#[derive(Debug, Clone)]
pub struct EflReduction {
    pub arrangement: Arrangement,
    /// `base[i]` is the wire playing vertex `i` of the input graph.
    pub base: Vec<usize>,
    /// One wire per non-edge `{i, j}` (`i < j`), through the crossing of
    /// `base[i]` and `base[j]`.
    pub connectors: Vec<((usize, usize), usize)>,
    /// Wire crossing every base wire in an ordinary point and all
    /// connectors in their common crossing.
    pub star: usize,
}

/// Arrangement on `n + C(n,2) - m + 1` pseudolines whose pseudoline
/// chromatic number is `χ(G) + 1` or `χ(G) + 2`.
///
/// Wire layout, top to bottom: the star, the connectors, then the base
/// wires. The star and connectors first meet in one crossing (after which
/// the star is lowest among them). The star then descends through the base
/// in ordinary points. The base wires cross by the staircase word; whenever
/// the staircase reaches a non-edge `{i, j}`, the next connector descends
/// and passes through that crossing, making it a crossing of degree three.
pub fn construct_efl_reduction(g: &Graph) -> Result<EflReduction> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter(format!("reduction needs at least 2 vertices, got {n}")));
    }
    // base crossings in staircase order, as vertex pairs
    let mut base_order: Vec<usize> = (0..n).collect();
    let mut base_pairs = Vec::new();
    for t in staircase(n) {
        let (a, b) = (base_order[t], base_order[t + 1]);
        base_pairs.push((a.min(b), a.max(b)));
        base_order.swap(t, t + 1);
    }
    let non_edges: Vec<(usize, usize)> =
        base_pairs.iter().copied().filter(|&(a, b)| !g.has_edge(a, b)).collect();

    let s = non_edges.len();
    let total = n + s + 1;
    let star = 1;
    let connectors: Vec<((usize, usize), usize)> =
        non_edges.iter().enumerate().map(|(i, &e)| (e, i + 2)).collect();
    let base: Vec<usize> = (0..n).map(|i| s + 2 + i).collect();
    let is_base = |w: usize| w >= s + 2;

    let mut b = Builder::new(total);
    if s >= 1 {
        b.reverse(0, s + 1);
    }
    // star descends first through all base wires
    while b.pos(star) + 1 < total && is_base(b.order[b.pos(star) + 1]) {
        b.step_down(star);
    }
    let mut next_connector = 0;
    for t in staircase(n) {
        let q = s - next_connector + t;
        let (wa, wb) = (b.order[q], b.order[q + 1]);
        let pair = {
            let (va, vb) = (wa - s - 2, wb - s - 2);
            (va.min(vb), va.max(vb))
        };
        if g.has_edge(pair.0, pair.1) {
            b.reverse(q, 2);
            continue;
        }
        let (_, w) = connectors[next_connector];
        debug_assert_eq!(connectors[next_connector].0, pair);
        next_connector += 1;
        while b.pos(w) + 1 < q {
            b.step_down(w);
        }
        b.reverse(q - 1, 3);
        while b.pos(w) + 1 < total && is_base(b.order[b.pos(w) + 1]) {
            b.step_down(w);
        }
    }
    let arrangement = b.finish()?;
    debug_assert_eq!(arrangement.n(), n + n * (n - 1) / 2 - g.num_edges() + 1);
    Ok(EflReduction { arrangement, base, connectors, star })
}
