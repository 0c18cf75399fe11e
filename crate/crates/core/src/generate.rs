//! Generators: random arrangements, the trivial pencil, and exhaustive enumeration.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Arrangement, Event, WiringDiagram};
use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_all`].
pub const MAX_ENUMERATION_WIRES: usize = 6;

/// Random simple arrangement: swap a uniformly chosen adjacent pair that has
/// not crossed yet until the order is reversed. Deterministic in `seed`.
pub fn gen_random_simple(n: usize, seed: u64) -> Result<Arrangement> {
    if n == 0 {
        return Err(Error::NoWires);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (1..=n).collect();
    let mut events = Vec::with_capacity(n * (n - 1) / 2);
    loop {
        let free: Vec<usize> = (0..n.saturating_sub(1))
            .filter(|&i| order[i] < order[i + 1])
            .collect();
        let Some(&p) = free.choose(&mut rng) else { break };
        order.swap(p, p + 1);
        events.push(Event::new(p, 2));
    }
    Arrangement::new(WiringDiagram::new(n, events)?)
}

/// Random arrangement that may contain crossings of higher degree.
///
/// Each step picks a block among all increasing runs of the current order.
/// With probability `merge` the block is a random sub-interval of length at
/// least three (when one exists), otherwise an adjacent pair.
pub fn gen_random(n: usize, seed: u64, merge: f64) -> Result<Arrangement> {
    if n == 0 {
        return Err(Error::NoWires);
    }
    if !(0.0..=1.0).contains(&merge) {
        return Err(Error::InvalidParameter(format!("merge probability {merge} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (1..=n).collect();
    let mut events = Vec::new();
    loop {
        let runs = increasing_runs(&order);
        if runs.is_empty() {
            break;
        }
        let long: Vec<(usize, usize)> = runs.iter().copied().filter(|&(_, len)| len >= 3).collect();
        let event = if !long.is_empty() && rng.gen_bool(merge) {
            let &(start, len) = long.choose(&mut rng).expect("non-empty");
            let k = rng.gen_range(3..=len);
            let p = start + rng.gen_range(0..=len - k);
            Event::new(p, k)
        } else {
            let pairs: Vec<usize> = runs
                .iter()
                .flat_map(|&(start, len)| start..start + len - 1)
                .collect();
            Event::new(*pairs.choose(&mut rng).expect("non-empty"), 2)
        };
        order[event.tracks()].reverse();
        events.push(event);
    }
    Arrangement::new(WiringDiagram::new(n, events)?)
}

/// Maximal runs `(start, len)` with `len >= 2` of increasing labels.
fn increasing_runs(order: &[usize]) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=order.len() {
        if i == order.len() || order[i - 1] > order[i] {
            if i - start >= 2 {
                runs.push((start, i - start));
            }
            start = i;
        }
    }
    runs
}

/// The pencil: all `n` pseudolines through one point.
pub fn gen_trivial(n: usize) -> Result<Arrangement> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("trivial arrangement needs n >= 2, got {n}")));
    }
    Arrangement::new(WiringDiagram::new(n, vec![Event::new(0, n)])?)
}

/// Every valid event sequence on `n` wires, each exactly once, in
/// lexicographic order of the sequences.
pub fn enumerate_all(n: usize) -> Result<Enumeration> {
    if n == 0 || n > MAX_ENUMERATION_WIRES {
        return Err(Error::InvalidParameter(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_WIRES}, got {n}"
        )));
    }
    Ok(Enumeration::new(n, false))
}

/// Like [`enumerate_all`] but yields only diagrams that equal their own
/// [`WiringDiagram::canonical_form`], dropping reflected copies.
pub fn enumerate_canonical(n: usize) -> Result<Enumeration> {
    let mut e = enumerate_all(n)?;
    e.canonical_only = true;
    Ok(e)
}

/// Depth-first enumeration of wiring diagrams. A block is legal iff its
/// labels are increasing, i.e. no two of its wires crossed already; every
/// such partial sequence extends to a full reversal.
pub struct Enumeration {
    n: usize,
    canonical_only: bool,
    order: Vec<usize>,
    events: Vec<Event>,
    // Per depth, the candidate blocks not yet explored.
    stack: Vec<Vec<Event>>,
    started: bool,
}

impl Enumeration {
    fn new(n: usize, canonical_only: bool) -> Self {
        Enumeration {
            n,
            canonical_only,
            order: (1..=n).collect(),
            events: Vec::new(),
            stack: Vec::new(),
            started: false,
        }
    }

    fn candidates(&self) -> Vec<Event> {
        let mut out = Vec::new();
        for (start, len) in increasing_runs(&self.order) {
            for p in start..start + len - 1 {
                for k in 2..=start + len - p {
                    out.push(Event::new(p, k));
                }
            }
        }
        // popped from the back, so reverse for lexicographic output
        out.reverse();
        out
    }

    fn next_leaf(&mut self) -> Option<WiringDiagram> {
        if !self.started {
            self.started = true;
            let c = self.candidates();
            if c.is_empty() {
                return Some(WiringDiagram::new(self.n, Vec::new()).expect("legal"));
            }
            self.stack.push(c);
        }
        loop {
            let top = self.stack.last_mut()?;
            match top.pop() {
                Some(e) => {
                    self.order[e.tracks()].reverse();
                    self.events.push(e);
                    let c = self.candidates();
                    if c.is_empty() {
                        let leaf = WiringDiagram::new(self.n, self.events.clone()).expect("legal");
                        let e = self.events.pop().expect("just pushed");
                        self.order[e.tracks()].reverse();
                        return Some(leaf);
                    }
                    self.stack.push(c);
                }
                None => {
                    self.stack.pop();
                    if let Some(e) = self.events.pop() {
                        self.order[e.tracks()].reverse();
                    }
                }
            }
        }
    }
}

impl Iterator for Enumeration {
    type Item = WiringDiagram;

    fn next(&mut self) -> Option<WiringDiagram> {
        loop {
            let d = self.next_leaf()?;
            if !self.canonical_only || d.canonical_form() == d {
                return Some(d);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_simple_small_cases() {
        assert!(gen_random_simple(1, 0).unwrap().events().is_empty());
        assert_eq!(gen_random_simple(2, 7).unwrap().events(), &[Event::new(0, 2)]);
        let a = gen_random_simple(5, 42).unwrap();
        assert_eq!(a.events().len(), 10);
        assert!(a.is_simple());
        assert!(a.diagram().validate().valid);
    }

    #[test]
    fn random_is_reproducible() {
        assert_eq!(gen_random_simple(8, 3).unwrap(), gen_random_simple(8, 3).unwrap());
        assert_eq!(gen_random(8, 3, 0.5).unwrap(), gen_random(8, 3, 0.5).unwrap());
        assert!(gen_random(4, 0, 1.5).is_err());
    }

    #[test]
    fn random_general_is_valid() {
        for seed in 0..50 {
            let a = gen_random(7, seed, 0.6).unwrap();
            let pairs: usize = a.crossings().iter().map(|c| c.degree() * (c.degree() - 1) / 2).sum();
            assert_eq!(pairs, 21);
        }
    }

    #[test]
    fn trivial_examples() {
        assert_eq!(gen_trivial(2).unwrap().events(), &[Event::new(0, 2)]);
        let p5 = gen_trivial(5).unwrap();
        assert_eq!(p5.events(), &[Event::new(0, 5)]);
        assert_eq!(p5.mx(), 1);
        assert!(gen_trivial(1).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_all(1).unwrap().count(), 1);
        assert_eq!(enumerate_all(2).unwrap().count(), 1);
        let three: Vec<_> = enumerate_all(3).unwrap().collect();
        assert_eq!(three.len(), 3);
        assert!(three.contains(&WiringDiagram::from_pairs(3, &[(0, 3)]).unwrap()));

        let four: Vec<_> = enumerate_all(4).unwrap().collect();
        let simple = four
            .iter()
            .filter(|d| d.events().iter().all(|e| e.k == 2))
            .count();
        // reduced words of the longest permutation of S_4
        assert_eq!(simple, 16);
        assert!(four.len() > 16);
        assert!(four.iter().all(|d| d.validate().valid));
        assert!(enumerate_all(7).is_err());
        assert!(enumerate_all(0).is_err());
    }

    #[test]
    fn canonical_enumeration_is_subset() {
        let all = enumerate_all(4).unwrap().count();
        let canon: Vec<_> = enumerate_canonical(4).unwrap().collect();
        assert!(canon.len() < all);
        assert!(canon.iter().all(|d| d.canonical_form() == *d));
    }
}
