//! Wiring diagrams and validated arrangements.
//!
//! A wiring diagram on `n` wires is a sequence of block reversals. Event
//! `(p, k)` reverses the `k` wires currently on tracks `p..p+k`; every pair
//! of wires in that block meets at a single crossing of degree `k`. Wires are
//! labelled `1..=n` by their initial track, top to bottom.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// One block reversal: `k` wires starting at track `p` (0-based) cross in a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Event {
    pub p: usize,
    pub k: usize,
}

impl Event {
    pub fn new(p: usize, k: usize) -> Self {
        Event { p, k }
    }

    /// Tracks covered by the block.
    pub fn tracks(&self) -> std::ops::Range<usize> {
        self.p..self.p + self.k
    }
}

/// A syntactically legal wiring diagram. It may still fail the
/// "every pair crosses exactly once" rule; see [`WiringDiagram::validate`]
/// and [`Arrangement`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WiringDiagram {
    n: usize,
    events: Vec<Event>,
}

impl WiringDiagram {
    pub fn new(n: usize, events: Vec<Event>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoWires);
        }
        for (index, e) in events.iter().enumerate() {
            if e.k < 2 || e.p + e.k > n {
                return Err(Error::IllegalEvent { index, p: e.p, k: e.k, n });
            }
        }
        Ok(WiringDiagram { n, events })
    }

    /// Convenience constructor from `(p, k)` pairs.
    pub fn from_pairs(n: usize, events: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, events.iter().map(|&(p, k)| Event::new(p, k)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Wire order (top to bottom) in every slab: `slabs()[i]` is the order
    /// before event `i`, the last entry is the final order.
    pub fn slabs(&self) -> Vec<Vec<usize>> {
        let mut order: Vec<usize> = (1..=self.n).collect();
        let mut out = Vec::with_capacity(self.events.len() + 1);
        out.push(order.clone());
        for e in &self.events {
            order[e.tracks()].reverse();
            out.push(order.clone());
        }
        out
    }

    /// Checks that every unordered pair of wires is reversed by exactly one event.
    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut hits: Vec<Vec<usize>> = vec![Vec::new(); n * n];
        let mut order: Vec<usize> = (1..=n).collect();
        for (idx, e) in self.events.iter().enumerate() {
            let block = &order[e.tracks()];
            for (i, &a) in block.iter().enumerate() {
                for &b in &block[i + 1..] {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    hits[(lo - 1) * n + (hi - 1)].push(idx);
                }
            }
            order[e.tracks()].reverse();
        }
        let mut violations = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                let events = &hits[(a - 1) * n + (b - 1)];
                if events.len() != 1 {
                    violations.push(PairViolation {
                        pair: (a, b),
                        events: events.clone(),
                    });
                }
            }
        }
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    /// Image under top-bottom reflection.
    pub fn reflect_vertical(&self) -> WiringDiagram {
        let events = self
            .events
            .iter()
            .map(|e| Event::new(self.n - e.p - e.k, e.k))
            .collect();
        WiringDiagram { n: self.n, events }
    }

    /// Image under left-right reflection (events read right to left).
    pub fn reflect_horizontal(&self) -> WiringDiagram {
        let events = self.events.iter().rev().copied().collect();
        WiringDiagram { n: self.n, events }
    }

    /// Lexicographically smallest event sequence among the diagram and its
    /// three reflections. Reflections of an arrangement are isomorphic to it.
    pub fn canonical_form(&self) -> WiringDiagram {
        let v = self.reflect_vertical();
        let h = self.reflect_horizontal();
        let vh = v.reflect_horizontal();
        [self.clone(), v, h, vh]
            .into_iter()
            .min_by(|a, b| a.events.cmp(&b.events))
            .expect("four candidates")
    }
}

/// A pair of wires that does not cross exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairViolation {
    pub pair: (usize, usize),
    /// Events at which the pair crosses (empty if it never does).
    pub events: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<PairViolation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| {
                if v.events.is_empty() {
                    format!("{{{},{}}} never cross", v.pair.0, v.pair.1)
                } else {
                    format!(
                        "{{{},{}}} cross {} times (events {:?})",
                        v.pair.0,
                        v.pair.1,
                        v.events.len(),
                        v.events
                    )
                }
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Derived data of one crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingInfo {
    /// Event index, which is also the x-order position.
    pub index: usize,
    pub event: Event,
    /// Wire labels meeting here, ascending.
    pub lines: Vec<usize>,
}

impl CrossingInfo {
    pub fn degree(&self) -> usize {
        self.lines.len()
    }

    pub fn contains(&self, wire: usize) -> bool {
        self.lines.binary_search(&wire).is_ok()
    }
}

/// A wiring diagram that passed validation, with its crossings precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    diagram: WiringDiagram,
    crossings: Vec<CrossingInfo>,
}

impl Arrangement {
    pub fn new(diagram: WiringDiagram) -> Result<Self> {
        let report = diagram.validate();
        if !report.valid {
            return Err(Error::InvalidArrangement(report));
        }
        let mut order: Vec<usize> = (1..=diagram.n).collect();
        let mut crossings = Vec::with_capacity(diagram.events.len());
        for (index, &event) in diagram.events.iter().enumerate() {
            let mut lines = order[event.tracks()].to_vec();
            lines.sort_unstable();
            crossings.push(CrossingInfo { index, event, lines });
            order[event.tracks()].reverse();
        }
        Ok(Arrangement { diagram, crossings })
    }

    pub fn from_pairs(n: usize, events: &[(usize, usize)]) -> Result<Self> {
        Self::new(WiringDiagram::from_pairs(n, events)?)
    }

    pub fn diagram(&self) -> &WiringDiagram {
        &self.diagram
    }

    pub fn into_diagram(self) -> WiringDiagram {
        self.diagram
    }

    pub fn n(&self) -> usize {
        self.diagram.n
    }

    pub fn events(&self) -> &[Event] {
        &self.diagram.events
    }

    pub fn crossings(&self) -> &[CrossingInfo] {
        &self.crossings
    }

    pub fn crossing(&self, index: usize) -> &CrossingInfo {
        &self.crossings[index]
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    /// All crossings have degree two.
    pub fn is_simple(&self) -> bool {
        self.crossings.iter().all(|c| c.degree() == 2)
    }

    /// At most one crossing: every pseudoline passes through the same point
    /// (or there is a single wire).
    pub fn is_trivial(&self) -> bool {
        self.crossings.len() <= 1
    }

    /// Crossing indices along each wire in x-order; entry `w - 1` is wire `w`.
    pub fn wire_crossings(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n()];
        for c in &self.crossings {
            for &w in &c.lines {
                out[w - 1].push(c.index);
            }
        }
        out
    }

    /// Maximal number of crossings along any pseudoline.
    pub fn mx(&self) -> usize {
        self.wire_crossings().iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Crossings of exactly two pseudolines.
    pub fn ordinary_points(&self) -> Vec<usize> {
        self.crossings
            .iter()
            .filter(|c| c.degree() == 2)
            .map(|c| c.index)
            .collect()
    }

    /// Number of crossings of each degree; entry `k` counts degree-`k` crossings.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.n() + 1];
        for c in &self.crossings {
            hist[c.degree()] += 1;
        }
        hist
    }

    /// Sub-arrangement on the kept wires. Kept wires are relabelled `1..=m`
    /// in ascending order of their old labels; events whose block keeps fewer
    /// than two wires disappear.
    pub fn restrict(&self, keep: &BTreeSet<usize>) -> Result<Arrangement> {
        if keep.is_empty() {
            return Err(Error::EmptyKeep);
        }
        if let Some(&w) = keep.iter().find(|&&w| w == 0 || w > self.n()) {
            return Err(Error::UnknownWire(w));
        }
        let relabel: Vec<usize> = {
            let mut r = vec![0; self.n() + 1];
            for (i, &w) in keep.iter().enumerate() {
                r[w] = i + 1;
            }
            r
        };
        let mut order: Vec<usize> = (1..=self.n()).collect();
        let mut events = Vec::new();
        for e in self.events() {
            let above = order[..e.p].iter().filter(|w| relabel[**w] != 0).count();
            let inside = order[e.tracks()].iter().filter(|w| relabel[**w] != 0).count();
            if inside >= 2 {
                events.push(Event::new(above, inside));
            }
            order[e.tracks()].reverse();
        }
        Arrangement::new(WiringDiagram::new(keep.len(), events)?)
    }
}
