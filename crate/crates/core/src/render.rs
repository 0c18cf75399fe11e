//! SVG drawings of wiring diagrams.

use std::fmt::Write as _;

use crate::coloring::{Coloring, Domain};
use crate::diagram::Arrangement;
use crate::error::{Error, Result};

pub const DEFAULT_PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45", "#9a6324", "#800000",
    "#469990", "#000075",
];

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub wire_spacing: f64,
    pub event_spacing: f64,
    /// Display color for color index `i`.
    pub palette: Vec<String>,
    pub labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            wire_spacing: 30.0,
            event_spacing: 40.0,
            palette: DEFAULT_PALETTE.iter().map(|s| s.to_string()).collect(),
            labels: true,
        }
    }
}

const MARGIN: f64 = 20.0;
const LABEL_WIDTH: f64 = 20.0;
const NEUTRAL: &str = "#333333";

/// Event `i` sits at `x = (i + 1) * event_spacing`; a wire on track `t` at
/// `y = t * wire_spacing` (plus margins). Each block is drawn as an X-fan:
/// its wires run into the event point and leave on their reversed tracks.
pub fn render_svg(arr: &Arrangement, coloring: Option<&Coloring>, spec: &RenderSpec) -> Result<String> {
    if let Some(c) = coloring {
        let expected = match c.domain() {
            Domain::Crossings => arr.num_crossings(),
            Domain::Lines => arr.n(),
        };
        if c.len() != expected {
            return Err(Error::DomainMismatch {
                expected: format!("{} {} colors", expected, c.domain()),
                found: format!("{} {} colors", c.len(), c.domain()),
            });
        }
        if c.num_colors() > spec.palette.len() {
            return Err(Error::PaletteTooSmall { needed: c.num_colors(), available: spec.palette.len() });
        }
    }
    let (ws, es) = (spec.wire_spacing, spec.event_spacing);
    let x0 = MARGIN + if spec.labels { LABEL_WIDTH } else { 0.0 };
    let y = |track: f64| MARGIN + track * ws;
    let m = arr.num_crossings();
    let width = x0 + (m + 1) as f64 * es + MARGIN;
    let height = 2.0 * MARGIN + (arr.n().saturating_sub(1)) as f64 * ws;

    let slabs = arr.diagram().slabs();
    let mut points: Vec<Vec<(f64, f64)>> = vec![Vec::new(); arr.n() + 1];
    for (t, &w) in slabs[0].iter().enumerate() {
        points[w].push((x0, y(t as f64)));
    }
    for (i, e) in arr.events().iter().enumerate() {
        let x = x0 + (i + 1) as f64 * es;
        let centre = y(e.p as f64 + (e.k as f64 - 1.0) / 2.0);
        for t in e.tracks() {
            let w = slabs[i][t];
            let after = slabs[i + 1].iter().position(|&v| v == w).expect("wire present");
            points[w].push((x - es / 2.0, y(t as f64)));
            points[w].push((x, centre));
            points[w].push((x + es / 2.0, y(after as f64)));
        }
    }
    for (t, &w) in slabs[m].iter().enumerate() {
        points[w].push((x0 + (m + 1) as f64 * es, y(t as f64)));
    }

    let line_color = |w: usize| match coloring {
        Some(c) if c.domain() == Domain::Lines => spec.palette[c.line_color(w)].as_str(),
        _ => NEUTRAL,
    };
    let crossing_color = |i: usize| match coloring {
        Some(c) if c.domain() == Domain::Crossings => spec.palette[c.color(i)].as_str(),
        _ => NEUTRAL,
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (w, wire) in points.iter().enumerate().skip(1) {
        let pts: Vec<String> = wire.iter().map(|(x, y)| format!("{x:.1},{y:.1}")).collect();
        let _ = writeln!(
            s,
            r#"<polyline class="wire" data-wire="{w}" points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
            pts.join(" "),
            line_color(w)
        );
    }
    for (i, e) in arr.events().iter().enumerate() {
        let x = x0 + (i + 1) as f64 * es;
        let cy = y(e.p as f64 + (e.k as f64 - 1.0) / 2.0);
        let _ = writeln!(
            s,
            r#"<circle class="crossing" data-index="{i}" cx="{x:.1}" cy="{cy:.1}" r="5" fill="{}"/>"#,
            crossing_color(i)
        );
    }
    if spec.labels {
        for (t, &w) in slabs[0].iter().enumerate() {
            let _ = writeln!(
                s,
                r#"<text x="{:.1}" y="{:.1}" font-size="12" font-family="sans-serif" dominant-baseline="middle">{w}</text>"#,
                MARGIN / 2.0,
                y(t as f64)
            );
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}
