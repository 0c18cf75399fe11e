//! Text formats.
//!
//! * `.wd` wiring diagrams: first line `n`, then one `p k` line per event.
//!   `#` starts a comment; blank lines are ignored.
//! * Inline diagrams: `n:p,k;p,k;...` (`n:` alone for no events).
//! * Colorings: header `mode n K`, then `index color` per item. Crossings
//!   are indexed from 0 in event order, wires by their label `1..=n`.
//! * Search reports: `#` header lines, then `inline mode minimum mx=..` per
//!   witness. A minimum above the cap is written `>cap`.

use std::fmt::Write as _;

use crate::coloring::{Coloring, Domain};
use crate::diagram::{Event, WiringDiagram};
use crate::error::{Error, Result};
use crate::oracles::{Bound, Mode, SearchReport};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn number(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, found {tok:?}")))
}

pub fn parse_wd(text: &str) -> Result<WiringDiagram> {
    let mut n = None;
    let mut events = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match (n, toks.as_slice()) {
            (None, [t]) => n = Some(number(t, line)?),
            (None, _) => return Err(parse_err(line, "first line must hold the wire count")),
            (Some(_), [p, k]) => events.push(Event::new(number(p, line)?, number(k, line)?)),
            (Some(_), _) => return Err(parse_err(line, "expected `p k`")),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "empty input"))?;
    WiringDiagram::new(n, events)
}

pub fn serialize_wd(d: &WiringDiagram) -> String {
    let mut s = format!("{}\n", d.n());
    for e in d.events() {
        let _ = writeln!(s, "{} {}", e.p, e.k);
    }
    s
}

pub fn to_inline(d: &WiringDiagram) -> String {
    let events: Vec<String> = d.events().iter().map(|e| format!("{},{}", e.p, e.k)).collect();
    format!("{}:{}", d.n(), events.join(";"))
}

pub fn parse_inline(s: &str) -> Result<WiringDiagram> {
    let (n, rest) = s.trim().split_once(':').ok_or_else(|| parse_err(1, "inline diagram needs `n:`"))?;
    let n = number(n.trim(), 1)?;
    let mut events = Vec::new();
    for part in rest.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (p, k) = part.split_once(',').ok_or_else(|| parse_err(1, format!("bad event {part:?}")))?;
        events.push(Event::new(number(p.trim(), 1)?, number(k.trim(), 1)?));
    }
    WiringDiagram::new(n, events)
}

/// A coloring together with the mode it was produced for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringFile {
    pub mode: Mode,
    pub coloring: Coloring,
}

pub fn serialize_coloring(mode: Mode, col: &Coloring) -> String {
    let mut s = format!("{} {} {}\n", mode, col.len(), col.num_colors());
    let offset = usize::from(col.domain() == Domain::Lines);
    for (i, c) in col.colors().iter().enumerate() {
        let _ = writeln!(s, "{} {}", i + offset, c);
    }
    s
}

pub fn parse_coloring(text: &str) -> Result<ColoringFile> {
    let mut header: Option<(Mode, usize, usize)> = None;
    let mut colors: Vec<Option<usize>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match (&header, toks.as_slice()) {
            (None, [m, n, k]) => {
                let mode: Mode = m.parse().map_err(|_| parse_err(line, format!("unknown mode {m:?}")))?;
                let n = number(n, line)?;
                header = Some((mode, n, number(k, line)?));
                colors = vec![None; n];
            }
            (None, _) => return Err(parse_err(line, "expected header `mode n K`")),
            (Some((mode, n, k)), [idx, c]) => {
                let offset = usize::from(mode.domain() == Domain::Lines);
                let idx = number(idx, line)?;
                let c = number(c, line)?;
                let slot = idx
                    .checked_sub(offset)
                    .filter(|&j| j < *n)
                    .ok_or_else(|| parse_err(line, format!("index {idx} out of range")))?;
                if c >= *k {
                    return Err(parse_err(line, format!("color {c} not below K = {k}")));
                }
                if colors[slot].replace(c).is_some() {
                    return Err(parse_err(line, format!("index {idx} colored twice")));
                }
            }
            (Some(_), _) => return Err(parse_err(line, "expected `index color`")),
        }
    }
    let (mode, _, k) = header.ok_or_else(|| parse_err(0, "empty input"))?;
    let colors: Vec<usize> = colors
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| parse_err(0, format!("item {i} has no color"))))
        .collect::<Result<_>>()?;
    let coloring = Coloring::new(mode.domain(), colors).map_err(|e| parse_err(0, e.to_string()))?;
    if coloring.num_colors() != k {
        return Err(parse_err(1, format!("header says {k} colors, found {}", coloring.num_colors())));
    }
    Ok(ColoringFile { mode, coloring })
}

pub fn format_bound(b: Bound) -> String {
    match b {
        Bound::Exact(v) => v.to_string(),
        Bound::Exceeds(c) => format!(">{c}"),
    }
}

/// Line-oriented report; timing is left out so identical runs give identical text.
pub fn serialize_report(r: &SearchReport) -> String {
    let mut s = format!("# search {} n={}\n", r.kind.name(), r.n);
    let _ = writeln!(s, "# start={} examined={} checkpoint={}", r.start, r.examined, r.checkpoint());
    let _ = writeln!(s, "# witnesses={} listed={}", r.witness_count, r.witnesses.len());
    if let Some(g) = r.max_gap {
        let _ = writeln!(s, "# max_gap={g}");
    }
    for w in &r.witnesses {
        let _ = writeln!(s, "{} {} {} mx={}", to_inline(&w.diagram), w.mode, format_bound(w.minimum), w.mx);
    }
    s
}

/// One parsed witness line of a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRecord {
    pub diagram: WiringDiagram,
    pub mode: Mode,
    pub minimum: Bound,
}

pub fn parse_report_records(text: &str) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() < 3 {
            return Err(parse_err(line, "expected `diagram mode minimum`"));
        }
        let diagram = parse_inline(toks[0]).map_err(|e| match e {
            Error::Parse { msg, .. } => parse_err(line, msg),
            other => other,
        })?;
        let mode = toks[1].parse().map_err(|_| parse_err(line, format!("unknown mode {:?}", toks[1])))?;
        let minimum = match toks[2].strip_prefix('>') {
            Some(c) => Bound::Exceeds(number(c, line)?),
            None => Bound::Exact(number(toks[2], line)?),
        };
        out.push(ReportRecord { diagram, mode, minimum });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wd_round_trip() {
        let text = "3\n0 2\n1 2\n0 2\n";
        let d = parse_wd(text).unwrap();
        assert_eq!(serialize_wd(&d), text);
        let commented = "# triangle\n3  # wires\n\n0 2\n1 2 # middle\n0 2\n";
        assert_eq!(parse_wd(commented).unwrap(), d);
    }

    #[test]
    fn wd_errors() {
        assert!(matches!(parse_wd(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_wd("3\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_wd("3 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_wd("3\n2 2\n"), Err(Error::IllegalEvent { .. })));
    }

    #[test]
    fn inline_round_trip() {
        let d = WiringDiagram::from_pairs(4, &[(0, 4)]).unwrap();
        assert_eq!(to_inline(&d), "4:0,4");
        assert_eq!(parse_inline("4:0,4").unwrap(), d);
        let e = WiringDiagram::from_pairs(1, &[]).unwrap();
        assert_eq!(parse_inline(&to_inline(&e)).unwrap(), e);
    }

    #[test]
    fn coloring_round_trip() {
        let c = Coloring::new(Domain::Crossings, vec![0, 1, 0, 2]).unwrap();
        let s = serialize_coloring(Mode::Cell, &c);
        assert_eq!(s, "cell 4 3\n0 0\n1 1\n2 0\n3 2\n");
        assert_eq!(parse_coloring(&s).unwrap(), ColoringFile { mode: Mode::Cell, coloring: c });
        let l = Coloring::new(Domain::Lines, vec![0, 1, 1]).unwrap();
        let s = serialize_coloring(Mode::PlDegreeAtLeast(4), &l);
        assert_eq!(s, "pl-deg-at-least-4 3 2\n1 0\n2 1\n3 1\n");
        assert_eq!(parse_coloring(&s).unwrap().coloring, l);
    }

    #[test]
    fn coloring_errors() {
        assert!(parse_coloring("cell 2 2\n0 0\n").is_err());
        assert!(parse_coloring("cell 2 2\n0 0\n0 1\n").is_err());
        assert!(parse_coloring("pl 2 1\n0 0\n1 0\n").is_err());
        assert!(parse_coloring("cell 2 3\n0 0\n1 1\n").is_err());
    }
}
