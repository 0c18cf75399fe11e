//! Pseudoline arrangements as wiring diagrams, their cell structure, and
//! coloring algorithms for crossings and pseudolines, with exact oracles to
//! check them.

pub mod cli;
pub mod coloring;
pub mod construct;
pub mod diagram;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod oracles;
pub mod render;
pub mod topology;

pub use coloring::{Coloring, Domain};
pub use diagram::{Arrangement, CrossingInfo, Event, ValidationReport, WiringDiagram};
pub use error::{Error, Result};
pub use graph::Graph;
pub use oracles::Mode;
