use thiserror::Error;

use crate::diagram::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("event {index} = ({p}, {k}) is not a legal block on {n} wires")]
    IllegalEvent { index: usize, p: usize, k: usize, n: usize },

    #[error("diagram needs at least one wire")]
    NoWires,

    #[error("invalid arrangement: {0}")]
    InvalidArrangement(ValidationReport),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("restriction needs at least one kept wire")]
    EmptyKeep,

    #[error("wire {0} is not part of the arrangement")]
    UnknownWire(usize),

    #[error("graph is not simple: {0}")]
    NotSimpleGraph(String),

    #[error("order is not a topological sort of the arrangement graph")]
    NotTopological,

    #[error("no line-respecting coloring with {budget} colors")]
    BudgetExhausted { budget: usize },

    #[error("resampling did not converge within {rounds} rounds")]
    ResamplingLimit { rounds: usize },

    #[error("chromatic number exceeds cap {cap}")]
    CapExceeded { cap: usize },

    #[error("coloring domain mismatch: expected {expected}, found {found}")]
    DomainMismatch { expected: String, found: String },

    #[error("palette has {available} colors but {needed} are needed")]
    PaletteTooSmall { needed: usize, available: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
