use thiserror::Error;

use crate::digraph::VertexSet;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("loop arc at vertex {0}")]
    LoopArc(usize),
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("{0} vertices exceeds the supported maximum of {max}", max = crate::digraph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("digraph is not symmetric")]
    NotSymmetric,
    #[error("expected a {expected}-element vertex set, got {actual}")]
    BadSubsetSize { expected: usize, actual: usize },
    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),
    #[error("coloring does not assign vertex {0}")]
    PartialAssignment(usize),
    #[error("not a cograph: {witness} induces a P4")]
    NotCograph { witness: VertexSet },
    #[error("malformed cotree: {0}")]
    MalformedCotree(String),
    #[error("digraph is not F-free: {0}")]
    NotFFree(String),
    #[error("structure violation between components {left} and {right}: {reason}")]
    StructureViolation {
        left: usize,
        right: usize,
        reason: String,
    },
    #[error("invalid probabilities psym={psym} pasym={pasym}")]
    InvalidProbabilities { psym: f64, pasym: f64 },
    #[error("unknown instance name `{0}`")]
    UnknownName(String),
    #[error("bad size for `{name}`: {reason}")]
    BadSize { name: String, reason: String },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
