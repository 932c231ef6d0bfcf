use thiserror::Error;

use crate::graph::MAX_VERTICES;

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not cubic")]
    NotCubic,

    #[error("pattern has {0} vertices, at most {max} supported", max = crate::patterns::MAX_PATTERN_VERTICES)]
    PatternTooLarge(usize),

    #[error("brute-force oracle limited to {max} vertices, got {n}")]
    OracleTooLarge { n: usize, max: usize },

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is not printable graph6")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("malformed size header")]
    MalformedHeader,
    #[error("expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after adjacency data")]
    TrailingGarbage(usize),
    #[error("nonzero padding bits")]
    NonzeroPadding,
}
