use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid clique cover: {0}")]
    InvalidCover(String),

    #[error("ordering is not a permutation of the vertex set: {0}")]
    NotAPermutation(String),

    #[error("search limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("orientation contains a directed cycle")]
    CyclicOrientation,

    #[error("orientation is not transitive: {0}")]
    NotTransitive(String),

    #[error("graph is not an incomparability graph (complement has no transitive orientation)")]
    NotIncomparability,

    #[error("invalid Ramsey query: {0}")]
    InvalidQuery(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("factors do not intersect to the graph: {0}")]
    NotAnIntersection(String),

    #[error("degenerate width: {0}")]
    DegenerateWidth(String),
}

pub type Result<T> = std::result::Result<T, Error>;
