use thiserror::Error;

/// Structural problems with a rotation system.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("{0} lists {1} but {1} does not list {0}")]
    Asymmetric(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("rotation system is not planar (Euler characteristic {0})")]
    NotPlanar(i64),
}

/// Errors while reading or writing planar code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("missing or malformed planar_code header at byte {offset}")]
    Header { offset: usize },
    #[error("truncated record at byte {offset}")]
    Truncated { offset: usize },
    #[error("bad vertex id {value} at byte {offset}")]
    BadVertex { value: usize, offset: usize },
    #[error("invalid graph in record starting at byte {offset}: {source}")]
    Graph { offset: usize, source: GraphError },
    #[error("order {0} does not fit the single-byte encoding")]
    Unsupported(usize),
}

/// Errors from array-level and patch-level operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OpError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("face of size {size} created at seam position {position}")]
    BadFace { size: usize, position: usize },
    #[error("arity mismatch: {0} vs {1} half-edges")]
    Arity(usize, usize),
    #[error("infeasible: {0}")]
    Infeasible(String),
}

/// Errors from the search kernels.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph of order {order} exceeds the vertex budget {budget}")]
    Budget { order: usize, budget: usize },
    #[error("edge-cut size {0} exceeds the supported bound 7")]
    CutBound(usize),
    #[error("{0} is not a subset of the matching")]
    NotSubset(String),
}
