use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("field order {order} exceeds the supported maximum {limit}")]
    FieldTooLarge { order: u64, limit: u64 },
    #[error("element {element} is not in GF({order})")]
    ElementOutOfRange { element: u32, order: u32 },
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("expected a vertex set of size {expected}, got {got}")]
    WrongSetSize { expected: usize, got: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("uniformity mismatch: hypergraph is {hypergraph}-uniform, pattern is {pattern}-uniform")]
    UniformityMismatch { hypergraph: usize, pattern: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what} cap exceeded: {actual} > {limit}")]
    CapExceeded { what: &'static str, actual: u64, limit: u64 },
    #[error("undecided: {what} has {size} vertices, over the exact cap {limit}")]
    Undecided { what: &'static str, size: usize, limit: usize },
    #[error("hypergraph has no edges")]
    EmptyHypergraph,
    #[error("search result is incomplete")]
    IncompleteResult,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
