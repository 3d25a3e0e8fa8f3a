use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("edge {{{0}, {1}}} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected: components {first:?} and {second:?}")]
    Disconnected { first: Vec<usize>, second: Vec<usize> },
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("{what}: n = {n} exceeds the supported maximum {max}")]
    TooLarge { what: &'static str, n: usize, max: usize },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("the graph has no edges")]
    NoEdges,
    #[error("squarefree Veronese needs 2 <= d < n, got n = {n}, d = {d}")]
    VeroneseRange { n: usize, d: usize },
    #[error("invalid generators: {0}")]
    InvalidBasis(String),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("binomial has identical sides")]
    DegenerateBinomial,
    #[error("binomial sides lie in different fibers")]
    FiberMismatch,
    #[error("vector has dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(String),
}
