use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    SelfLoop(usize),
    InvalidProbability,
    /// An intermediate object grew past a configured budget.
    ResourceLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    /// Input too large for an exponential algorithm's size guard.
    SizeGuard {
        n: usize,
        limit: usize,
    },
    IsolatedVertices(Vec<usize>),
    MalformedDecomposition(String),
    MalformedCotree(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::InvalidProbability => f.write_str("edge probability must lie in [0, 1]"),
            Error::ResourceLimit { what, size, limit } => {
                write!(f, "{what} would have {size} vertices, over the budget of {limit}")
            }
            Error::SizeGuard { n, limit } => {
                write!(f, "graph has {n} vertices; this algorithm is guarded at {limit}")
            }
            Error::IsolatedVertices(vs) => write!(f, "graph has isolated vertices {vs:?}"),
            Error::MalformedDecomposition(msg) => write!(f, "malformed branch decomposition: {msg}"),
            Error::MalformedCotree(msg) => write!(f, "malformed cotree: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
