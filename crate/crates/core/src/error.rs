use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {n} exceeds the supported maximum {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("graph order {n} is below the clique size r = {r}")]
    OrderBelowCliqueSize { n: usize, r: usize },

    #[error("clique size must be at least 1")]
    ZeroCliqueSize,

    #[error("vertex {v} is not dominating")]
    NotDominating { v: usize },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed adjacency matrix: {0}")]
    AdjacencyText(String),

    #[error("invalid Cayley spec: {0}")]
    CayleySpec(String),

    #[error("invalid family parameter t = {t} (need t >= 2)")]
    FamilyParameter { t: usize },

    #[error("invalid search configuration: {0}")]
    SearchConfig(String),

    #[error("malformed job token: {0}")]
    JobToken(String),

    #[error("stale job prefix at decision {depth}: {reason}")]
    StaleJob { depth: usize, reason: String },

    #[error("permutation of degree {found} in a group of degree {expected}")]
    PermutationDegree { expected: usize, found: usize },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("unknown atlas entry `{0}`")]
    UnknownEntry(String),
}

pub type Result<T> = std::result::Result<T, Error>;
