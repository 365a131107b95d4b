use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("generators have mixed degrees {first} and {other}")]
    MixedDegrees { first: u32, other: u32 },

    #[error("generating set is empty")]
    Empty,

    #[error("generators of degree 0 are not allowed")]
    ZeroDegree,

    #[error("algebra has dimension {dim} < {ambient}")]
    DimensionDeficient { dim: usize, ambient: usize },

    #[error("subset budget of {limit} exceeded")]
    LimitExceeded { limit: u64 },

    #[error("monomial set is not strongly stable")]
    NotStronglyStable,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph is bipartite")]
    Bipartite,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not connected")]
    Disconnected,

    #[error("no guarantee: |V| = {size} exceeds d - c = {bound}")]
    NoGuarantee { size: usize, bound: usize },

    #[error("requested {requested} vertices, enumeration cap is {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("internal assertion failed: {0}")]
    Internal(String),
}
