use thiserror::Error;

/// Errors raised by the library. Everything except [`Error::Consistency`]
/// is a validation failure of caller-supplied data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for Cartan type {kind}")]
    InvalidRank { kind: String, rank: usize },
    #[error("unknown Cartan type {0:?}")]
    UnknownKind(String),
    #[error("vertex {vertex} is not in 1..={max}")]
    UnknownVertex { vertex: usize, max: usize },
    #[error("point ({vertex}, {level}) has the wrong parity for its vertex")]
    Parity { vertex: usize, level: i64 },
    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("{0}")]
    Decomposition(String),
    #[error("closure exceeded the limit of {0} elements")]
    ClosureLimit(usize),
    #[error("monomial {0} is not of the form y_R z_S^-1 with S >= 0")]
    NotInProduct(String),
    #[error("threshold set is not upward closed: {0}")]
    NotUpwardClosed(String),
    #[error("vertex {0} has no boundary point (empty column)")]
    NoBoundary(usize),
    #[error("support of R is not contained in the truncation set")]
    SupportNotContained,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid partition sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("rank {rank} is too small: {reason}")]
    RankTooSmall { rank: usize, reason: String },
    #[error("diagram with {size} boxes exceeds the brute-force limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True when the error signals a disagreement between independent
    /// computations rather than bad input.
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
