use thiserror::Error;

use crate::exponent::ExponentVector;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0:?} is not a vertex of the graph")]
    NotAVertex(ExponentVector),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("simplex value table: {0}")]
    SimplexValues(String),

    #[error("precondition violated at {witness}: {reason}")]
    Precondition { witness: String, reason: String },

    #[error("graph hypothesis violated at {0:?}: {1}")]
    Hypothesis(ExponentVector, String),

    #[error("degree bound {have} too small, need at least {need}")]
    DegreeBound { need: i64, have: i64 },

    #[error("truncated expansion did not stabilise at {0:?}")]
    Stabilization(ExponentVector),

    #[error("limit is infinite at point {0}")]
    InfiniteLimit(String),

    #[error("exact division failed: {0}")]
    NotDivisible(String),

    #[error("expected an integer, found {0}")]
    NotIntegral(String),

    #[error("over budget: {0}")]
    Budget(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
