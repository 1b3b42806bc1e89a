use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed algebra: {0}")]
    Malformed(String),

    #[error("unknown basis element {0:?}")]
    UnknownBasis(String),

    #[error("bracket [{0}, {1}] given more than once")]
    DuplicateBracket(String, String),

    #[error("not an ideal: {0}")]
    NotIdeal(String),

    #[error("not graded: {0}")]
    NotGraded(String),

    #[error("not central: {0}")]
    NotCentral(String),

    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("derived subalgebra is zero")]
    DerivedZero,

    #[error("not maximal class: dim L^2 = {derived}, expected m+n-2 = {expected}")]
    NotMaximalClass { derived: usize, expected: i64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown catalog key {0:?}")]
    UnknownKey(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A consistency check inside the chain machinery failed. On a valid
    /// algebra this signals a bug, never bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
