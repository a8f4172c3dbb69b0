use thiserror::Error;

use crate::graph::Violation;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("division by zero in GF(p)")]
    DivisionByZero,

    #[error("subspace is not contained in the required space")]
    NotContained,

    #[error("invalid graph code: {}", crate::graph::describe_violations(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("generators do not span an isotropic subspace")]
    NotIsotropic,

    #[error("{what} requires {needed} steps, above the limit of {limit}")]
    TooLarge {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("no canonical character for p = 2 when the matrix has a nonzero diagonal entry")]
    UnsupportedCharacter,

    #[error("code has no logical inputs")]
    NoLogicalInputs,

    #[error("internal consistency check failed: {0}")]
    Internal(&'static str),

    #[error("invalid code file: {0}")]
    BadFile(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
