use thiserror::Error;

/// Errors raised by group constructions and the verification checks.
///
/// `NotApplicable` is deliberately separate from a `false` result: a check
/// whose hypotheses are unmet has neither passed nor failed.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generated group exceeds the order cap {cap}")]
    ClosureExceedsCap { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("subgroups belong to different parent groups")]
    MismatchedParents,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{what} of size {size} exceeds the limit {limit}")]
    TooLarge { what: &'static str, size: u128, limit: u128 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("matrix is not an automorphism")]
    NotAutomorphism,
    #[error("{0} is not a prime")]
    InvalidPrime(u64),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("validation error in entry `{entry}`: {message}")]
    Validation { entry: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
