use thiserror::Error;

/// Errors raised by the library. Every message names the violated precondition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid discriminant {0}: must be nonzero, not 1, and congruent to 0 or 1 mod 4")]
    InvalidDiscriminant(i64),

    #[error("discriminant {0} is not fundamental")]
    NotFundamental(i64),

    #[error("discriminant {0} is a perfect square: the character is principal")]
    PrincipalCharacter(i64),

    #[error("class number of discriminant {0} is not 1 (unsupported)")]
    ClassNumberNotOne(i64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid quadratic form ({a},{b},{c}): {reason}")]
    InvalidForm {
        a: i64,
        b: i64,
        c: i64,
        reason: &'static str,
    },

    #[error("form of discriminant {0} is indefinite: representation counts are infinite")]
    IndefiniteForm(i64),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("scale limit exceeded: {what} = {value} exceeds maximum {max}")]
    ScaleLimit {
        what: &'static str,
        value: u64,
        max: u64,
    },

    #[error("constant set mismatch: {0}")]
    ConstantMismatch(String),

    #[error("invalid evaluation parameters: {0}")]
    InvalidParams(String),

    #[error("arithmetic overflow while accumulating {0}")]
    Overflow(&'static str),

    #[error("report I/O: {0}")]
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;
