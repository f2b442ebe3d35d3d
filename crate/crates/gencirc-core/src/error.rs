//! Shared error type for construction and arithmetic failures.

use thiserror::Error;

/// Everything that can go wrong while building or operating on the matrix
/// types in this crate. Variants carry the offending values so callers can
/// render precise diagnostics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("index {index} is out of range for modulus {modulus}")]
    IndexOutOfRange { index: usize, modulus: usize },

    #[error("expected a vector of length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("{index} is not an orbit representative (representatives are 0..{count})")]
    NotARepresentative { index: usize, count: usize },

    #[error("orbit product length {len} must lie in 1..={order}")]
    OrbitLengthOutOfRange { len: usize, order: usize },

    #[error("coefficient list must not be empty")]
    EmptyCoefficients,

    #[error("trace power {0} is outside the supported range 1..=3")]
    UnsupportedTracePower(usize),

    #[error("{op} requires {requirement}; got m={m}, s={s}")]
    WrongCase {
        op: &'static str,
        requirement: &'static str,
        m: usize,
        s: usize,
    },

    #[error("closed-form spectra require nonzero weights (weight {index} is zero)")]
    ZeroWeight { index: usize },

    #[error("matrix is numerically singular (pivot {pivot} fell below the floor)")]
    SingularMatrix { pivot: usize },

    #[error("matrix shape {rows}x{cols} does not match the expected {expected_rows}x{expected_cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("branch shift list must have one entry per orbit ({expected}), got {actual}")]
    BranchLengthMismatch { expected: usize, actual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
