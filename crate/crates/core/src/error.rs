//! The crate-wide error type. Recoverable conditions (bad input, mismatched
//! shapes, window overflow, failed validation) are reported through [`Error`];
//! violations of internal invariants panic instead.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("cannot parse scalar from {0:?}")]
    ScalarParse(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(crate::field::FieldSpec, crate::field::FieldSpec),

    #[error("dimension mismatch: {context} (expected {expected}, got {got})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("index out of range: {context} ({index} >= {bound})")]
    IndexOutOfRange {
        context: &'static str,
        index: usize,
        bound: usize,
    },

    #[error(
        "window overflow: product of basis elements {left} and {right} exceeds max degree {max_degree}"
    )]
    WindowOverflow {
        left: String,
        right: String,
        max_degree: usize,
    },

    #[error("structure validation failed:\n{0}")]
    Validation(String),

    #[error("object mismatch: composing {g} after {f}")]
    ObjectMismatch { f: String, g: String },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("the Hopf algebra is not cocommutative (required here)")]
    NotCocommutative,

    #[error("operation requires a total multiplication table; this algebra is a truncation window")]
    RequiresTotalMul,

    #[error("{0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown algebra reference {0:?}")]
    UnknownAlgebra(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
