use thiserror::Error;

use crate::closed_forms::IdentityId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{name} must be non-negative, got {value}")]
    Negative { name: &'static str, value: i64 },

    #[error("element has zero norm and is not invertible")]
    NotInvertible,

    /// An expression that must be rational kept a nonzero α-part. This is
    /// always an implementation bug, never a property of the input.
    #[error("internal inconsistency: {0} did not rationalize")]
    NotRational(&'static str),

    /// A closed form whose integer weights should produce an integer
    /// produced a proper fraction instead.
    #[error("internal inconsistency: {0} is not an integer")]
    NotIntegral(String),

    #[error("{id} is inapplicable: {reason}")]
    Inapplicable { id: IdentityId, reason: String },

    #[error("index overflow while evaluating {0}")]
    IndexOverflow(&'static str),

    #[error("{id}: closed form {rhs} differs from direct sum {lhs}")]
    Mismatch { id: IdentityId, lhs: String, rhs: String },

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("invalid range `{0}`: expected A..B with A <= B")]
    InvalidRange(String),
}
