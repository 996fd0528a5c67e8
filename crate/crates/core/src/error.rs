use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the exact-arithmetic layer and the sweep engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact division left a remainder. Every division performed by this
    /// crate is mathematically exact, so this always points at a bug upstream.
    #[error("inexact division: {divisor} does not divide {dividend}")]
    InexactDivision { dividend: BigInt, divisor: BigInt },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
