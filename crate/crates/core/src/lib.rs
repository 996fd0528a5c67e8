//! Exact arithmetic for the binomial sums
//!
//! ```text
//! S_n^(r) = Σ_{k=0}^{n} C(n,k)² C(2k,k) (2k+1)^r
//! T_n^(r) = Σ_{k=0}^{n} C(n,k)² C(2k,k) (2k+1)^r (−1)^k
//! R_n     = Σ_{k=0}^{n} C(n,k) C(n+k,k) / (2k−1)
//! ```
//!
//! together with the Bernoulli and Euler numbers their congruences depend on.
//!
//! The crate is layered bottom-up:
//!
//! * [`arith`]: big integers, rationals and (generalized) binomial coefficients;
//! * [`special`]: Bernoulli numbers split as `U_m / V_m`, Euler numbers and
//!   polynomials, power sums;
//! * [`sequences`]: the sequence families and their weighted prefix sums,
//!   always computed by direct summation;
//! * [`identities`]: pointwise and swept verification of the binomial
//!   identities the congruence proofs rest on;
//! * [`engine`]: the registry of congruence claims (theorems, lemmas,
//!   conjectures) and the parallel sweep that checks them.
//!
//! Nothing in here uses floating point.

pub mod arith;
pub mod engine;
mod error;
pub mod identities;
pub mod sequences;
pub mod special;

pub use arith::{Integer, Rational};
pub use error::{Error, Result};
