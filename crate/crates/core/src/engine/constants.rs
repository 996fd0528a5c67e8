//! The integer multipliers `a_{2r−1}`, `b_r` and the explicit prime-power
//! target for the alternating `T^(2)` sums.

use crate::arith::{exact_div, Integer};
use crate::error::{Error, Result};
use crate::special::bernoulli;

use super::primes::{is_prime, legendre_symbol};

/// `a_{2r−1}`: 1 for `r = 1`, otherwise `V_{2r−2} / 2`.
pub fn a_constant(r: u32) -> Result<Integer> {
    match r {
        0 => Err(Error::InvalidArgument("a constant needs r >= 1".into())),
        1 => Ok(Integer::from(1)),
        _ => exact_div(&bernoulli(2 * u64::from(r) - 2).denominator, &Integer::from(2)),
    }
}

/// `b_r`: 4 for `r = 1`, `2 V_r` for even `r`, `2 V_{r−1}` for odd `r > 1`.
pub fn b_constant(r: u32) -> Result<Integer> {
    let r = u64::from(r);
    match r {
        0 => Err(Error::InvalidArgument("b constant needs r >= 1".into())),
        1 => Ok(Integer::from(4)),
        _ if r % 2 == 0 => Ok(bernoulli(r).denominator * 2),
        _ => Ok(bernoulli(r - 1).denominator * 2),
    }
}

/// Conjectured multipliers `(2r − 1, a_{2r−1})`.
pub const CONJECTURED_A: [(u32, u32); 7] = [(3, 3), (5, 15), (7, 21), (9, 15), (11, 33), (13, 1365), (15, 3)];

/// Conjectured multipliers `(r, b_r)`; the odd-index entries are smaller than
/// what [`b_constant`] guarantees.
pub const CONJECTURED_B: [(u32, u32); 8] =
    [(2, 12), (3, 4), (4, 60), (5, 20), (6, 84), (7, 28), (8, 60), (9, 20)];

/// Target for `Σ_{k=0}^{p−1} T_k^(2) mod p³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTarget {
    pub p: u64,
    /// `p² (5 − 3 (p/5)) / 2`; the halving is always exact.
    pub target: Integer,
    /// `p³`
    pub modulus: Integer,
    /// `(p / 5)`
    pub p_over_5: i8,
    /// `(5 / p)`, only defined for odd `p`.
    pub five_over_p: Option<i8>,
}

impl PrimeTarget {
    /// Both Legendre symbols agree wherever both are defined.
    pub fn symbols_agree(&self) -> bool {
        self.five_over_p.is_none_or(|s| s == self.p_over_5)
    }
}

pub fn prime_target(p: u64) -> Result<PrimeTarget> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if p == 5 {
        return Err(Error::InvalidArgument("the symbol (p/5) vanishes at p = 5".into()));
    }
    let p_over_5 = legendre_symbol(&Integer::from(p % 5), 5)?;
    let five_over_p = if p == 2 { None } else { Some(legendre_symbol(&Integer::from(5), p)?) };
    let p_big = Integer::from(p);
    let p2 = &p_big * &p_big;
    let target = exact_div(&(&p2 * (5 - 3 * i32::from(p_over_5))), &Integer::from(2))?;
    Ok(PrimeTarget { p, target, modulus: p2 * p_big, p_over_5, five_over_p })
}
