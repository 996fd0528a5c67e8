//! Exact scalars and binomial coefficients.
//!
//! [`Integer`] and [`Rational`] are the `num` big-number types; rationals are
//! always held in lowest terms with a positive denominator.
//!
//! Binomials use the falling-factorial definition
//! `C(x, m) = x (x−1) … (x−m+1) / m!`, so the top may be any integer
//! (including negative ones) or, through [`gen_binomial`], any rational.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Rows of Pascal's triangle above this are computed by the product formula
/// instead of being cached.
const PASCAL_CACHE_ROWS: u64 = 512;

/// `dividend / divisor`, failing unless the division is exact.
pub fn exact_div(dividend: &Integer, divisor: &Integer) -> Result<Integer> {
    if divisor.is_zero() {
        return Err(Error::InexactDivision { dividend: dividend.clone(), divisor: divisor.clone() });
    }
    let (q, r) = dividend.div_rem(divisor);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision { dividend: dividend.clone(), divisor: divisor.clone() })
    }
}

/// `true` when `divisor | value`. Zero divides only zero.
pub fn divides(divisor: &Integer, value: &Integer) -> bool {
    if divisor.is_zero() {
        value.is_zero()
    } else {
        (value % divisor).is_zero()
    }
}

/// Least nonnegative residue of `value` modulo `|modulus|`.
pub fn residue(value: &Integer, modulus: &Integer) -> Integer {
    value.mod_floor(&modulus.abs())
}

/// The integer a rational represents, if its denominator is 1.
pub fn as_integer(value: &Rational) -> Option<Integer> {
    value.is_integer().then(|| value.numer().clone())
}

pub fn rational(value: impl Into<Integer>) -> Rational {
    Rational::from_integer(value.into())
}

/// `(−1)^k` as ±1.
pub fn alternating_sign(k: u64) -> i32 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A value that is an integer for most sequence families and a rational
/// for the `R_n` family. Equality compares numeric value, not variant.
#[derive(Debug, Clone)]
pub enum Exact {
    Integer(Integer),
    Rational(Rational),
}

impl Exact {
    pub fn to_rational(&self) -> Rational {
        match self {
            Exact::Integer(i) => rational(i.clone()),
            Exact::Rational(q) => q.clone(),
        }
    }

    /// The integer value, also for rationals with denominator 1.
    pub fn to_integer(&self) -> Option<Integer> {
        match self {
            Exact::Integer(i) => Some(i.clone()),
            Exact::Rational(q) => as_integer(q),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Exact::Integer(i) => i.is_zero(),
            Exact::Rational(q) => q.is_zero(),
        }
    }

    /// Scales by an integer, keeping the variant.
    pub fn scale(&self, factor: &Integer) -> Exact {
        match self {
            Exact::Integer(i) => Exact::Integer(i * factor),
            Exact::Rational(q) => Exact::Rational(q * rational(factor.clone())),
        }
    }
}

impl PartialEq for Exact {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Exact::Integer(a), Exact::Integer(b)) => a == b,
            _ => self.to_rational() == other.to_rational(),
        }
    }
}

impl Eq for Exact {}

impl From<Integer> for Exact {
    fn from(value: Integer) -> Self {
        Exact::Integer(value)
    }
}

impl From<Rational> for Exact {
    fn from(value: Rational) -> Self {
        Exact::Rational(value)
    }
}

impl std::ops::Add for Exact {
    type Output = Exact;

    fn add(self, rhs: Exact) -> Exact {
        match (self, rhs) {
            (Exact::Integer(a), Exact::Integer(b)) => Exact::Integer(a + b),
            (a, b) => Exact::Rational(a.to_rational() + b.to_rational()),
        }
    }
}

/// Integers print in decimal, rationals as `num/den` in lowest terms.
impl std::fmt::Display for Exact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exact::Integer(i) => write!(f, "{i}"),
            Exact::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

/// Half rows of Pascal's triangle: `rows[r][k] = C(r, k)` for `k ≤ r / 2`.
fn pascal() -> &'static RwLock<Vec<Vec<Integer>>> {
    static TABLE: OnceLock<RwLock<Vec<Vec<Integer>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![Integer::one()]]))
}

fn cached_binomial(top: u64, m: u64) -> Integer {
    let m = m.min(top - m) as usize;
    let row = top as usize;
    {
        let rows = pascal().read().expect("pascal cache poisoned");
        if let Some(r) = rows.get(row) {
            return r[m].clone();
        }
    }
    let mut rows = pascal().write().expect("pascal cache poisoned");
    while rows.len() <= row {
        let r = rows.len();
        let prev = &rows[r - 1];
        let at = |k: usize| -> Integer {
            // C(r−1, k) with symmetry folded back into the stored half.
            let k = k.min(r - 1 - k);
            prev[k].clone()
        };
        let next: Vec<Integer> =
            (0..=r / 2).map(|k| if k == 0 { Integer::one() } else { at(k) + at(k - 1) }).collect();
        rows.push(next);
    }
    rows[row][m].clone()
}

fn product_binomial(top: u64, m: u64) -> Integer {
    let m = m.min(top - m);
    let mut acc = Integer::one();
    for i in 0..m {
        acc *= top - i;
        acc /= i + 1;
    }
    acc
}

/// `C(x, m)` for any integer top `x`.
///
/// Zero when `0 ≤ x < m`; for negative tops the falling factorial gives
/// `C(x, m) = (−1)^m C(m − x − 1, m)`.
pub fn binomial(x: i64, m: u64) -> Integer {
    if x < 0 {
        let top = m + x.unsigned_abs() - 1;
        let value = binomial_nonneg(top, m);
        if m.is_multiple_of(2) {
            value
        } else {
            -value
        }
    } else {
        binomial_nonneg(x as u64, m)
    }
}

fn binomial_nonneg(top: u64, m: u64) -> Integer {
    if m > top {
        Integer::zero()
    } else if top <= PASCAL_CACHE_ROWS {
        cached_binomial(top, m)
    } else {
        product_binomial(top, m)
    }
}

/// `C(x, m)` for a rational top, by the falling-factorial product.
pub fn gen_binomial(x: &Rational, m: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..m {
        acc *= x - rational(i);
        acc /= rational(i + 1);
    }
    acc
}

fn central_table() -> &'static RwLock<Vec<Integer>> {
    static TABLE: OnceLock<RwLock<Vec<Integer>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Integer::one()]))
}

/// `C(2k, k)`.
pub fn central_binomial(k: u64) -> Integer {
    let idx = k as usize;
    {
        let table = central_table().read().expect("central cache poisoned");
        if let Some(v) = table.get(idx) {
            return v.clone();
        }
    }
    let mut table = central_table().write().expect("central cache poisoned");
    while table.len() <= idx {
        let j = (table.len() - 1) as u64;
        // C(2j+2, j+1) = C(2j, j) · 2(2j+1) / (j+1)
        let next = &table[j as usize] * (2 * (2 * j + 1)) / (j + 1);
        table.push(next);
    }
    table[idx].clone()
}

/// The Catalan number `C(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> Integer {
    exact_div(&central_binomial(k), &Integer::from(k + 1)).expect("k + 1 always divides C(2k, k)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(3, 5), 0.into());
        assert_eq!(binomial(-1, 3), (-1).into());
        assert_eq!(binomial(17, 0), 1.into());
        assert_eq!(binomial(-7, 0), 1.into());
        assert_eq!(binomial(0, 0), 1.into());
    }

    #[test]
    fn binomial_beyond_cache_matches_product() {
        let top = PASCAL_CACHE_ROWS as i64 + 37;
        let lhs = binomial(top, 11);
        let rhs = binomial(top - 1, 11) + binomial(top - 1, 10);
        assert_eq!(lhs, rhs);
        assert_eq!(binomial(600, 600), 1.into());
        assert_eq!(binomial(600, 599), 600.into());
    }

    #[test]
    fn gen_binomial_values() {
        assert_eq!(gen_binomial(&q(-1, 2), 1), q(-1, 2));
        assert_eq!(gen_binomial(&q(-1, 2), 2), q(3, 8));
        assert_eq!(gen_binomial(&q(7, 1), 3), q(35, 1));
        assert_eq!(gen_binomial(&q(-1, 2), 0), q(1, 1));
    }

    #[test]
    fn central_and_catalan() {
        assert_eq!(central_binomial(0), 1.into());
        assert_eq!(central_binomial(3), 20.into());
        assert_eq!(central_binomial(10), 184756.into());
        assert_eq!(catalan(0), 1.into());
        assert_eq!(catalan(4), 14.into());
        assert_eq!(catalan(6), 132.into());
    }

    #[test]
    fn central_binomial_matches_pascal() {
        for k in 0..300 {
            assert_eq!(central_binomial(k), binomial(2 * k as i64, k), "k = {k}");
        }
    }

    #[test]
    fn pascal_rule_including_negative_tops() {
        for x in -20i64..=20 {
            for m in 1..=12u64 {
                assert_eq!(binomial(x, m), binomial(x - 1, m) + binomial(x - 1, m - 1), "x = {x}, m = {m}");
            }
        }
    }

    #[test]
    fn half_integer_top_gives_central_binomial() {
        let half = q(-1, 2);
        for l in 0..=40u64 {
            let scaled = gen_binomial(&half, l) * rational(Integer::from(-4).pow(l as u32));
            assert_eq!(scaled, rational(central_binomial(l)), "l = {l}");
        }
    }

    #[test]
    fn catalan_is_exact() {
        for k in 0..200u64 {
            assert!(divides(&Integer::from(k + 1), &central_binomial(k)));
        }
    }

    #[test]
    fn exact_div_reports_remainder() {
        assert_eq!(exact_div(&12.into(), &4.into()), Ok(3.into()));
        assert!(matches!(exact_div(&13.into(), &4.into()), Err(Error::InexactDivision { .. })));
        assert!(exact_div(&1.into(), &0.into()).is_err());
    }

    #[test]
    fn exact_compares_by_value() {
        assert_eq!(Exact::Integer(3.into()), Exact::Rational(q(6, 2)));
        assert_ne!(Exact::Integer(3.into()), Exact::Rational(q(7, 2)));
        assert_eq!(Exact::Rational(q(7, 2)).to_string(), "7/2");
        assert_eq!(Exact::Rational(q(4, 1)).to_string(), "4/1");
        assert_eq!(Exact::Integer((-4).into()).to_string(), "-4");
        assert_eq!(Exact::Rational(q(4, 2)).to_integer(), Some(2.into()));
    }

    #[test]
    fn residue_is_nonnegative() {
        assert_eq!(residue(&(-7).into(), &5.into()), 3.into());
        assert_eq!(residue(&7.into(), &(-5).into()), 2.into());
    }

    #[test]
    fn cache_is_consistent_across_threads() {
        let handles: Vec<_> =
            (0..8).map(|t| std::thread::spawn(move || binomial(300 + t, 40 + t as u64))).collect();
        for (t, h) in handles.into_iter().enumerate() {
            let t = t as u64;
            assert_eq!(h.join().unwrap(), product_binomial(300 + t, 40 + t));
        }
    }

    proptest! {
        #[test]
        fn gen_binomial_agrees_on_integer_tops(x in -60i64..60, m in 0u64..25) {
            prop_assert_eq!(gen_binomial(&rational(x), m), rational(binomial(x, m)));
        }

        #[test]
        fn rational_ops_stay_canonical(a in -500i64..500, b in 1i64..500, c in -500i64..500, d in 1i64..500) {
            let x = q(a, b);
            let y = q(c, d);
            for v in [&x + &y, &x - &y, &x * &y] {
                prop_assert!(v.denom().is_positive());
                prop_assert!(num_integer::Integer::gcd(v.numer(), v.denom()).is_one());
            }
        }
    }
}
