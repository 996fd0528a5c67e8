//! Bernoulli numbers, Euler numbers, Euler polynomials and power sums.
//!
//! Bernoulli numbers follow the `x / (e^x − 1)` convention (`B_1 = −1/2`) and
//! come from the recurrence `Σ_{j=0}^{m} C(m+1, j) B_j = 0`. Euler numbers
//! follow `2e^t / (e^{2t} + 1)` and come from `Σ_{k=0}^{n} C(2n, 2k) E_{2k} = 0`.
//! Both tables grow on demand behind a lock; once an index is filled it never
//! changes.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::{binomial, rational, Integer, Rational};
use crate::engine::primes::primes_up_to;
use crate::error::{Error, Result};

/// `B_m = U_m / V_m` in lowest terms with `V_m > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliEntry {
    pub m: u64,
    pub value: Rational,
    pub numerator: Integer,
    pub denominator: Integer,
}

fn bernoulli_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

fn bernoulli_value(m: u64) -> Rational {
    let idx = m as usize;
    {
        let table = bernoulli_table().read().expect("bernoulli table poisoned");
        if let Some(b) = table.get(idx) {
            return b.clone();
        }
    }
    let mut table = bernoulli_table().write().expect("bernoulli table poisoned");
    while table.len() <= idx {
        let n = table.len() as u64;
        let sum: Rational =
            table.iter().enumerate().map(|(j, b)| b * rational(binomial(n as i64 + 1, j as u64))).sum();
        table.push(-sum / rational(n + 1));
    }
    table[idx].clone()
}

/// The Bernoulli number `B_m`, split into reduced numerator and denominator.
pub fn bernoulli(m: u64) -> BernoulliEntry {
    let value = bernoulli_value(m);
    BernoulliEntry { m, numerator: value.numer().clone(), denominator: value.denom().clone(), value }
}

/// Denominator of `B_m` for even `m ≥ 2` by von Staudt–Clausen: the product
/// of all primes `q` with `(q − 1) | m`.
pub fn vsc_denominator(m: u64) -> Result<Integer> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "von Staudt-Clausen denominator needs an even index >= 2, got {m}"
        )));
    }
    Ok(primes_up_to(m + 1).into_iter().filter(|q| m.is_multiple_of(q - 1)).map(Integer::from).product())
}

fn euler_table() -> &'static RwLock<Vec<Integer>> {
    static TABLE: OnceLock<RwLock<Vec<Integer>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Integer::one()]))
}

/// The Euler number `E_n` (zero for odd `n`).
pub fn euler_number(n: u64) -> Integer {
    let idx = n as usize;
    {
        let table = euler_table().read().expect("euler table poisoned");
        if let Some(e) = table.get(idx) {
            return e.clone();
        }
    }
    let mut table = euler_table().write().expect("euler table poisoned");
    while table.len() <= idx {
        let i = table.len() as u64;
        if i % 2 == 1 {
            table.push(Integer::zero());
            continue;
        }
        let half = i / 2;
        let sum: Integer = (0..half).map(|k| binomial(i as i64, 2 * k) * &table[(2 * k) as usize]).sum();
        table.push(-sum);
    }
    table[idx].clone()
}

/// `E_n(x)`, evaluated by expanding around `1/2`:
/// `E_n(x) = Σ_k C(n, k) (E_k / 2^k) (x − 1/2)^{n−k}`.
pub fn euler_polynomial(n: u64, x: &Rational) -> Rational {
    let shift = x - Rational::new(1.into(), 2.into());
    let mut power = Rational::one();
    let mut acc = Rational::zero();
    // Walk k downward so `power` tracks (x − 1/2)^{n−k}.
    for k in (0..=n).rev() {
        let e = euler_number(k);
        if !e.is_zero() {
            let at_half = Rational::new(e, Integer::one() << k);
            acc += at_half * &power * rational(binomial(n as i64, k));
        }
        power *= &shift;
    }
    acc
}

/// `S_m(n) = 1^m + 2^m + … + (n−1)^m`.
pub fn power_sum(m: u64, n: u64) -> Integer {
    (1..n).map(|i| Integer::from(i).pow(m as u32)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer as _;
    use num_traits::Signed;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn bernoulli_listed_values() {
        let b2 = bernoulli(2);
        assert_eq!(b2.value, q(1, 6));
        assert_eq!((b2.numerator, b2.denominator), (1.into(), 6.into()));
        let b12 = bernoulli(12);
        assert_eq!((b12.numerator, b12.denominator), ((-691).into(), 2730.into()));
        assert_eq!(bernoulli(3).value, q(0, 1));
        assert_eq!(bernoulli(1).value, q(-1, 2));
        assert_eq!(bernoulli(0).value, q(1, 1));
    }

    #[test]
    fn bernoulli_recurrence_holds() {
        for m in 1..=30u64 {
            let s: Rational = (0..=m).map(|j| bernoulli(j).value * rational(binomial(m as i64 + 1, j))).sum();
            assert!(s.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn vsc_values() {
        assert_eq!(vsc_denominator(2).unwrap(), 6.into());
        assert_eq!(vsc_denominator(12).unwrap(), 2730.into());
        assert_eq!(vsc_denominator(14).unwrap(), 6.into());
        assert!(vsc_denominator(0).is_err());
        assert!(vsc_denominator(7).is_err());
    }

    #[test]
    fn bernoulli_denominator_matches_vsc() {
        for m in (2..=40u64).step_by(2) {
            let entry = bernoulli(m);
            assert_eq!(entry.denominator, vsc_denominator(m).unwrap(), "m = {m}");
            assert!((&entry.denominator % 6u32).is_zero());
            assert!(entry.denominator.is_positive());
            assert!(entry.numerator.gcd(&entry.denominator).is_one());
        }
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_number(0), 1.into());
        assert_eq!(euler_number(5), 0.into());
        assert_eq!(euler_number(4), 5.into());
        assert_eq!(euler_number(10), (-50521).into());
        for n in (1..60).step_by(2) {
            assert!(euler_number(n).is_zero());
        }
    }

    #[test]
    fn euler_recurrence_holds() {
        for n in 1..=25u64 {
            let s: Integer = (0..=n).map(|k| binomial(2 * n as i64, 2 * k) * euler_number(2 * k)).sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn euler_polynomial_values() {
        assert_eq!(euler_polynomial(0, &q(7, 3)), q(1, 1));
        assert_eq!(euler_polynomial(1, &q(1, 2)), q(0, 1));
        assert_eq!(euler_polynomial(2, &q(3, 1)), q(6, 1));
        // E_1(x) = x − 1/2
        assert_eq!(euler_polynomial(1, &q(5, 1)), q(9, 2));
    }

    fn sample_points() -> Vec<Rational> {
        let mut xs = Vec::new();
        for num in -6..=6 {
            for den in [1, 2, 3, 7] {
                xs.push(q(num, den));
            }
        }
        xs
    }

    #[test]
    fn euler_polynomial_complement() {
        for n in 1..=30u64 {
            for x in sample_points() {
                let lhs = euler_polynomial(n, &x) + euler_polynomial(n, &(&x + q(1, 1)));
                let rhs = q(2, 1) * num_traits::pow(x.clone(), n as usize);
                assert_eq!(lhs, rhs, "n = {n}, x = {x}");
            }
        }
    }

    #[test]
    fn euler_polynomial_addition_formula() {
        let grid: Vec<Rational> = (-3..=3).flat_map(|a| [q(a, 1), q(a, 2), q(2 * a + 1, 5)]).collect();
        for n in 0..=12u64 {
            for x in &grid {
                for y in &grid {
                    let lhs = euler_polynomial(n, &(x + y));
                    let rhs: Rational = (0..=n)
                        .map(|k| {
                            euler_polynomial(k, x)
                                * rational(binomial(n as i64, k))
                                * num_traits::pow(y.clone(), (n - k) as usize)
                        })
                        .sum();
                    assert_eq!(lhs, rhs, "n = {n}, x = {x}, y = {y}");
                }
            }
        }
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(2, 3), 5.into());
        assert_eq!(power_sum(9, 1), 0.into());
        assert_eq!(power_sum(2, 6), 55.into());
        assert_eq!(power_sum(0, 5), 4.into());
    }

    #[test]
    fn power_sum_bernoulli_congruence() {
        for m in (2..=12u64).step_by(2) {
            let b = bernoulli(m);
            for n in 1..=100u64 {
                let n_big = Integer::from(n);
                let diff = &b.denominator * power_sum(m, n) - &n_big * &b.numerator;
                assert!((diff % (&n_big * &n_big)).is_zero(), "m = {m}, n = {n}");
            }
        }
    }

    #[test]
    fn tables_fill_concurrently() {
        let handles: Vec<_> = (0..6u64)
            .map(|t| std::thread::spawn(move || (bernoulli(50 + 2 * t), euler_number(40 + 2 * t))))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let (b, e) = h.join().unwrap();
            assert_eq!(b.denominator, vsc_denominator(50 + 2 * t as u64).unwrap());
            assert!(!e.is_zero());
        }
    }
}
