//! Prime sieve and Legendre symbols.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::arith::Integer;
use crate::error::{Error, Result};

/// All primes `≤ limit` in ascending order (sieve of Eratosthenes).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(a / p)` for an odd prime `p`, by Euler's criterion `a^{(p−1)/2} mod p`.
pub fn legendre_symbol(a: &Integer, p: u64) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("Legendre symbol needs an odd prime modulus, got {p}")));
    }
    let modulus = Integer::from(p);
    let a = a.mod_floor(&modulus);
    if a.is_zero() {
        return Ok(0);
    }
    let power = a.modpow(&Integer::from((p - 1) / 2), &modulus);
    if power.is_one() {
        Ok(1)
    } else if power == &modulus - 1u32 {
        Ok(-1)
    } else {
        unreachable!("Euler's criterion yields ±1 for prime moduli")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sieve_values() {
        assert_eq!(primes_up_to(10), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(2), vec![2]);
        let p30 = primes_up_to(30);
        assert_eq!(p30.len(), 10);
        assert_eq!(p30.last(), Some(&29));
        assert!(primes_up_to(1).is_empty());
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let sieve = primes_up_to(2000);
        let trial: Vec<u64> = (0..=2000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, trial);
    }

    #[test]
    fn legendre_values() {
        assert_eq!(legendre_symbol(&1.into(), 5).unwrap(), 1);
        assert_eq!(legendre_symbol(&2.into(), 5).unwrap(), -1);
        assert_eq!(legendre_symbol(&10.into(), 5).unwrap(), 0);
        assert_eq!(legendre_symbol(&(-1).into(), 7).unwrap(), -1);
        assert_eq!(legendre_symbol(&(-1).into(), 13).unwrap(), 1);
    }

    #[test]
    fn legendre_rejects_bad_moduli() {
        assert!(legendre_symbol(&3.into(), 2).is_err());
        assert!(legendre_symbol(&3.into(), 9).is_err());
        assert!(legendre_symbol(&3.into(), 1).is_err());
    }

    #[test]
    fn legendre_matches_residue_enumeration() {
        for p in primes_up_to(200).into_iter().skip(1) {
            let squares: std::collections::HashSet<u64> = (1..p).map(|x| x * x % p).collect();
            for a in 0..p {
                let expected = if a == 0 {
                    0
                } else if squares.contains(&a) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre_symbol(&a.into(), p).unwrap(), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn reciprocity_with_five() {
        for p in primes_up_to(500).into_iter().filter(|&p| p > 5) {
            assert_eq!(
                legendre_symbol(&5.into(), p).unwrap(),
                legendre_symbol(&(p % 5).into(), 5).unwrap(),
                "p = {p}"
            );
        }
    }

    proptest! {
        #[test]
        fn legendre_is_completely_multiplicative(
            a in -10_000i64..10_000,
            b in -10_000i64..10_000,
            idx in 1usize..46,
        ) {
            let p = primes_up_to(200)[idx];
            let ab = Integer::from(a) * Integer::from(b);
            prop_assert_eq!(
                legendre_symbol(&a.into(), p).unwrap() * legendre_symbol(&b.into(), p).unwrap(),
                legendre_symbol(&ab, p).unwrap()
            );
        }
    }
}
