//! Cross-checks against independent fixed-width and alternative-algorithm
//! oracles. Nothing here calls the library's binomial code to build an
//! expected value.

use binsum_core::engine::constants::{a_constant, b_constant};
use binsum_core::engine::{evaluate_point, find_claim, Point};
use binsum_core::sequences::{prefix_sum, seq_r, seq_s, seq_t, u_term, SequenceSpec, Weight};
use binsum_core::special::{bernoulli, euler_number};
use binsum_core::{Integer, Rational};

const ROWS: usize = 64;

/// Pascal's triangle in `i128`; exact for every row used below.
fn pascal() -> Vec<Vec<i128>> {
    let mut rows = vec![vec![1i128]];
    for n in 1..ROWS {
        let prev = &rows[n - 1];
        let mut row = vec![1i128; n + 1];
        for k in 1..n {
            row[k] = prev[k - 1] + prev[k];
        }
        rows.push(row);
    }
    rows
}

fn oracle_s(c: &[Vec<i128>], n: usize, r: u32, alternating: bool) -> i128 {
    (0..=n)
        .map(|k| {
            let sign = if alternating && k % 2 == 1 { -1 } else { 1 };
            sign * c[n][k] * c[n][k] * c[2 * k][k] * (2 * k as i128 + 1).pow(r)
        })
        .sum()
}

#[test]
fn s_and_t_match_fixed_width_oracle() {
    let c = pascal();
    for n in 0..=20 {
        for r in 0..=3 {
            assert_eq!(seq_s(n as u64, r), Integer::from(oracle_s(&c, n, r, false)), "S n={n} r={r}");
            assert_eq!(seq_t(n as u64, r), Integer::from(oracle_s(&c, n, r, true)), "T n={n} r={r}");
        }
    }
}

#[test]
fn theorem_congruences_hold_in_fixed_width() {
    let c = pascal();
    for n in 1..=18usize {
        let n2 = (n * n) as i128;
        for r in 1..=2u32 {
            let s: i128 = (0..n).map(|k| oracle_s(&c, k, 2 * r, false)).sum();
            let t: i128 = (0..n).map(|k| oracle_s(&c, k, 2 * r, true)).sum();
            assert_eq!(s % n2, 0, "S n={n} r={r}");
            assert_eq!(t % n2, 0, "T n={n} r={r}");
        }
        let odd: i128 = (0..n).map(|k| oracle_s(&c, k, 3, false)).sum();
        assert_eq!((3 * odd) % n2, 0, "a_3 n={n}");
        assert_eq!((6 * odd) % (2 * n2), 0, "V_2 n={n}");
    }
}

#[test]
fn prefix_sums_match_fixed_width_oracle() {
    let c = pascal();
    for n in 1..=15usize {
        for (weight, w) in [(Weight::None, 0), (Weight::K, 1), (Weight::FourK, 4)] {
            let want: i128 = (0..n)
                .map(|k| {
                    let factor = if w == 0 { 1 } else { w * k as i128 };
                    factor * oracle_s(&c, k, 1, false)
                })
                .sum();
            let got = prefix_sum(SequenceSpec::s(1).unwrap(), n as u64, weight).unwrap();
            assert_eq!(got.to_integer(), Some(Integer::from(want)), "n={n} {weight:?}");
        }
    }
}

#[test]
fn r_matches_rational_oracle() {
    let c = pascal();
    for n in 0..=25usize {
        let mut num = 0i128;
        let mut den = 1i128;
        for k in 0..=n {
            // Accumulate over the running common denominator.
            let d = 2 * k as i128 - 1;
            let t = c[n][k] * c[n + k][k];
            num = num * d + t * den;
            den *= d;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        assert_eq!(seq_r(n as u64), Rational::new(num.into(), den.into()), "R_{n}");
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[test]
fn u_terms_match_fixed_width_oracle() {
    let c = pascal();
    for n in 1..=20usize {
        for j in 0..n {
            let inner: i128 = (j..n).map(|k| (2 * k - j + 1) as i128 * c[k][j] * c[k][j]).sum();
            let want = (2 * j + 1) as i128 * c[2 * j][j] * inner;
            assert_eq!(u_term(n as u64, j as u64).unwrap(), Integer::from(want));
        }
    }
}

/// Akiyama–Tanigawa, which yields `B_1 = +1/2`; only even indices are compared.
fn akiyama_tanigawa(m: usize) -> Rational {
    let mut a: Vec<Rational> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        a.push(Rational::new(1.into(), Integer::from(j as u64 + 1)));
        for i in (1..=j).rev() {
            a[i - 1] = Rational::from_integer(Integer::from(i as u64)) * (&a[i - 1] - &a[i]);
        }
    }
    a[0].clone()
}

#[test]
fn bernoulli_matches_akiyama_tanigawa() {
    for m in (0..=30).step_by(2) {
        assert_eq!(bernoulli(m as u64).value, akiyama_tanigawa(m), "B_{m}");
    }
}

#[test]
fn euler_numbers_match_secant_series_oracle() {
    // Seidel's boustrophedon for the zigzag numbers; E_{2n} = (−1)^n A_{2n}.
    let mut row = vec![1i128];
    let mut zigzag = vec![1i128];
    for _ in 1..=24 {
        let mut next = vec![0i128];
        for &x in row.iter().rev() {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        zigzag.push(*next.last().unwrap());
        row = next;
    }
    for n in 0..=12usize {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(euler_number(2 * n as u64), Integer::from(sign * zigzag[2 * n]), "E_{}", 2 * n);
        assert_eq!(euler_number(2 * n as u64 + 1), Integer::from(0));
    }
}

#[test]
fn constants_follow_bernoulli_denominators() {
    for r in 2..=12u32 {
        let v = bernoulli(2 * u64::from(r) - 2).denominator;
        assert_eq!(a_constant(r).unwrap() * 2, v);
    }
    assert_eq!(b_constant(5).unwrap(), b_constant(4).unwrap());
}

#[test]
fn claim_points_agree_with_oracle_residues() {
    let c = pascal();
    let claim = find_claim("thm1.4b").unwrap();
    for n in 1..=12usize {
        let r = 2u32;
        let sum: i128 = (0..n).map(|k| k as i128 * oracle_s(&c, k, r, false)).sum();
        let e = evaluate_point(claim, &Point::new(vec![("n", n as u64), ("r", r.into())])).unwrap();
        assert_eq!(e.value.to_integer(), Some(Integer::from(sum)));
        assert_eq!(e.passed, (12 * sum) % (n * n) as i128 == 0);
    }
}
