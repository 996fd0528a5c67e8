//! Exact verification of the binomial identities behind the congruences.
//!
//! Each `check_*` function evaluates both sides of one identity at one point.
//! [`sweep_identity`] runs a registered identity over a finite grid and
//! reports the first failing point, if any.
//!
//! The identities with a free integer variable `x` are polynomial in `x` for
//! fixed `n`. When the `x`-grid has more points than that polynomial's degree,
//! agreement on the grid proves the identity for every `x` at that `n`; the
//! sweep report records the largest `n` for which this holds.

use std::fmt;

use rayon::prelude::*;

use crate::arith::{
    alternating_sign, binomial, catalan, central_binomial, gen_binomial, rational, Exact, Integer, Rational,
};
use crate::error::{Error, Result};
use crate::sequences::{seq_s, u_term};
use crate::special::euler_polynomial;

/// Both sides of an identity at one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub lhs: Exact,
    pub rhs: Exact,
}

impl Comparison {
    fn new(lhs: impl Into<Exact>, rhs: impl Into<Exact>) -> Self {
        Comparison { lhs: lhs.into(), rhs: rhs.into() }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `Σ_{k=0}^{n} C(x+k, m)` against `C(n+x+1, m+1) − C(x, m+1)`.
pub fn check_shifted_hockey_stick(x: i64, m: u64, n: u64) -> Comparison {
    let lhs: Integer = (0..=n).map(|k| binomial(x + k as i64, m)).sum();
    let rhs = binomial(n as i64 + x + 1, m + 1) - binomial(x, m + 1);
    Comparison::new(lhs, rhs)
}

/// `Σ_{k=0}^{n} C(n,k)² C(x+k, 2n)` against `C(x, n)²`.
pub fn check_squared_convolution(n: u64, x: i64) -> Comparison {
    let lhs: Integer = (0..=n)
        .map(|k| {
            let c = binomial(n as i64, k);
            &c * &c * binomial(x + k as i64, 2 * n)
        })
        .sum();
    let c = binomial(x, n);
    Comparison::new(lhs, &c * &c)
}

/// `Σ_{k=0}^{n} C(n,k)² C(x+k, 2n+1)` against
/// `(1 / ((4n+2) C(2n,n))) Σ_{k=0}^{n} (2x−3k) C(x,k)² C(2k,k)`.
///
/// The right side is evaluated as a rational and compared after reduction,
/// so a non-integral right side shows up as a failure.
pub fn check_odd_convolution(n: u64, x: i64) -> Comparison {
    let lhs: Integer = (0..=n)
        .map(|k| {
            let c = binomial(n as i64, k);
            &c * &c * binomial(x + k as i64, 2 * n + 1)
        })
        .sum();
    let sum: Integer = (0..=n)
        .map(|k| {
            let c = binomial(x, k);
            Integer::from(2 * x - 3 * k as i64) * &c * &c * central_binomial(k)
        })
        .sum();
    let denom = Integer::from(4 * n + 2) * central_binomial(n);
    Comparison::new(lhs, Exact::Rational(Rational::new(sum, denom)))
}

/// `C(2l, l)` against `C(−1/2, l) · (−4)^l`.
pub fn check_half_binomial(l: u64) -> Comparison {
    let half = Rational::new((-1).into(), 2.into());
    let rhs = gen_binomial(&half, l) * rational(Integer::from(-4).pow(l as u32));
    Comparison::new(central_binomial(l), Exact::Rational(rhs))
}

/// For odd `p` and `0 ≤ l < p`: `Σ_{j=0}^{p−1} (2j+1)(−1)^j = p` and
/// `Σ_{j=l}^{p−1} (2j+1)(−1)^j = p + (−1)^l l`.
pub fn check_alternating_odd_sums(l: u64, p: u64) -> Result<[Comparison; 2]> {
    if p.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("alternating odd sums need an odd length, got {p}")));
    }
    if l >= p {
        return Err(Error::InvalidArgument(format!("tail start l = {l} outside [0, {p})")));
    }
    let signed = |j: u64| Integer::from(2 * j + 1) * alternating_sign(j);
    let full: Integer = (0..p).map(signed).sum();
    let tail: Integer = (l..p).map(signed).sum();
    let tail_rhs = Integer::from(p) + Integer::from(l) * alternating_sign(l);
    Ok([Comparison::new(full, Integer::from(p)), Comparison::new(tail, tail_rhs)])
}

/// `u_j` by direct double summation against its closed form:
/// `(1+2j) n² C(2j,j) C(n−1,j)² / (j+1)` for `j < n−1`, and
/// `n² C(2n−1, n−1)` at `j = n−1`.
///
/// The interior quotient is kept rational, so a non-exact division by
/// `j + 1` surfaces as a mismatch.
pub fn check_u_term_closed_form(n: u64, j: u64) -> Result<Comparison> {
    let lhs = u_term(n, j)?;
    let n2 = Integer::from(n * n);
    let rhs = if j + 1 < n {
        let c = binomial(n as i64 - 1, j);
        let num = Integer::from(2 * j + 1) * &n2 * central_binomial(j) * &c * &c;
        Exact::Rational(Rational::new(num, Integer::from(j + 1)))
    } else {
        Exact::Integer(n2 * binomial(2 * n as i64 - 1, n - 1))
    };
    Ok(Comparison::new(lhs, rhs))
}

/// `Σ_{k=0}^{n−1} (−1)^k (2k+1)^{2r−1}` against its telescoped Euler-polynomial
/// form `2^{2r−2} [E_{2r−1}(1/2) − (−1)^n E_{2r−1}(n + 1/2)]`.
pub fn check_euler_telescoping(n: u64, r: u32) -> Result<Comparison> {
    if r == 0 {
        return Err(Error::InvalidArgument("exponent r must be >= 1".into()));
    }
    let e = u64::from(2 * r - 1);
    let lhs: Integer = (0..n).map(|k| Integer::from(2 * k + 1).pow(e as u32) * alternating_sign(k)).sum();
    let half = Rational::new(1.into(), 2.into());
    let shifted = &half + rational(n);
    let bracket = euler_polynomial(e, &half) - euler_polynomial(e, &shifted) * rational(alternating_sign(n));
    let rhs = bracket * rational(Integer::from(1) << (2 * r - 2));
    Ok(Comparison::new(lhs, Exact::Rational(rhs)))
}

/// `E_n(x + y)` against `Σ_k C(n, k) E_k(x) y^{n−k}`.
pub fn check_euler_addition(n: u64, x: &Rational, y: &Rational) -> Comparison {
    let lhs = euler_polynomial(n, &(x + y));
    let rhs: Rational = (0..=n)
        .map(|k| {
            euler_polynomial(k, x)
                * rational(binomial(n as i64, k))
                * num_traits::pow(y.clone(), (n - k) as usize)
        })
        .sum();
    Comparison::new(Exact::Rational(lhs), Exact::Rational(rhs))
}

/// `Σ_{k=0}^{n−1} S_k` against `n² Σ_{k=0}^{n−1} C(n−1, k)² C_k`.
pub fn check_sun_quotient(n: u64) -> Result<Comparison> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    let lhs: Integer = (0..n).map(|k| seq_s(k, 1)).sum();
    let inner: Integer = (0..n)
        .map(|k| {
            let c = binomial(n as i64 - 1, k);
            &c * &c * catalan(k)
        })
        .sum();
    Ok(Comparison::new(lhs, inner * (n * n)))
}

/// Registered identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    HockeyStick,
    SquaredConvolution,
    OddConvolution,
    HalfBinomial,
    AlternatingSums,
    UTermClosedForm,
    EulerTelescoping,
    EulerAddition,
    SunQuotient,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::HockeyStick,
        IdentityId::SquaredConvolution,
        IdentityId::OddConvolution,
        IdentityId::HalfBinomial,
        IdentityId::AlternatingSums,
        IdentityId::UTermClosedForm,
        IdentityId::EulerTelescoping,
        IdentityId::EulerAddition,
        IdentityId::SunQuotient,
    ];

    pub fn key(self) -> &'static str {
        match self {
            IdentityId::HockeyStick => "eq1.7",
            IdentityId::SquaredConvolution => "eq1.8",
            IdentityId::OddConvolution => "eq1.9",
            IdentityId::HalfBinomial => "half-binomial",
            IdentityId::AlternatingSums => "alt-sums",
            IdentityId::UTermClosedForm => "lemma5.3",
            IdentityId::EulerTelescoping => "euler-telescoping",
            IdentityId::EulerAddition => "euler-addition",
            IdentityId::SunQuotient => "sun-quotient",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            IdentityId::HockeyStick => "sum_{k=0}^{n} C(x+k,m) = C(n+x+1,m+1) - C(x,m+1)",
            IdentityId::SquaredConvolution => "sum_{k=0}^{n} C(n,k)^2 C(x+k,2n) = C(x,n)^2",
            IdentityId::OddConvolution => {
                "sum_{k=0}^{n} C(n,k)^2 C(x+k,2n+1) = sum_{k=0}^{n} (2x-3k) C(x,k)^2 C(2k,k) / ((4n+2) C(2n,n))"
            }
            IdentityId::HalfBinomial => "C(2l,l) = C(-1/2,l) (-4)^l",
            IdentityId::AlternatingSums => {
                "sum_{j=0}^{p-1} (2j+1)(-1)^j = p and sum_{j=l}^{p-1} (2j+1)(-1)^j = p + (-1)^l l, p odd"
            }
            IdentityId::UTermClosedForm => {
                "u_j = (2j+1) n^2 C(2j,j) C(n-1,j)^2 / (j+1) for j < n-1, u_{n-1} = n^2 C(2n-1,n-1)"
            }
            IdentityId::EulerTelescoping => {
                "sum_{k<n} (-1)^k (2k+1)^(2r-1) = 2^(2r-2) [E_{2r-1}(1/2) - (-1)^n E_{2r-1}(n+1/2)]"
            }
            IdentityId::EulerAddition => "E_n(x+y) = sum_k C(n,k) E_k(x) y^(n-k)",
            IdentityId::SunQuotient => "sum_{k<n} S_k = n^2 sum_{k<n} C(n-1,k)^2 C_k",
        }
    }

    /// Default sweep bounds for this identity.
    pub fn default_ranges(self) -> IdentityRanges {
        let base = IdentityRanges { n_max: 20, m_max: 10, r_max: 6, x_min: -15, x_max: 15 };
        match self {
            IdentityId::HockeyStick => IdentityRanges { x_min: -20, x_max: 20, ..base },
            IdentityId::SquaredConvolution => base,
            IdentityId::OddConvolution => IdentityRanges { n_max: 15, x_min: -12, x_max: 12, ..base },
            IdentityId::HalfBinomial => IdentityRanges { n_max: 40, ..base },
            IdentityId::AlternatingSums => IdentityRanges { n_max: 99, ..base },
            IdentityId::UTermClosedForm => IdentityRanges { n_max: 60, ..base },
            IdentityId::EulerTelescoping => IdentityRanges { n_max: 40, ..base },
            IdentityId::EulerAddition => IdentityRanges { n_max: 12, x_min: -3, x_max: 3, ..base },
            IdentityId::SunQuotient => IdentityRanges { n_max: 100, ..base },
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl std::str::FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.key() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Bounds for an identity sweep. Each identity reads only the fields it
/// ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityRanges {
    pub n_max: u64,
    pub m_max: u64,
    pub r_max: u32,
    pub x_min: i64,
    pub x_max: i64,
}

/// First failing point of a sweep, with every bound variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    pub bindings: Vec<(&'static str, String)>,
    pub lhs: Exact,
    pub rhs: Exact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub domain: String,
    pub points: u64,
    pub failure: Option<IdentityFailure>,
    /// Largest `n` for which the `x`-grid certifies the polynomial identity.
    pub certified_n: Option<u64>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type Outcome = (u64, Option<IdentityFailure>);

fn failure(bindings: Vec<(&'static str, String)>, cmp: Comparison) -> Option<IdentityFailure> {
    (!cmp.holds()).then_some(IdentityFailure { bindings, lhs: cmp.lhs, rhs: cmp.rhs })
}

/// Runs `check` for every outer value in parallel and keeps the first failure
/// in outer order.
fn sweep_outer<O, F>(outer: Vec<O>, check: F) -> Outcome
where
    O: Send,
    F: Fn(O) -> Outcome + Sync + Send,
{
    let results: Vec<Outcome> = outer.into_par_iter().map(check).collect();
    let points = results.iter().map(|(p, _)| p).sum();
    let first = results.into_iter().find_map(|(_, f)| f);
    (points, first)
}

fn rational_grid(x_min: i64, x_max: i64) -> Vec<Rational> {
    let mut grid = Vec::new();
    for a in x_min..=x_max {
        grid.push(rational(a));
        grid.push(Rational::new(a.into(), 2.into()));
        grid.push(Rational::new((2 * a + 1).into(), 5.into()));
    }
    grid.sort();
    grid.dedup();
    grid
}

/// Largest `n ≤ n_max` with `grid_size > degree(n)`.
fn certified(n_max: u64, grid_size: u64, degree: impl Fn(u64) -> u64) -> Option<u64> {
    (0..=n_max).take_while(|&n| grid_size > degree(n)).last()
}

/// Runs a registered identity over the Cartesian product of its ranges.
pub fn sweep_identity(id: IdentityId, ranges: &IdentityRanges) -> Result<IdentityCheck> {
    let IdentityRanges { n_max, m_max, r_max, x_min, x_max } = *ranges;
    let uses_x = matches!(
        id,
        IdentityId::HockeyStick
            | IdentityId::SquaredConvolution
            | IdentityId::OddConvolution
            | IdentityId::EulerAddition
    );
    if uses_x && x_min > x_max {
        return Err(Error::InvalidRange(format!("x_min {x_min} > x_max {x_max}")));
    }
    let xs: Vec<i64> = (x_min..=x_max).collect();
    let grid_size = xs.len() as u64;

    let (domain, (points, failure_at), certified_n) = match id {
        IdentityId::HockeyStick => {
            let outer: Vec<i64> = xs.clone();
            let out = sweep_outer(outer, |x| {
                let mut points = 0;
                for m in 0..=m_max {
                    for n in 0..=n_max {
                        points += 1;
                        let cmp = check_shifted_hockey_stick(x, m, n);
                        let b = vec![("x", x.to_string()), ("m", m.to_string()), ("n", n.to_string())];
                        if let Some(f) = failure(b, cmp) {
                            return (points, Some(f));
                        }
                    }
                }
                (points, None)
            });
            (
                format!("x in [{x_min}, {x_max}], m <= {m_max}, n <= {n_max}"),
                out,
                // Both sides have degree ≤ m + 1 in x.
                (grid_size > m_max + 1).then_some(n_max),
            )
        }
        IdentityId::SquaredConvolution => {
            let out = sweep_outer((0..=n_max).collect(), |n| {
                let mut points = 0;
                for &x in &xs {
                    points += 1;
                    let b = vec![("n", n.to_string()), ("x", x.to_string())];
                    if let Some(f) = failure(b, check_squared_convolution(n, x)) {
                        return (points, Some(f));
                    }
                }
                (points, None)
            });
            (format!("n <= {n_max}, x in [{x_min}, {x_max}]"), out, certified(n_max, grid_size, |n| 2 * n))
        }
        IdentityId::OddConvolution => {
            let out = sweep_outer((0..=n_max).collect(), |n| {
                let mut points = 0;
                for &x in &xs {
                    points += 1;
                    let b = vec![("n", n.to_string()), ("x", x.to_string())];
                    if let Some(f) = failure(b, check_odd_convolution(n, x)) {
                        return (points, Some(f));
                    }
                }
                (points, None)
            });
            (
                format!("n <= {n_max}, x in [{x_min}, {x_max}]"),
                out,
                certified(n_max, grid_size, |n| 2 * n + 1),
            )
        }
        IdentityId::HalfBinomial => {
            let out = sweep_outer((0..=n_max).collect(), |l| {
                (1, failure(vec![("l", l.to_string())], check_half_binomial(l)))
            });
            (format!("l <= {n_max}"), out, None)
        }
        IdentityId::AlternatingSums => {
            let odd: Vec<u64> = (1..=n_max).filter(|p| p % 2 == 1).collect();
            let out = sweep_outer(odd, |p| {
                let mut points = 0;
                for l in 0..p {
                    points += 1;
                    let [full, tail] = check_alternating_odd_sums(l, p).expect("p odd, l < p");
                    for cmp in [full, tail] {
                        let b = vec![("p", p.to_string()), ("l", l.to_string())];
                        if let Some(f) = failure(b, cmp) {
                            return (points, Some(f));
                        }
                    }
                }
                (points, None)
            });
            (format!("odd p <= {n_max}, 0 <= l < p"), out, None)
        }
        IdentityId::UTermClosedForm => {
            let out = sweep_outer((1..=n_max).collect(), |n| {
                let mut points = 0;
                for j in 0..n {
                    points += 1;
                    let cmp = check_u_term_closed_form(n, j).expect("j < n");
                    let b = vec![("n", n.to_string()), ("j", j.to_string())];
                    if let Some(f) = failure(b, cmp) {
                        return (points, Some(f));
                    }
                }
                (points, None)
            });
            (format!("1 <= n <= {n_max}, 0 <= j < n"), out, None)
        }
        IdentityId::EulerTelescoping => {
            let out = sweep_outer((1..=r_max).collect(), |r| {
                let mut points = 0;
                for n in 0..=n_max {
                    points += 1;
                    let cmp = check_euler_telescoping(n, r).expect("r >= 1");
                    let b = vec![("r", r.to_string()), ("n", n.to_string())];
                    if let Some(f) = failure(b, cmp) {
                        return (points, Some(f));
                    }
                }
                (points, None)
            });
            (format!("n <= {n_max}, 1 <= r <= {r_max}"), out, None)
        }
        IdentityId::EulerAddition => {
            let grid = rational_grid(x_min, x_max);
            let out = sweep_outer((0..=n_max).collect(), |n| {
                let mut points = 0;
                for x in &grid {
                    for y in &grid {
                        points += 1;
                        let b = vec![("n", n.to_string()), ("x", x.to_string()), ("y", y.to_string())];
                        if let Some(f) = failure(b, check_euler_addition(n, x, y)) {
                            return (points, Some(f));
                        }
                    }
                }
                (points, None)
            });
            (format!("n <= {n_max}, x, y over {} rationals from [{x_min}, {x_max}]", grid.len()), out, None)
        }
        IdentityId::SunQuotient => {
            let out = sweep_outer((1..=n_max).collect(), |n| {
                let cmp = check_sun_quotient(n).expect("n >= 1");
                (1, failure(vec![("n", n.to_string())], cmp))
            });
            (format!("1 <= n <= {n_max}"), out, None)
        }
    };

    Ok(IdentityCheck { id, domain, points, failure: failure_at, certified_n })
}
