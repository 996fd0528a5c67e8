//! Congruence claims and the sweep engine that checks them.
//!
//! A [`CongruenceClaim`] names a statement of the form
//! `multiplier · value ≡ target (mod modulus)` indexed by a few integer
//! parameters (`n`, `r`, `p`, …). [`verify_claim`] evaluates it over a finite
//! range with exact arithmetic and collects every evaluated point into a
//! [`VerificationReport`].
//!
//! Claims over `(n, r)` are split into one task per `r`; each task walks `n`
//! upward with its own incremental prefix accumulator, so a sweep costs
//! `O(n_max²)` term evaluations per `r`. Tasks run on the ambient rayon pool
//! and results are merged in parameter order, so output never depends on
//! scheduling.

pub mod constants;
pub mod primes;

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{rational, residue, Exact, Integer, Rational};
use crate::error::{Error, Result};
use crate::sequences::{prefix_sum, seq_r, u_term, PrefixSums, SequenceSpec, Weight};
use crate::special::{bernoulli, power_sum};

use constants::{a_constant, b_constant, prime_target, CONJECTURED_A, CONJECTURED_B};
use primes::primes_up_to;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimKind {
    Theorem,
    Lemma,
    Conjecture,
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimKind::Theorem => "theorem",
            ClaimKind::Lemma => "lemma",
            ClaimKind::Conjecture => "conjecture",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Expectation {
    /// `modulus | multiplier · value`
    Divisible,
    /// `multiplier · value ≡ target (mod modulus)`
    ExplicitResidue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Multiplier {
    One,
    A,
    /// `V_{2r−2}`
    BernoulliDenominator,
    B,
    ConjecturedA,
    ConjecturedB,
}

impl Multiplier {
    fn value(self, r: u32) -> Result<Option<Integer>> {
        let lookup = |table: &[(u32, u32)], index: u32| {
            table
                .iter()
                .find(|(i, _)| *i == index)
                .map(|(_, v)| Integer::from(*v))
                .ok_or_else(|| Error::InvalidArgument(format!("no listed constant for index {index}")))
        };
        Ok(match self {
            Multiplier::One => None,
            Multiplier::A => Some(a_constant(r)?),
            Multiplier::BernoulliDenominator => {
                if r < 2 {
                    return Err(Error::InvalidArgument("V_{2r-2} needs r >= 2".into()));
                }
                Some(bernoulli(2 * u64::from(r) - 2).denominator)
            }
            Multiplier::B => Some(b_constant(r)?),
            Multiplier::ConjecturedA => Some(lookup(&CONJECTURED_A, 2 * r - 1)?),
            Multiplier::ConjecturedB => Some(lookup(&CONJECTURED_B, r)?),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Modulus {
    N,
    TwoN,
    NSquared,
    TwoNSquared,
}

impl Modulus {
    fn value(self, n: u64) -> Integer {
        let n = Integer::from(n);
        match self {
            Modulus::N => n,
            Modulus::TwoN => n * 2,
            Modulus::NSquared => &n * &n,
            Modulus::TwoNSquared => &n * &n * 2,
        }
    }
}

/// Which exponents `r` a prefix claim ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Exponents {
    /// A single exponent; `r` is not a parameter of the claim.
    Fixed(u32),
    /// `from ..= r_max`
    From(u32),
    /// Exactly the indices listed in a conjectured table.
    ConjecturedA,
    ConjecturedB,
}

impl Exponents {
    fn values(self, r_max: u32) -> Vec<u32> {
        match self {
            Exponents::Fixed(r) => vec![r],
            Exponents::From(lo) => (lo..=r_max).collect(),
            Exponents::ConjecturedA => CONJECTURED_A.iter().map(|(i, _)| i.div_ceil(2)).collect(),
            Exponents::ConjecturedB => CONJECTURED_B.iter().map(|(r, _)| *r).collect(),
        }
    }

    fn is_parameter(self) -> bool {
        !matches!(self, Exponents::Fixed(_))
    }
}

#[derive(Debug, Clone, Copy)]
enum Rule {
    /// `multiplier(r) · Σ_{k<n} weight(k) term_r(k) ≡ 0 (mod modulus(n))`
    Prefix {
        family: fn(u32) -> Result<SequenceSpec>,
        weight: Weight,
        multiplier: Multiplier,
        modulus: Modulus,
        exponents: Exponents,
    },
    /// `V_m S_m(n) ≡ n U_m (mod n²)` for even `m`.
    PowerSumBernoulli,
    /// `u_j ≡ 0 (mod n²)`
    UTerms,
    /// `Σ_{k<p} T_k^(2) ≡ p²(5 − 3(p/5))/2 (mod p³)`
    AlternatingPrime,
    /// `multiplier · Σ_{k<n} w(k) R_k² ∈ nZ`, with `w(k) = 2k+1` when weighted.
    RSquares { weighted: bool, multiplier: u32 },
}

/// A registered statement checked by [`verify_claim`].
#[derive(Debug, Clone, Copy)]
pub struct CongruenceClaim {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub statement: &'static str,
    pub params: &'static [&'static str],
    pub expectation: Expectation,
    rule: Rule,
}

const N: &[&str] = &["n"];
const NR: &[&str] = &["n", "r"];

static CLAIMS: [CongruenceClaim; 17] = [
    CongruenceClaim {
        id: "thm1.1",
        kind: ClaimKind::Theorem,
        statement: "sum_{k<n} S_k^(2r) = 0 mod n^2",
        params: NR,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: |r| SequenceSpec::s(2 * r),
            weight: Weight::None,
            multiplier: Multiplier::One,
            modulus: Modulus::NSquared,
            exponents: Exponents::From(1),
        },
    },
    CongruenceClaim {
        id: "thm1.2",
        kind: ClaimKind::Theorem,
        statement: "sum_{k<n} T_k^(2r) = 0 mod n^2",
        params: NR,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: |r| SequenceSpec::t(2 * r),
            weight: Weight::None,
            multiplier: Multiplier::One,
            modulus: Modulus::NSquared,
            exponents: Exponents::From(1),
        },
    },
    CongruenceClaim {
        id: "thm1.3",
        kind: ClaimKind::Theorem,
        statement: "sum_{k<p} T_k^(2) = p^2 (5 - 3 (p/5)) / 2 mod p^3, p prime, p != 5",
        params: &["p"],
        expectation: Expectation::ExplicitResidue,
        rule: Rule::AlternatingPrime,
    },
    CongruenceClaim {
        id: "thm1.4a",
        kind: ClaimKind::Theorem,
        statement: "a_{2r-1} sum_{k<n} S_k^(2r-1) = 0 mod n^2, a_1 = 1, a_{2r-1} = V_{2r-2}/2",
        params: NR,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: |r| SequenceSpec::s(2 * r - 1),
            weight: Weight::None,
            multiplier: Multiplier::A,
            modulus: Modulus::NSquared,
            exponents: Exponents::From(1),
        },
    },
    CongruenceClaim {
        id: "thm1.4a-strong",
        kind: ClaimKind::Theorem,
        statement: "V_{2r-2} sum_{k<n} S_k^(2r-1) = 0 mod 2n^2, r >= 2",
        params: NR,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: |r| SequenceSpec::s(2 * r - 1),
            weight: Weight::None,
            multiplier: Multiplier::BernoulliDenominator,
            modulus: Modulus::TwoNSquared,
            exponents: Exponents::From(2),
        },
    },
    CongruenceClaim {
        id: "thm1.4b",
        kind: ClaimKind::Theorem,
        statement: "b_r sum_{k<n} k S_k^(r) = 0 mod n^2, b_1 = 4, b_r = 2V_r (r even), 2V_{r-1} (r odd)",
        params: NR,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: SequenceSpec::s,
            weight: Weight::K,
            multiplier: Multiplier::B,
            modulus: Modulus::NSquared,
            exponents: Exponents::From(1),
        },
    },
    CongruenceClaim {
        id: "lemma2.1",
        kind: ClaimKind::Lemma,
        statement: "sum_{k<n} (2k+1)^(2r-1) = 0 mod n",
        params: NR,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: |r| SequenceSpec::power_odd(2 * r - 1),
            weight: Weight::None,
            multiplier: Multiplier::One,
            modulus: Modulus::N,
            exponents: Exponents::From(1),
        },
    },
    CongruenceClaim {
        id: "lemma3.1",
        kind: ClaimKind::Lemma,
        statement: "sum_{k<n} (-1)^k (2k+1)^(2r-1) = 0 mod n",
        params: NR,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: |r| SequenceSpec::power_odd_alt(2 * r - 1),
            weight: Weight::None,
            multiplier: Multiplier::One,
            modulus: Modulus::N,
            exponents: Exponents::From(1),
        },
    },
    CongruenceClaim {
        id: "lemma5.1",
        kind: ClaimKind::Lemma,
        statement: "V_m S_m(n) = n U_m mod n^2, m = 2r even",
        params: &["n", "m"],
        expectation: Expectation::ExplicitResidue,
        rule: Rule::PowerSumBernoulli,
    },
    CongruenceClaim {
        id: "lemma5.2",
        kind: ClaimKind::Lemma,
        statement: "V_{2r-2} sum_{j<n} (2j+1)^(2r-2) = 0 mod 2n, r >= 2",
        params: NR,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: |r| SequenceSpec::power_odd(2 * r - 2),
            weight: Weight::None,
            multiplier: Multiplier::BernoulliDenominator,
            modulus: Modulus::TwoN,
            exponents: Exponents::From(2),
        },
    },
    CongruenceClaim {
        id: "lemma5.3",
        kind: ClaimKind::Lemma,
        statement: "u_j = (2j+1) C(2j,j) sum_{k=j}^{n-1} (2k-j+1) C(k,j)^2 = 0 mod n^2, 0 <= j < n",
        params: &["n", "j"],
        expectation: Expectation::Divisible,
        rule: Rule::UTerms,
    },
    CongruenceClaim {
        id: "conj1.1a",
        kind: ClaimKind::Conjecture,
        statement: "4 sum_{k<n} k S_k = 0 mod n^2",
        params: N,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: SequenceSpec::s,
            weight: Weight::FourK,
            multiplier: Multiplier::One,
            modulus: Modulus::NSquared,
            exponents: Exponents::Fixed(1),
        },
    },
    CongruenceClaim {
        id: "conj1.1b",
        kind: ClaimKind::Conjecture,
        statement: "sum_{k<n} S_k^(2) = 0 mod n^2",
        params: N,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: SequenceSpec::s,
            weight: Weight::None,
            multiplier: Multiplier::One,
            modulus: Modulus::NSquared,
            exponents: Exponents::Fixed(2),
        },
    },
    CongruenceClaim {
        id: "sun5.4a",
        kind: ClaimKind::Conjecture,
        statement: "(3/n) sum_{k<n} R_k^2 is an integer",
        params: N,
        expectation: Expectation::Divisible,
        rule: Rule::RSquares { weighted: false, multiplier: 3 },
    },
    CongruenceClaim {
        id: "sun5.4b",
        kind: ClaimKind::Conjecture,
        statement: "(1/n) sum_{k<n} (2k+1) R_k^2 is an integer",
        params: N,
        expectation: Expectation::Divisible,
        rule: Rule::RSquares { weighted: true, multiplier: 1 },
    },
    CongruenceClaim {
        id: "conj1.4a",
        kind: ClaimKind::Conjecture,
        statement: "a_{2r-1} sum_{k<n} S_k^(2r-1) = 0 mod n^2 with a_3..a_15 = 3, 15, 21, 15, 33, 1365, 3",
        params: NR,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: |r| SequenceSpec::s(2 * r - 1),
            weight: Weight::None,
            multiplier: Multiplier::ConjecturedA,
            modulus: Modulus::NSquared,
            exponents: Exponents::ConjecturedA,
        },
    },
    CongruenceClaim {
        id: "conj1.4b",
        kind: ClaimKind::Conjecture,
        statement: "b_r sum_{k<n} k S_k^(r) = 0 mod n^2 with b_2..b_9 = 12, 4, 60, 20, 84, 28, 60, 20",
        params: NR,
        expectation: Expectation::Divisible,
        rule: Rule::Prefix {
            family: SequenceSpec::s,
            weight: Weight::K,
            multiplier: Multiplier::ConjecturedB,
            modulus: Modulus::NSquared,
            exponents: Exponents::ConjecturedB,
        },
    },
];

/// Every registered claim, in a fixed order.
pub fn claims() -> &'static [CongruenceClaim] {
    &CLAIMS
}

pub fn find_claim(id: &str) -> Result<&'static CongruenceClaim> {
    CLAIMS.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// A parameter point, e.g. `n=4, r=1`. Ordered by parameter values in the
/// claim's parameter order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<(&'static str, u64)>);

impl Point {
    pub fn new(entries: Vec<(&'static str, u64)>) -> Self {
        Point(entries)
    }

    pub fn get(&self, name: &str) -> Option<u64> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }

    pub fn entries(&self) -> &[(&'static str, u64)] {
        &self.0
    }

    fn require(&self, name: &str) -> Result<u64> {
        self.get(name).ok_or_else(|| Error::InvalidArgument(format!("missing parameter `{name}`")))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// `(multiplier · value − target) mod modulus`, reduced into `[0, modulus)`.
/// Rational values reduce the same way: `v − modulus · ⌊v / modulus⌋`.
fn reduced_residue(
    value: &Exact,
    multiplier: Option<&Integer>,
    target: &Integer,
    modulus: &Integer,
) -> Exact {
    let scaled = match multiplier {
        Some(m) => value.scale(m),
        None => value.clone(),
    };
    match scaled {
        Exact::Integer(v) => Exact::Integer(residue(&(v - target), modulus)),
        Exact::Rational(q) => {
            let shifted = q - rational(target.clone());
            let m = rational(modulus.clone());
            let quotient = (&shifted / &m).floor();
            Exact::Rational(shifted - quotient * m)
        }
    }
}

/// One evaluated point of a claim. Every field needed to re-check the
/// congruence is recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub point: Point,
    /// The unscaled sum.
    pub value: Exact,
    pub multiplier: Option<Integer>,
    /// Zero for divisibility claims.
    pub target: Integer,
    pub modulus: Integer,
    pub residue: Exact,
    pub passed: bool,
    pub note: Option<String>,
}

impl Evaluation {
    fn new(
        point: Point,
        value: Exact,
        multiplier: Option<Integer>,
        target: Integer,
        modulus: Integer,
    ) -> Self {
        assert!(modulus >= Integer::one(), "modulus must be >= 1 at {point}");
        let residue = reduced_residue(&value, multiplier.as_ref(), &target, &modulus);
        let passed = residue.is_zero();
        Evaluation { point, value, multiplier, target, modulus, residue, passed, note: None }
    }

    fn divisible(point: Point, value: Exact, multiplier: Option<Integer>, modulus: Integer) -> Self {
        Self::new(point, value, multiplier, Integer::zero(), modulus)
    }

    /// Recomputes the residue from the recorded fields alone.
    pub fn recheck(&self) -> bool {
        let residue = reduced_residue(&self.value, self.multiplier.as_ref(), &self.target, &self.modulus);
        residue == self.residue && residue.is_zero() == self.passed
    }
}

/// Upper bounds for a sweep. Lower bounds are fixed per claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimRanges {
    pub n_max: u64,
    pub r_max: u32,
    pub p_max: u64,
}

impl Default for ClaimRanges {
    fn default() -> Self {
        ClaimRanges { n_max: 200, r_max: 5, p_max: 500 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweptRange {
    pub name: &'static str,
    pub min: u64,
    pub max: u64,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub claim: &'static CongruenceClaim,
    pub ranges: Vec<SweptRange>,
    /// Every evaluated point, sorted by parameter point.
    pub evaluations: Vec<Evaluation>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn points(&self) -> usize {
        self.evaluations.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Evaluation> {
        self.evaluations.iter().filter(|e| !e.passed)
    }

    pub fn passed(&self) -> bool {
        self.evaluations.iter().all(|e| e.passed)
    }
}

fn check_ranges(claim: &CongruenceClaim, ranges: &ClaimRanges) -> Result<()> {
    let uses = |p: &str| claim.params.contains(&p);
    if (uses("n") || uses("j")) && ranges.n_max == 0 {
        return Err(Error::InvalidRange("n_max must be >= 1".into()));
    }
    if (uses("r") || uses("m")) && ranges.r_max == 0 {
        return Err(Error::InvalidRange("r_max must be >= 1".into()));
    }
    if uses("p") && ranges.p_max < 2 {
        return Err(Error::InvalidRange("p_max must be >= 2".into()));
    }
    Ok(())
}

fn r_squared_terms(weighted: bool) -> impl Iterator<Item = Rational> {
    (0u64..).map(move |k| {
        let r = seq_r(k);
        let sq = &r * &r;
        if weighted {
            sq * rational(2 * k + 1)
        } else {
            sq
        }
    })
}

/// Sweeps `claim` over `ranges`.
pub fn verify_claim(claim: &'static CongruenceClaim, ranges: &ClaimRanges) -> Result<VerificationReport> {
    check_ranges(claim, ranges)?;
    let start = Instant::now();
    let ClaimRanges { n_max, r_max, p_max } = *ranges;
    let n_range = SweptRange { name: "n", min: 1, max: n_max };

    let (swept, mut evaluations) = match claim.rule {
        Rule::Prefix { family, weight, multiplier, modulus, exponents } => {
            let rs = exponents.values(r_max);
            let chunks: Vec<Result<Vec<Evaluation>>> = rs
                .par_iter()
                .map(|&r| {
                    let spec = family(r)?;
                    let mult = multiplier.value(r)?;
                    PrefixSums::new(spec, weight)
                        .take(n_max as usize)
                        .map(|item| {
                            let (n, acc) = item?;
                            let mut entries = vec![("n", n)];
                            if exponents.is_parameter() {
                                entries.push(("r", u64::from(r)));
                            }
                            Ok(Evaluation::divisible(Point(entries), acc, mult.clone(), modulus.value(n)))
                        })
                        .collect()
                })
                .collect();
            let mut swept = vec![n_range];
            if exponents.is_parameter() {
                swept.push(SweptRange {
                    name: "r",
                    min: rs.first().copied().unwrap_or(0).into(),
                    max: rs.last().copied().unwrap_or(0).into(),
                });
            }
            (swept, flatten(chunks)?)
        }
        Rule::PowerSumBernoulli => {
            let chunks: Vec<Vec<Evaluation>> = (1..=u64::from(r_max))
                .into_par_iter()
                .map(|r| {
                    let m = 2 * r;
                    let b = bernoulli(m);
                    let mut acc = Integer::zero();
                    (1..=n_max)
                        .map(|n| {
                            if n > 1 {
                                acc += Integer::from(n - 1).pow(m as u32);
                            }
                            let n_big = Integer::from(n);
                            Evaluation::new(
                                Point(vec![("n", n), ("m", m)]),
                                Exact::Integer(acc.clone()),
                                Some(b.denominator.clone()),
                                &n_big * &b.numerator,
                                &n_big * &n_big,
                            )
                        })
                        .collect()
                })
                .collect();
            let swept = vec![n_range, SweptRange { name: "m", min: 2, max: 2 * u64::from(r_max) }];
            (swept, chunks.into_iter().flatten().collect())
        }
        Rule::UTerms => {
            let chunks: Vec<Result<Vec<Evaluation>>> = (1..=n_max)
                .into_par_iter()
                .map(|n| {
                    (0..n)
                        .map(|j| {
                            let u = u_term(n, j)?;
                            Ok(Evaluation::divisible(
                                Point(vec![("n", n), ("j", j)]),
                                Exact::Integer(u),
                                None,
                                Modulus::NSquared.value(n),
                            ))
                        })
                        .collect()
                })
                .collect();
            let swept = vec![n_range, SweptRange { name: "j", min: 0, max: n_max - 1 }];
            (swept, flatten(chunks)?)
        }
        Rule::AlternatingPrime => {
            let primes: Vec<u64> = primes_up_to(p_max).into_iter().filter(|&p| p != 5).collect();
            let mut evaluations = Vec::with_capacity(primes.len());
            let mut wanted = primes.iter().peekable();
            for item in PrefixSums::new(SequenceSpec::t(2)?, Weight::None).take(p_max as usize) {
                let (n, acc) = item?;
                if wanted.peek() == Some(&&n) {
                    wanted.next();
                    evaluations.push(alternating_prime_evaluation(n, acc)?);
                }
            }
            (vec![SweptRange { name: "p", min: 2, max: p_max }], evaluations)
        }
        Rule::RSquares { weighted, multiplier } => {
            let mult = (multiplier != 1).then(|| Integer::from(multiplier));
            let mut acc = Rational::zero();
            let evaluations = r_squared_terms(weighted)
                .take(n_max as usize)
                .zip(1u64..)
                .map(|(term, n)| {
                    acc += term;
                    Evaluation::divisible(
                        Point(vec![("n", n)]),
                        Exact::Rational(acc.clone()),
                        mult.clone(),
                        Modulus::N.value(n),
                    )
                })
                .collect();
            (vec![n_range], evaluations)
        }
    };

    evaluations.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(VerificationReport { claim, ranges: swept, evaluations, elapsed: start.elapsed() })
}

fn flatten(chunks: Vec<Result<Vec<Evaluation>>>) -> Result<Vec<Evaluation>> {
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    Ok(out)
}

fn alternating_prime_evaluation(p: u64, sum: Exact) -> Result<Evaluation> {
    let target = prime_target(p)?;
    let mut eval =
        Evaluation::new(Point(vec![("p", p)]), sum, None, target.target.clone(), target.modulus.clone());
    if !target.symbols_agree() {
        eval.passed = false;
        eval.note =
            Some(format!("(5/p) = {:?} disagrees with (p/5) = {}", target.five_over_p, target.p_over_5));
    } else if p < 5 {
        eval.note = Some("edge prime below 5".into());
    }
    Ok(eval)
}

/// Evaluates one point of a claim from scratch, without incremental state.
pub fn evaluate_point(claim: &CongruenceClaim, point: &Point) -> Result<Evaluation> {
    for name in point.entries().iter().map(|(k, _)| *k) {
        if !claim.params.contains(&name) {
            return Err(Error::InvalidArgument(format!("claim {} has no parameter `{name}`", claim.id)));
        }
    }
    match claim.rule {
        Rule::Prefix { family, weight, multiplier, modulus, exponents } => {
            let n = point.require("n")?;
            let r = match exponents {
                Exponents::Fixed(r) => r,
                _ => {
                    let r = u32::try_from(point.require("r")?)
                        .map_err(|_| Error::InvalidArgument("r out of range".into()))?;
                    if !exponents.values(r).contains(&r) {
                        return Err(Error::InvalidArgument(format!("r = {r} outside the claim's exponents")));
                    }
                    r
                }
            };
            let value = prefix_sum(family(r)?, n, weight)?;
            let mut entries = vec![("n", n)];
            if exponents.is_parameter() {
                entries.push(("r", u64::from(r)));
            }
            Ok(Evaluation::divisible(Point(entries), value, multiplier.value(r)?, modulus.value(n)))
        }
        Rule::PowerSumBernoulli => {
            let n = point.require("n")?;
            let m = point.require("m")?;
            if n == 0 || m == 0 || m % 2 == 1 {
                return Err(Error::InvalidArgument("need n >= 1 and even m >= 2".into()));
            }
            let b = bernoulli(m);
            let n_big = Integer::from(n);
            Ok(Evaluation::new(
                Point(vec![("n", n), ("m", m)]),
                Exact::Integer(power_sum(m, n)),
                Some(b.denominator),
                &n_big * &b.numerator,
                &n_big * &n_big,
            ))
        }
        Rule::UTerms => {
            let n = point.require("n")?;
            let j = point.require("j")?;
            Ok(Evaluation::divisible(
                Point(vec![("n", n), ("j", j)]),
                Exact::Integer(u_term(n, j)?),
                None,
                Modulus::NSquared.value(n),
            ))
        }
        Rule::AlternatingPrime => {
            let p = point.require("p")?;
            prime_target(p)?;
            let sum = prefix_sum(SequenceSpec::t(2)?, p, Weight::None)?;
            alternating_prime_evaluation(p, sum)
        }
        Rule::RSquares { weighted, multiplier } => {
            let n = point.require("n")?;
            if n == 0 {
                return Err(Error::InvalidArgument("n must be >= 1".into()));
            }
            let value: Rational = r_squared_terms(weighted).take(n as usize).sum();
            let mult = (multiplier != 1).then(|| Integer::from(multiplier));
            Ok(Evaluation::divisible(
                Point(vec![("n", n)]),
                Exact::Rational(value),
                mult,
                Modulus::N.value(n),
            ))
        }
    }
}

/// Sweeps every registered claim in registry order.
pub fn verify_all(ranges: &ClaimRanges) -> Result<Vec<VerificationReport>> {
    claims().iter().map(|c| verify_claim(c, ranges)).collect()
}

/// Whether a set of reports should fail a run: any theorem or lemma failure,
/// and conjecture failures only when `strict_conjectures` is set.
pub fn has_fatal_failure(reports: &[VerificationReport], strict_conjectures: bool) -> bool {
    reports.iter().any(|r| !r.passed() && (strict_conjectures || r.claim.kind != ClaimKind::Conjecture))
}
