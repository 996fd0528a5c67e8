//! The binomial-sum sequences and their weighted prefix sums.
//!
//! Every value here is computed by direct summation from its definition.
//! Faster identity-based routes live in [`crate::identities`] and are checked
//! against these, never substituted for them.

use std::fmt;

use num_traits::Zero;

use crate::arith::{alternating_sign, binomial, central_binomial, Exact, Integer, Rational};
use crate::error::{Error, Result};

/// A sequence family together with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `S_k^(r) = Σ_j C(k,j)² C(2j,j) (2j+1)^r`
    S { r: u32 },
    /// `T_k^(r) = Σ_j C(k,j)² C(2j,j) (2j+1)^r (−1)^j`
    T { r: u32 },
    /// `R_k = Σ_j C(k,j) C(k+j,j) / (2j−1)`, rational-valued.
    R,
    /// `(2k+1)^e`; `e` is the raw exponent.
    PowerOdd { e: u32 },
    /// `(−1)^k (2k+1)^e`
    PowerOddAlt { e: u32 },
    /// `u_j` for a fixed ambient `n`, defined for `0 ≤ j < n`.
    UTerm { n: u64 },
}

/// A validated sequence family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SequenceSpec(Family);

impl SequenceSpec {
    pub fn new(family: Family) -> Result<Self> {
        match family {
            Family::S { r: 0 } | Family::T { r: 0 } => {
                Err(Error::InvalidArgument("S and T need an exponent r >= 1".into()))
            }
            Family::PowerOdd { e: 0 } | Family::PowerOddAlt { e: 0 } => {
                Err(Error::InvalidArgument("power families need an exponent >= 1".into()))
            }
            Family::UTerm { n: 0 } => Err(Error::InvalidArgument("u-terms need an ambient n >= 1".into())),
            _ => Ok(SequenceSpec(family)),
        }
    }

    pub fn s(r: u32) -> Result<Self> {
        Self::new(Family::S { r })
    }

    pub fn t(r: u32) -> Result<Self> {
        Self::new(Family::T { r })
    }

    pub fn r() -> Self {
        SequenceSpec(Family::R)
    }

    pub fn power_odd(e: u32) -> Result<Self> {
        Self::new(Family::PowerOdd { e })
    }

    pub fn power_odd_alt(e: u32) -> Result<Self> {
        Self::new(Family::PowerOddAlt { e })
    }

    pub fn u_term(n: u64) -> Result<Self> {
        Self::new(Family::UTerm { n })
    }

    pub fn family(&self) -> Family {
        self.0
    }

    /// Whether terms are integers; only `R` is rational-valued.
    pub fn is_integral(&self) -> bool {
        !matches!(self.0, Family::R)
    }

    /// The `k`-th term.
    pub fn term(&self, k: u64) -> Result<Exact> {
        Ok(match self.0 {
            Family::S { r } => seq_s(k, r).into(),
            Family::T { r } => seq_t(k, r).into(),
            Family::R => seq_r(k).into(),
            Family::PowerOdd { e } => Integer::from(2 * k + 1).pow(e).into(),
            Family::PowerOddAlt { e } => (Integer::from(2 * k + 1).pow(e) * alternating_sign(k)).into(),
            Family::UTerm { n } => u_term(n, k)?.into(),
        })
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Family::S { r } => write!(f, "S^({r})"),
            Family::T { r } => write!(f, "T^({r})"),
            Family::R => write!(f, "R"),
            Family::PowerOdd { e } => write!(f, "(2k+1)^{e}"),
            Family::PowerOddAlt { e } => write!(f, "(-1)^k (2k+1)^{e}"),
            Family::UTerm { n } => write!(f, "u[n={n}]"),
        }
    }
}

/// Multiplier applied to the `k`-th term of a prefix sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Weight {
    #[default]
    None,
    K,
    FourK,
}

impl Weight {
    fn factor(self, k: u64) -> Integer {
        match self {
            Weight::None => Integer::from(1),
            Weight::K => Integer::from(k),
            Weight::FourK => Integer::from(4 * k),
        }
    }
}

/// Shared core of S and T: `Σ_k C(n,k)² C(2k,k) (2k+1)^r sign(k)`.
fn central_sum(n: u64, r: u32, alternate: bool) -> Integer {
    (0..=n)
        .map(|k| {
            let c = binomial(n as i64, k);
            let term = &c * &c * central_binomial(k) * Integer::from(2 * k + 1).pow(r);
            if alternate && k % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// `S_n^(r)`.
pub fn seq_s(n: u64, r: u32) -> Integer {
    central_sum(n, r, false)
}

/// `T_n^(r)`.
pub fn seq_t(n: u64, r: u32) -> Integer {
    central_sum(n, r, true)
}

/// `R_n`; the `k = 0` term contributes `−1`.
pub fn seq_r(n: u64) -> Rational {
    (0..=n)
        .map(|k| {
            let num = binomial(n as i64, k) * binomial((n + k) as i64, k);
            Rational::new(num, Integer::from(2 * k as i64 - 1))
        })
        .sum()
}

/// `u_j = (2j+1) C(2j,j) Σ_{k=j}^{n−1} (2k−j+1) C(k,j)²`.
pub fn u_term(n: u64, j: u64) -> Result<Integer> {
    if j >= n {
        return Err(Error::InvalidArgument(format!("u-term index j = {j} outside [0, {n})")));
    }
    let inner: Integer = (j..n)
        .map(|k| {
            let c = binomial(k as i64, j);
            Integer::from(2 * k - j + 1) * &c * &c
        })
        .sum();
    Ok(Integer::from(2 * j + 1) * central_binomial(j) * inner)
}

/// `Σ_{k=0}^{n−1} weight(k) · term(k)`.
pub fn prefix_sum(spec: SequenceSpec, n: u64, weight: Weight) -> Result<Exact> {
    if n == 0 {
        return Err(Error::InvalidArgument("prefix sums need n >= 1".into()));
    }
    if let Family::UTerm { n: ambient } = spec.family() {
        if n > ambient {
            return Err(Error::InvalidArgument(format!(
                "u-term prefix of length {n} exceeds ambient n = {ambient}"
            )));
        }
    }
    let mut sums = PrefixSums::new(spec, weight);
    let mut last = None;
    for _ in 0..n {
        last = Some(sums.next().expect("prefix sums are unbounded")?);
    }
    Ok(last.expect("n >= 1").1)
}

/// Incremental prefix sums: yields `(n, Σ_{k<n} weight(k)·term(k))` for
/// `n = 1, 2, …`. For [`Family::UTerm`] the iterator stops at the ambient `n`.
#[derive(Debug, Clone)]
pub struct PrefixSums {
    spec: SequenceSpec,
    weight: Weight,
    next_k: u64,
    acc: Exact,
}

impl PrefixSums {
    pub fn new(spec: SequenceSpec, weight: Weight) -> Self {
        let acc = if spec.is_integral() {
            Exact::Integer(Integer::zero())
        } else {
            Exact::Rational(Rational::zero())
        };
        PrefixSums { spec, weight, next_k: 0, acc }
    }
}

impl Iterator for PrefixSums {
    type Item = Result<(u64, Exact)>;

    fn next(&mut self) -> Option<Self::Item> {
        if let Family::UTerm { n } = self.spec.family() {
            if self.next_k >= n {
                return None;
            }
        }
        let k = self.next_k;
        let term = match self.spec.term(k) {
            Ok(t) => t,
            Err(e) => return Some(Err(e)),
        };
        let acc = std::mem::replace(&mut self.acc, Exact::Integer(Integer::zero()));
        self.acc = acc + term.scale(&self.weight.factor(k));
        self.next_k += 1;
        Some(Ok((self.next_k, self.acc.clone())))
    }
}
