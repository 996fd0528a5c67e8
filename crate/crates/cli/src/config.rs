//! Command-line configuration.

use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use binsum_core::engine::{find_claim, ClaimRanges};
use binsum_core::identities::IdentityId;
use binsum_core::sequences::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Evaluate one sequence term, prefix sum or claim point.
    Eval,
    /// Sweep a binomial identity (or all of them).
    Identity,
    /// Sweep a congruence claim (or all of them).
    Verify,
    /// Print a constant table.
    Table,
    /// Every identity sweep followed by every claim sweep.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqArg {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "T", alias = "t")]
    T,
    #[value(name = "R", alias = "r")]
    R,
    PowerOdd,
    PowerOddAlt,
    #[value(name = "u", alias = "U")]
    U,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightArg {
    None,
    K,
    #[value(name = "4k")]
    FourK,
}

impl From<WeightArg> for Weight {
    fn from(w: WeightArg) -> Self {
        match w {
            WeightArg::None => Weight::None,
            WeightArg::K => Weight::K,
            WeightArg::FourK => Weight::FourK,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstantsArg {
    A,
    B,
    Bernoulli,
    Euler,
}

/// Exact sweeps of binomial-sum congruences and identities.
#[derive(Debug, Clone, Parser)]
#[command(name = "binsum", version)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    /// Claim id for `verify`/`eval`, or `all`.
    #[arg(long)]
    pub claim: Option<String>,

    /// Identity id for `identity`, or `all`.
    #[arg(long)]
    pub identity: Option<String>,

    #[arg(long, value_enum)]
    pub seq: Option<SeqArg>,

    #[arg(long)]
    pub r: Option<u32>,

    #[arg(long)]
    pub n: Option<u64>,

    #[arg(long)]
    pub j: Option<u64>,

    #[arg(long)]
    pub m: Option<u64>,

    #[arg(long)]
    pub p: Option<u64>,

    /// With `eval --seq`: print Σ_{k<n} weight(k)·term(k) instead of term n.
    #[arg(long)]
    pub prefix: bool,

    #[arg(long, value_enum, default_value = "none")]
    pub weight: WeightArg,

    #[arg(long, value_enum)]
    pub constants: Option<ConstantsArg>,

    #[arg(long)]
    pub n_max: Option<u64>,

    #[arg(long)]
    pub r_max: Option<u32>,

    #[arg(long)]
    pub p_max: Option<u64>,

    #[arg(long)]
    pub m_max: Option<u64>,

    #[arg(long, allow_hyphen_values = true)]
    pub x_min: Option<i64>,

    #[arg(long, allow_hyphen_values = true)]
    pub x_max: Option<i64>,

    /// Worker threads (defaults to the available parallelism).
    #[arg(long)]
    pub jobs: Option<usize>,

    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,

    /// Let conjecture failures fail the exit code.
    #[arg(long)]
    pub strict_conjectures: bool,

    /// Omit timings so output is byte-for-byte reproducible.
    #[arg(long)]
    pub no_timing: bool,

    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl RunConfig {
    /// Checks bounds and ids before any computation starts.
    pub fn validate(&self) -> Result<(), String> {
        if self.jobs == Some(0) {
            return Err("--jobs must be >= 1".into());
        }
        for (name, v) in [("--n-max", self.n_max), ("--p-max", self.p_max)] {
            if v == Some(0) {
                return Err(format!("{name} must be positive"));
            }
        }
        if self.r_max == Some(0) {
            return Err("--r-max must be positive".into());
        }
        if let (Some(lo), Some(hi)) = (self.x_min, self.x_max) {
            if lo > hi {
                return Err(format!("--x-min {lo} exceeds --x-max {hi}"));
            }
        }
        match self.command {
            Command::Verify => {
                let claim = self.claim.as_deref().ok_or("verify needs --claim")?;
                if claim != "all" {
                    find_claim(claim).map_err(|e| e.to_string())?;
                }
                if self.p_max == Some(1) {
                    return Err("--p-max must be >= 2".into());
                }
            }
            Command::Identity => {
                let id = self.identity.as_deref().ok_or("identity needs --identity")?;
                if id != "all" {
                    id.parse::<IdentityId>().map_err(|e| e.to_string())?;
                }
            }
            Command::Eval => match (&self.claim, &self.seq) {
                (Some(claim), None) => {
                    find_claim(claim).map_err(|e| e.to_string())?;
                }
                (None, Some(_)) => {
                    if self.n.is_none() {
                        return Err("eval --seq needs --n".into());
                    }
                }
                _ => return Err("eval needs exactly one of --seq or --claim".into()),
            },
            Command::Table => {
                if self.constants.is_none() {
                    return Err("table needs --constants".into());
                }
            }
            Command::All => {}
        }
        Ok(())
    }

    pub fn claim_ranges(&self) -> ClaimRanges {
        let d = ClaimRanges::default();
        ClaimRanges {
            n_max: self.n_max.unwrap_or(d.n_max),
            r_max: self.r_max.unwrap_or(d.r_max),
            p_max: self.p_max.unwrap_or(d.p_max),
        }
    }

    pub fn identity_ranges(&self, id: IdentityId) -> binsum_core::identities::IdentityRanges {
        let d = id.default_ranges();
        binsum_core::identities::IdentityRanges {
            n_max: self.n_max.unwrap_or(d.n_max),
            m_max: self.m_max.unwrap_or(d.m_max),
            r_max: self.r_max.unwrap_or(d.r_max),
            x_min: self.x_min.unwrap_or(d.x_min),
            x_max: self.x_max.unwrap_or(d.x_max),
        }
    }
}
