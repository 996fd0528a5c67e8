//! The `binsum` command line: argument handling, dispatch and report output.
//!
//! [`run`] is the composition root. It sizes the worker pool, drives the
//! sweeps in `binsum-core` and writes one serialized report.

pub mod config;
pub mod report;

use std::fs;
use std::io::{self, Write};

use binsum_core::engine::constants::{a_constant, b_constant};
use binsum_core::engine::{
    claims, evaluate_point, find_claim, has_fatal_failure, verify_all, verify_claim, ClaimKind, Point,
};
use binsum_core::identities::{sweep_identity, IdentityId};
use binsum_core::sequences::{prefix_sum, SequenceSpec, Weight};
use binsum_core::special::{bernoulli, euler_number};

use config::{Command, ConstantsArg, RunConfig, SeqArg, WeightArg};
use report::{SequenceValue, Table};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default upper index for the Euler table when `--n-max` is not given.
const EULER_TABLE_N: u64 = 20;

/// Rendered output plus whether a fatal mathematical failure was found.
struct Outcome {
    text: String,
    failed: bool,
}

/// Executes `config` and returns the process exit code.
pub fn run(config: &RunConfig) -> i32 {
    if let Err(msg) = config.validate() {
        eprintln!("binsum: {msg}");
        return EXIT_USAGE;
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.jobs {
        pool = pool.num_threads(jobs);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("binsum: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    let outcome = match pool.install(|| execute(config)) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("binsum: {msg}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = write_output(config, &outcome.text) {
        eprintln!("binsum: cannot write output: {e}");
        return EXIT_USAGE;
    }
    if outcome.failed {
        EXIT_FAILURE
    } else {
        EXIT_PASS
    }
}

fn write_output(config: &RunConfig, text: &str) -> io::Result<()> {
    match &config.output {
        Some(path) => fs::write(path, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn execute(config: &RunConfig) -> Result<Outcome, String> {
    let timing = !config.no_timing;
    let format = config.format;
    match config.command {
        Command::Verify => {
            let ranges = config.claim_ranges();
            let claim = config.claim.as_deref().unwrap_or("all");
            let reports = if claim == "all" {
                verify_all(&ranges)
            } else {
                find_claim(claim).and_then(|c| verify_claim(c, &ranges)).map(|r| vec![r])
            }
            .map_err(|e| e.to_string())?;
            Ok(Outcome {
                text: report::emit_reports(&reports, format, timing, claim == "all"),
                failed: has_fatal_failure(&reports, config.strict_conjectures),
            })
        }
        Command::Identity => {
            let checks = identity_checks(config)?;
            Ok(Outcome {
                failed: checks.iter().any(|c| !c.passed()),
                text: report::emit_identities(&checks, format),
            })
        }
        Command::All => {
            let mut all = config.clone();
            all.identity = Some("all".into());
            let checks = identity_checks(&all)?;
            let reports = verify_all(&config.claim_ranges()).map_err(|e| e.to_string())?;
            Ok(Outcome {
                failed: checks.iter().any(|c| !c.passed())
                    || has_fatal_failure(&reports, config.strict_conjectures),
                text: report::emit_all(&checks, &reports, format, timing),
            })
        }
        Command::Table => {
            let table = constant_table(config)?;
            Ok(Outcome { text: report::emit_table(&table, format), failed: false })
        }
        Command::Eval => match &config.claim {
            Some(id) => eval_claim(config, id),
            None => eval_sequence(config),
        },
    }
}

fn identity_checks(config: &RunConfig) -> Result<Vec<binsum_core::identities::IdentityCheck>, String> {
    let ids: Vec<IdentityId> = match config.identity.as_deref() {
        None | Some("all") => IdentityId::ALL.to_vec(),
        Some(id) => vec![id.parse().map_err(|e: binsum_core::Error| e.to_string())?],
    };
    ids.into_iter()
        .map(|id| sweep_identity(id, &config.identity_ranges(id)).map_err(|e| e.to_string()))
        .collect()
}

fn eval_claim(config: &RunConfig, id: &str) -> Result<Outcome, String> {
    let claim = find_claim(id).map_err(|e| e.to_string())?;
    let flags =
        [("n", config.n), ("r", config.r.map(u64::from)), ("m", config.m), ("j", config.j), ("p", config.p)];
    let mut entries = Vec::new();
    for name in claim.params {
        let value = flags
            .iter()
            .find(|(flag, _)| flag == name)
            .and_then(|(_, v)| *v)
            .ok_or_else(|| format!("claim {} needs --{name}", claim.id))?;
        entries.push((*name, value));
    }
    let eval = evaluate_point(claim, &Point::new(entries)).map_err(|e| e.to_string())?;
    let fatal = !eval.passed && (config.strict_conjectures || claim.kind != ClaimKind::Conjecture);
    Ok(Outcome { text: report::emit_evaluation(claim, &eval, config.format), failed: fatal })
}

fn eval_sequence(config: &RunConfig) -> Result<Outcome, String> {
    let seq = config.seq.ok_or("eval needs --seq or --claim")?;
    let n = config.n.ok_or("eval --seq needs --n")?;
    let need_r = || config.r.ok_or_else(|| format!("--seq {seq:?} needs --r"));
    let spec = match seq {
        SeqArg::S => SequenceSpec::s(need_r()?),
        SeqArg::T => SequenceSpec::t(need_r()?),
        SeqArg::R => Ok(SequenceSpec::r()),
        SeqArg::PowerOdd => SequenceSpec::power_odd(need_r()?),
        SeqArg::PowerOddAlt => SequenceSpec::power_odd_alt(need_r()?),
        SeqArg::U => SequenceSpec::u_term(n),
    }
    .map_err(|e| e.to_string())?;
    let weight = Weight::from(config.weight);
    let value = if config.prefix {
        prefix_sum(spec, n, weight)
    } else {
        if config.weight != WeightArg::None {
            return Err("--weight only applies with --prefix".into());
        }
        let k = match seq {
            SeqArg::U => config.j.ok_or("--seq u needs --j (or --prefix)")?,
            _ => n,
        };
        spec.term(k)
    }
    .map_err(|e| e.to_string())?;
    let v = SequenceValue {
        seq: spec.to_string(),
        n,
        prefix: config.prefix,
        weight: match config.weight {
            WeightArg::None => "none",
            WeightArg::K => "k",
            WeightArg::FourK => "4k",
        },
        value: value.to_string(),
    };
    Ok(Outcome { text: report::emit_sequence_value(&v, config.format), failed: false })
}

fn constant_table(config: &RunConfig) -> Result<Table, String> {
    let r_max = config.r_max.unwrap_or(binsum_core::engine::ClaimRanges::default().r_max);
    let err = |e: binsum_core::Error| e.to_string();
    let table = match config.constants.ok_or("table needs --constants")? {
        ConstantsArg::A => Table {
            columns: vec!["r", "a_r"],
            label: "a_",
            rows: (2..=r_max)
                .map(|r| Ok(vec![(2 * r - 1).to_string(), a_constant(r).map_err(err)?.to_string()]))
                .collect::<Result<_, String>>()?,
        },
        ConstantsArg::B => Table {
            columns: vec!["r", "b_r"],
            label: "b_",
            rows: (2..=r_max)
                .map(|r| Ok(vec![r.to_string(), b_constant(r).map_err(err)?.to_string()]))
                .collect::<Result<_, String>>()?,
        },
        ConstantsArg::Bernoulli => {
            let m_max = config.m_max.unwrap_or(2 * u64::from(r_max));
            Table {
                columns: vec!["m", "B_m", "U_m", "V_m"],
                label: "B_",
                rows: (2..=m_max)
                    .step_by(2)
                    .map(|m| {
                        let b = bernoulli(m);
                        vec![
                            m.to_string(),
                            b.value.to_string(),
                            b.numerator.to_string(),
                            b.denominator.to_string(),
                        ]
                    })
                    .collect(),
            }
        }
        ConstantsArg::Euler => Table {
            columns: vec!["n", "E_n"],
            label: "E_",
            rows: (0..=config.n_max.unwrap_or(EULER_TABLE_N))
                .map(|n| vec![n.to_string(), euler_number(n).to_string()])
                .collect(),
        },
    };
    Ok(table)
}

/// Every registered claim id, in registry order.
pub fn claim_ids() -> Vec<&'static str> {
    claims().iter().map(|c| c.id).collect()
}
