//! Acceptance gate. Runs every criterion at its stated range, prints one
//! PASS/FAIL line each and exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use binsum_core::engine::constants::{a_constant, b_constant, prime_target};
use binsum_core::engine::{find_claim, verify_claim, ClaimRanges, VerificationReport};
use binsum_core::identities::{sweep_identity, IdentityId};
use binsum_core::special::{bernoulli, vsc_denominator};
use binsum_core::{Integer, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn sweep(id: &str, n_max: u64, r_max: u32, p_max: u64) -> Result<VerificationReport, String> {
    let claim = find_claim(id).map_err(|e| e.to_string())?;
    verify_claim(claim, &ClaimRanges { n_max, r_max, p_max }).map_err(|e| e.to_string())
}

fn require_clean(reports: &[VerificationReport]) -> Outcome {
    let mut summary = Vec::new();
    for r in reports {
        if let Some(e) = r.failures().next() {
            return Err(format!("{} fails at {} (residue {})", r.claim.id, e.point, e.residue));
        }
        summary.push(format!("{} {}", r.claim.id, r.points()));
    }
    Ok(summary.join(", "))
}

fn constant_tables() -> Outcome {
    let a: [(u32, u32); 7] = [(3, 3), (5, 15), (7, 21), (9, 15), (11, 33), (13, 1365), (15, 3)];
    for (index, want) in a {
        let got = a_constant(index.div_ceil(2)).map_err(|e| e.to_string())?;
        if got != Integer::from(want) {
            return Err(format!("a_{index} = {got}, want {want}"));
        }
    }
    let b = [(2, 12), (4, 60), (6, 84), (8, 60), (10, 132), (12, 5460), (14, 12)];
    for (r, want) in b {
        for index in [r, r + 1] {
            let got = b_constant(index).map_err(|e| e.to_string())?;
            if got != Integer::from(want) {
                return Err(format!("b_{index} = {got}, want {want}"));
            }
        }
    }
    Ok("a_3..a_15 and b_2..b_15 exact".into())
}

fn bernoulli_table() -> Outcome {
    let listed = [(2, 1, 6), (4, -1, 30), (6, 1, 42), (8, -1, 30), (10, 5, 66), (12, -691, 2730), (14, 7, 6)];
    for (m, num, den) in listed {
        let want = Rational::new(num.into(), den.into());
        if bernoulli(m).value != want {
            return Err(format!("B_{m} = {}, want {want}", bernoulli(m).value));
        }
    }
    for m in (2..=40).step_by(2) {
        let vsc = vsc_denominator(m).map_err(|e| e.to_string())?;
        if bernoulli(m).denominator != vsc {
            return Err(format!("V_{m} = {} but the prime product is {vsc}", bernoulli(m).denominator));
        }
    }
    Ok("B_2..B_14 listed values, V_m = prime product for even m <= 40".into())
}

fn theorems_1_1_and_1_2() -> Outcome {
    require_clean(&[sweep("thm1.1", 200, 5, 2)?, sweep("thm1.2", 200, 5, 2)?])
}

fn theorem_1_3() -> Outcome {
    let report = sweep("thm1.3", 1, 1, 500)?;
    let spot = report
        .evaluations
        .iter()
        .find(|e| e.point.get("p") == Some(3))
        .ok_or("p = 3 missing from the sweep")?;
    let target = prime_target(3).map_err(|e| e.to_string())?;
    if spot.value.to_integer() != Some(Integer::from(63))
        || target.target != Integer::from(36)
        || target.modulus != Integer::from(27)
    {
        return Err(format!(
            "p = 3 spot value {} (target {}, modulus {})",
            spot.value, target.target, target.modulus
        ));
    }
    let primes = report.points();
    if primes != 94 {
        return Err(format!("expected 94 primes p <= 500 other than 5, swept {primes}"));
    }
    require_clean(&[report]).map(|s| format!("{s}; p=3 gives 63 = 36 mod 27"))
}

fn theorem_1_4() -> Outcome {
    require_clean(&[
        sweep("thm1.4a", 200, 6, 2)?,
        sweep("thm1.4a-strong", 200, 6, 2)?,
        sweep("thm1.4b", 200, 6, 2)?,
    ])
}

fn identity_suites() -> Outcome {
    let ids = [
        IdentityId::HockeyStick,
        IdentityId::SquaredConvolution,
        IdentityId::OddConvolution,
        IdentityId::UTermClosedForm,
        IdentityId::HalfBinomial,
    ];
    let mut summary = Vec::new();
    for id in ids {
        let check = sweep_identity(id, &id.default_ranges()).map_err(|e| e.to_string())?;
        if let Some(f) = &check.failure {
            return Err(format!("{} fails at {:?}: {} != {}", id.key(), f.bindings, f.lhs, f.rhs));
        }
        summary.push(format!("{} {}", id.key(), check.points));
    }
    Ok(summary.join(", "))
}

fn lemma_suites() -> Outcome {
    require_clean(&[
        sweep("lemma2.1", 300, 6, 2)?,
        sweep("lemma3.1", 300, 6, 2)?,
        sweep("lemma5.1", 100, 6, 2)?,
        sweep("lemma5.2", 300, 6, 2)?,
    ])
}

fn sun_quotient() -> Outcome {
    let check = sweep_identity(IdentityId::SunQuotient, &IdentityId::SunQuotient.default_ranges())
        .map_err(|e| e.to_string())?;
    match (&check.failure, check.points) {
        (Some(f), _) => Err(format!("fails at {:?}", f.bindings)),
        (None, 100) => Ok("exact for n <= 100".into()),
        (None, points) => Err(format!("swept {points} points, expected 100")),
    }
}

fn conjectures() -> Outcome {
    let ids = ["conj1.1a", "conj1.1b", "sun5.4a", "sun5.4b", "conj1.4a", "conj1.4b"];
    let reports = ids.iter().map(|id| sweep(id, 200, 5, 2)).collect::<Result<Vec<_>, _>>()?;
    require_clean(&reports)
}

fn determinism() -> Outcome {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_binsum"))
            .args(["verify", "--claim", "all", "--format", "json", "--no-timing"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("exit status {}", out.status));
        }
        Ok(out.stdout)
    };
    let (first, second) = (run()?, run()?);
    if first == second {
        Ok(format!("{} identical bytes", first.len()))
    } else {
        Err("outputs differ".into())
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 constant tables", constant_tables, Some(Duration::from_secs(1))),
        ("2 Bernoulli table", bernoulli_table, Some(Duration::from_secs(1))),
        ("3 thm1.1/thm1.2 n<=200 r<=5", theorems_1_1_and_1_2, None),
        ("4 thm1.3 p<=500", theorem_1_3, None),
        ("5 thm1.4 n<=200 r<=6", theorem_1_4, None),
        ("6 identity suites", identity_suites, None),
        ("7 lemma suites", lemma_suites, None),
        ("8 Sun quotient n<=100", sun_quotient, None),
        ("9 conjectures n<=200", conjectures, None),
        ("10 report determinism", determinism, None),
    ];
    let mut failed = 0;
    for (name, criterion, budget) in criteria {
        let start = Instant::now();
        let mut outcome = criterion();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, budget) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:?}, budget {limit:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} ({} ms)", elapsed.as_millis()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} ({} ms)", elapsed.as_millis());
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria passed");
}
