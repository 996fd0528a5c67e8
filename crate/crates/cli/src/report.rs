//! Report serialization.
//!
//! Big integers are written as decimal strings and rationals as `num/den`,
//! so no value is ever squeezed through a float. All output is deterministic
//! except `elapsed_ms`, which becomes `null` when timing is disabled.

use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use binsum_core::engine::{CongruenceClaim, Evaluation, Point, SweptRange, VerificationReport};
use binsum_core::identities::IdentityCheck;

use crate::config::Format;

struct Params<'a>(&'a Point);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.entries().len()))?;
        for (k, v) in self.0.entries() {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

struct Ranges<'a>(&'a [SweptRange]);

impl Serialize for Ranges<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for r in self.0 {
            map.serialize_entry(r.name, &[r.min, r.max])?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct FailureJson<'a> {
    params: Params<'a>,
    value: String,
    multiplier: Option<String>,
    target: String,
    modulus: String,
    residue: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

impl<'a> From<&'a Evaluation> for FailureJson<'a> {
    fn from(e: &'a Evaluation) -> Self {
        FailureJson {
            params: Params(&e.point),
            value: e.value.to_string(),
            multiplier: e.multiplier.as_ref().map(|m| m.to_string()),
            target: e.target.to_string(),
            modulus: e.modulus.to_string(),
            residue: e.residue.to_string(),
            note: e.note.as_deref(),
        }
    }
}

#[derive(Serialize)]
struct ResultJson<'a> {
    params: Params<'a>,
    residue: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    claim: &'a str,
    kind: String,
    statement: &'a str,
    ranges: Ranges<'a>,
    points: usize,
    status: &'static str,
    failures: Vec<FailureJson<'a>>,
    /// One entry per swept point, in point order.
    results: Vec<ResultJson<'a>>,
    elapsed_ms: Option<u64>,
}

fn report_json(report: &VerificationReport, timing: bool) -> ReportJson<'_> {
    ReportJson {
        claim: report.claim.id,
        kind: report.claim.kind.to_string(),
        statement: report.claim.statement,
        ranges: Ranges(&report.ranges),
        points: report.points(),
        status: status(report.passed()),
        failures: report.failures().map(FailureJson::from).collect(),
        results: report
            .evaluations
            .iter()
            .map(|e| ResultJson {
                params: Params(&e.point),
                residue: e.residue.to_string(),
                status: status(e.passed),
                note: e.note.as_deref(),
            })
            .collect(),
        elapsed_ms: timing.then_some(report.elapsed.as_millis() as u64),
    }
}

fn status(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

fn params_field(point: &Point) -> String {
    point.entries().iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

pub const REPORT_CSV_HEADER: &str = "claim,kind,params,value,multiplier,target,modulus,residue,status";

fn csv_rows(claim: &CongruenceClaim, evaluations: &[Evaluation], out: &mut String) {
    for e in evaluations {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            claim.id,
            claim.kind,
            params_field(&e.point),
            e.value,
            e.multiplier.as_ref().map(|m| m.to_string()).unwrap_or_default(),
            e.target,
            e.modulus,
            e.residue,
            if e.passed { "PASS" } else { "FAIL" },
        );
    }
}

fn report_text(report: &VerificationReport, timing: bool, out: &mut String) {
    let failed = report.failures().count();
    let _ = write!(
        out,
        "{}: {}/{} points {}  [{}] {}",
        report.claim.id,
        report.points() - failed,
        report.points(),
        if failed == 0 { "PASS" } else { "FAIL" },
        report.claim.kind,
        report.claim.statement,
    );
    if timing {
        let _ = write!(out, " ({} ms)", report.elapsed.as_millis());
    }
    out.push('\n');
    for e in report.failures() {
        let _ = writeln!(
            out,
            "  counterexample at {}: value={} multiplier={} target={} modulus={} residue={}",
            e.point,
            e.value,
            e.multiplier.as_ref().map(|m| m.to_string()).unwrap_or_else(|| "1".into()),
            e.target,
            e.modulus,
            e.residue,
        );
    }
    for e in report.evaluations.iter().filter(|e| e.passed && e.note.is_some()) {
        let _ = writeln!(out, "  note at {}: {}", e.point, e.note.as_deref().unwrap_or(""));
    }
}

/// Serializes one sweep report.
pub fn emit_report(report: &VerificationReport, format: Format, timing: bool) -> String {
    emit_reports(std::slice::from_ref(report), format, timing, false)
}

/// Serializes several reports. JSON output is an array when `as_array` is
/// set, otherwise the single report object.
pub fn emit_reports(reports: &[VerificationReport], format: Format, timing: bool, as_array: bool) -> String {
    match format {
        Format::Json => {
            let mut s = if as_array {
                let all: Vec<_> = reports.iter().map(|r| report_json(r, timing)).collect();
                serde_json::to_string_pretty(&all)
            } else {
                serde_json::to_string_pretty(&report_json(&reports[0], timing))
            }
            .expect("report serialization cannot fail");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from(REPORT_CSV_HEADER);
            out.push('\n');
            for r in reports {
                csv_rows(r.claim, &r.evaluations, &mut out);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                report_text(r, timing, &mut out);
            }
            out
        }
    }
}

/// Identity bindings in sweep order.
struct Bindings<'a>(&'a [(&'static str, String)]);

impl Serialize for Bindings<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct IdentityFailureJson<'a> {
    bindings: Bindings<'a>,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct IdentityJson<'a> {
    identity: &'a str,
    statement: &'a str,
    domain: &'a str,
    points: u64,
    status: &'static str,
    certified_n: Option<u64>,
    failure: Option<IdentityFailureJson<'a>>,
}

fn identity_json(check: &IdentityCheck) -> IdentityJson<'_> {
    IdentityJson {
        identity: check.id.key(),
        statement: check.id.statement(),
        domain: &check.domain,
        points: check.points,
        status: status(check.passed()),
        certified_n: check.certified_n,
        failure: check.failure.as_ref().map(|f| IdentityFailureJson {
            bindings: Bindings(&f.bindings),
            lhs: f.lhs.to_string(),
            rhs: f.rhs.to_string(),
        }),
    }
}

pub fn emit_identities(checks: &[IdentityCheck], format: Format) -> String {
    match format {
        Format::Json => {
            let all: Vec<_> = checks.iter().map(identity_json).collect();
            let mut s = serde_json::to_string_pretty(&all).expect("identity serialization cannot fail");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("identity,domain,points,status,failure\n");
            for c in checks {
                let failure = c
                    .failure
                    .as_ref()
                    .map(|f| {
                        let b: Vec<_> = f.bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        format!("{} lhs={} rhs={}", b.join(";"), f.lhs, f.rhs)
                    })
                    .unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{},\"{}\",{},{},{}",
                    c.id.key(),
                    c.domain,
                    c.points,
                    if c.passed() { "PASS" } else { "FAIL" },
                    failure
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in checks {
                let _ = write!(
                    out,
                    "{}: {} points {}  over {}",
                    c.id.key(),
                    c.points,
                    if c.passed() { "PASS" } else { "FAIL" },
                    c.domain
                );
                if let Some(n) = c.certified_n {
                    let _ = write!(out, " (x-grid proves the polynomial identity for n <= {n})");
                }
                out.push('\n');
                if let Some(f) = &c.failure {
                    let b: Vec<_> = f.bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let _ = writeln!(out, "  first failure at {}: lhs={} rhs={}", b.join(", "), f.lhs, f.rhs);
                }
            }
            out
        }
    }
}

#[derive(Serialize)]
struct AllJson<'a> {
    identities: Vec<IdentityJson<'a>>,
    claims: Vec<ReportJson<'a>>,
}

/// Serializes an `all` run: identity sweeps first, then claim sweeps.
pub fn emit_all(
    checks: &[IdentityCheck],
    reports: &[VerificationReport],
    format: Format,
    timing: bool,
) -> String {
    match format {
        Format::Json => {
            let all = AllJson {
                identities: checks.iter().map(identity_json).collect(),
                claims: reports.iter().map(|r| report_json(r, timing)).collect(),
            };
            let mut s = serde_json::to_string_pretty(&all).expect("report serialization cannot fail");
            s.push('\n');
            s
        }
        // Two CSV blocks separated by a blank line, each with its own header.
        Format::Csv => {
            format!("{}\n{}", emit_identities(checks, format), emit_reports(reports, format, timing, true))
        }
        Format::Text => emit_identities(checks, format) + &emit_reports(reports, format, timing, true),
    }
}

/// A constant table: column names and rows of already-formatted cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Label prefix for the compact text row, e.g. `a_` gives `a_3=3`.
    pub label: &'static str,
}

/// A table row keyed by column name, in column order.
struct Row<'a>(&'a [&'static str], &'a [String]);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (c, v) in self.0.iter().zip(self.1) {
            map.serialize_entry(c, v)?;
        }
        map.end()
    }
}

pub fn emit_table(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = table.columns.join(",");
            out.push('\n');
            for row in &table.rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let rows: Vec<Row<'_>> = table.rows.iter().map(|row| Row(&table.columns, row)).collect();
            let mut s = serde_json::to_string_pretty(&rows).expect("table serialization cannot fail");
            s.push('\n');
            s
        }
        Format::Text => {
            let cells: Vec<String> =
                table.rows.iter().map(|row| format!("{}{}={}", table.label, row[0], row[1])).collect();
            let mut out = cells.join(" ");
            out.push('\n');
            out
        }
    }
}

#[derive(Serialize)]
struct EvaluationJson<'a> {
    claim: &'a str,
    #[serde(flatten)]
    fields: FailureJson<'a>,
    status: &'static str,
}

/// Serializes a single claim point.
pub fn emit_evaluation(claim: &CongruenceClaim, eval: &Evaluation, format: Format) -> String {
    match format {
        Format::Json => {
            let json = EvaluationJson {
                claim: claim.id,
                fields: FailureJson::from(eval),
                status: status(eval.passed),
            };
            let mut s = serde_json::to_string_pretty(&json).expect("evaluation serialization cannot fail");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from(REPORT_CSV_HEADER);
            out.push('\n');
            csv_rows(claim, std::slice::from_ref(eval), &mut out);
            out
        }
        Format::Text => {
            let mut out = format!(
                "{} at {}: value={} multiplier={} target={} modulus={} residue={} {}\n",
                claim.id,
                eval.point,
                eval.value,
                eval.multiplier.as_ref().map(|m| m.to_string()).unwrap_or_else(|| "1".into()),
                eval.target,
                eval.modulus,
                eval.residue,
                if eval.passed { "PASS" } else { "FAIL" },
            );
            if let Some(note) = &eval.note {
                let _ = writeln!(out, "  note: {note}");
            }
            out
        }
    }
}

/// A single sequence value with the inputs that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct SequenceValue {
    pub seq: String,
    pub n: u64,
    pub prefix: bool,
    pub weight: &'static str,
    pub value: String,
}

pub fn emit_sequence_value(v: &SequenceValue, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("value serialization cannot fail");
            s.push('\n');
            s
        }
        Format::Csv => {
            format!("seq,n,prefix,weight,value\n{},{},{},{},{}\n", v.seq, v.n, v.prefix, v.weight, v.value)
        }
        Format::Text => format!("{}\n", v.value),
    }
}
