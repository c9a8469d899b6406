//! JSON and text rendering of catalog runs.

use super::{LemmaCheck, Status, Witness};
use crate::universe::Universe;
use serde::Serialize;
use std::fmt::Write;

#[derive(Debug, Clone, Serialize)]
pub struct UniverseInfo {
    pub n: usize,
    #[serde(rename = "L")]
    pub max_level: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub universe: UniverseInfo,
    pub checks: Vec<LemmaCheck>,
    pub summary: Summary,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    id: &'a str,
    anchor: &'a str,
    origin: super::Origin,
    form: super::Form,
    levels: &'a [usize],
    status: &'a str,
    vacuity: Vacuity<'a>,
    millis: Option<u64>,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    skipped_levels: &'a [(usize, String)],
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
}

#[derive(Serialize)]
struct Vacuity<'a> {
    instances: u64,
    filtered: &'a [(&'static str, u64)],
}

#[derive(Serialize)]
struct ReportJson<'a> {
    universe: &'a UniverseInfo,
    checks: Vec<CheckJson<'a>>,
    summary: Summary,
}

impl Report {
    pub fn new(u: &Universe, checks: Vec<LemmaCheck>) -> Report {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass | Status::PassVacuous => summary.pass += 1,
                Status::Fail { .. } => summary.fail += 1,
                Status::Skipped { .. } => summary.skip += 1,
            }
        }
        Report {
            universe: UniverseInfo {
                n: u.n_atoms(),
                max_level: u.max_enum_level(),
            },
            checks,
            summary,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        let checks = self
            .checks
            .iter()
            .map(|c| CheckJson {
                id: c.id,
                anchor: c.anchor,
                origin: c.origin,
                form: c.form,
                levels: &c.levels,
                status: c.status.label(),
                vacuity: Vacuity {
                    instances: c.instances,
                    filtered: &c.hypotheses,
                },
                millis: c.millis,
                skipped_levels: &c.skipped_levels,
                witness: match &c.status {
                    Status::Fail { witness } => Some(witness),
                    _ => None,
                },
                reason: match &c.status {
                    Status::Skipped { reason } => Some(reason),
                    _ => None,
                },
            })
            .collect();
        let doc = ReportJson {
            universe: &self.universe,
            checks,
            summary: self.summary,
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    /// One line per check, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(
                out,
                "{:<13} {:<40} instances={} vacuity={:.2}",
                c.status.label(),
                c.id,
                c.instances,
                c.vacuity()
            );
            if let Some(ms) = c.millis {
                let _ = write!(out, " millis={ms}");
            }
            match &c.status {
                Status::Fail { witness } => {
                    let b: Vec<String> =
                        witness.bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let _ = write!(out, " level={} {} : {}", witness.level, b.join(" "), witness.detail);
                }
                Status::Skipped { reason } => {
                    let _ = write!(out, " : {reason}");
                }
                _ => {}
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "summary: pass={} fail={} skip={}",
            self.summary.pass, self.summary.fail, self.summary.skip
        );
        out
    }
}
