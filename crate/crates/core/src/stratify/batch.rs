//! Batch checking of corpus records against their expected verdicts.

use super::{stratify, stratify_wrt, StratResult, Verdict};
use crate::formula::corpus::{Expect, Mode, Record};
use crate::formula::parse_formula;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct RecordReport {
    pub name: String,
    pub line: usize,
    pub expected: Expect,
    pub mode: Mode,
    /// `None` when the formula failed to parse.
    pub got: Option<Verdict>,
    pub matched: bool,
    pub eigen_index: Option<i64>,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<StratResult>,
}

impl RecordReport {
    pub fn got_label(&self) -> String {
        self.got.map_or("ParseError".to_string(), |v| v.to_string())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BatchReport {
    pub records: Vec<RecordReport>,
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
}

impl BatchReport {
    pub fn all_matched(&self) -> bool {
        self.mismatched == 0
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("name\texpected\tgot\teigen_index\tdetail\n");
        for r in &self.records {
            let eigen = r.eigen_index.map_or("-".to_string(), |i| i.to_string());
            let mark = if r.matched { "" } else { "MISMATCH " };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}{}\n",
                r.name,
                r.expected,
                r.got_label(),
                eigen,
                mark,
                r.detail
            ));
        }
        out
    }
}

/// Whether a verdict counts as PASS under `mode`.
pub fn passes(mode: &Mode, v: Verdict) -> bool {
    match mode {
        Mode::Strat => v == Verdict::Stratified,
        Mode::StratWrt(_) => v != Verdict::Unstratified,
    }
}

pub fn check_record(r: &Record) -> RecordReport {
    let base = |got, matched, eigen_index, detail, result| RecordReport {
        name: r.name.clone(),
        line: r.line,
        expected: r.expect,
        mode: r.mode.clone(),
        got,
        matched,
        eigen_index,
        detail,
        result,
    };
    match parse_formula(&r.formula) {
        Err(e) => base(None, false, None, format!("parse error: {e}"), None),
        Ok(f) => {
            let res = match &r.mode {
                Mode::Strat => stratify(&f),
                Mode::StratWrt(v) => stratify_wrt(&f, v),
            };
            let pass = passes(&r.mode, res.verdict);
            let matched = pass == (r.expect == Expect::Pass);
            base(Some(res.verdict), matched, res.eigen_index, res.detail(), Some(res))
        }
    }
}

/// Checks every record, fanning out to `jobs` worker threads. Report order
/// matches input order.
pub fn batch_check(records: &[Record], jobs: usize) -> BatchReport {
    let reports: Vec<RecordReport> = if jobs <= 1 {
        records.iter().map(check_record).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| records.par_iter().map(check_record).collect()),
            Err(_) => records.iter().map(check_record).collect(),
        }
    };
    let matched = reports.iter().filter(|r| r.matched).count();
    BatchReport {
        total: reports.len(),
        matched,
        mismatched: reports.len() - matched,
        records: reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::corpus::parse_corpus;

    #[test]
    fn empty_corpus_is_clean() {
        let rep = batch_check(&[], 4);
        assert_eq!(rep.total, 0);
        assert!(rep.all_matched());
        assert_eq!(rep.to_tsv().lines().count(), 1);
    }

    #[test]
    fn parse_errors_count_as_mismatches() {
        let recs = parse_corpus("bad\tFAIL\tstrat\tx in\n").unwrap();
        let rep = batch_check(&recs, 1);
        assert_eq!(rep.mismatched, 1);
        assert_eq!(rep.records[0].got_label(), "ParseError");
    }

    #[test]
    fn order_is_preserved_in_parallel() {
        let text: String = (0..50)
            .map(|i| format!("r{i}\tPASS\tstrat\tx{i} in y\n"))
            .collect();
        let recs = parse_corpus(&text).unwrap();
        let rep = batch_check(&recs, 4);
        let names: Vec<_> = rep.records.iter().map(|r| r.name.clone()).collect();
        let want: Vec<_> = (0..50).map(|i| format!("r{i}")).collect();
        assert_eq!(names, want);
    }
}
