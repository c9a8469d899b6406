//! Tab-separated formula corpus: `NAME<TAB>EXPECT<TAB>MODE<TAB>formula`.
//! Blank lines and lines starting with `#` are skipped.

use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Expect {
    Pass,
    Fail,
}

impl FromStr for Expect {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "PASS" => Ok(Expect::Pass),
            "FAIL" => Ok(Expect::Fail),
            _ => Err(format!("expected PASS or FAIL, found `{s}`")),
        }
    }
}

impl fmt::Display for Expect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expect::Pass => "PASS",
            Expect::Fail => "FAIL",
        })
    }
}

/// `strat` asks for plain stratification; `strat-wrt:v` asks for
/// stratification with respect to the eigenvariable `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Mode {
    Strat,
    StratWrt(String),
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "strat" {
            return Ok(Mode::Strat);
        }
        match s.strip_prefix("strat-wrt:") {
            Some(v) if !v.is_empty() => Ok(Mode::StratWrt(v.to_string())),
            _ => Err(format!("expected `strat` or `strat-wrt:VAR`, found `{s}`")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Strat => f.write_str("strat"),
            Mode::StratWrt(v) => write!(f, "strat-wrt:{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub line: usize,
    pub name: String,
    pub expect: Expect,
    pub mode: Mode,
    pub formula: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct CorpusError {
    pub line: usize,
    pub msg: String,
}

pub fn parse_corpus(text: &str) -> Result<Vec<Record>, CorpusError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.splitn(4, '\t').collect();
        if fields.len() != 4 {
            return Err(CorpusError {
                line,
                msg: format!("expected 4 tab-separated fields, found {}", fields.len()),
            });
        }
        let err = |msg: String| CorpusError { line, msg };
        out.push(Record {
            line,
            name: fields[0].trim().to_string(),
            expect: fields[1].trim().parse().map_err(err)?,
            mode: fields[2].trim().parse().map_err(err)?,
            formula: fields[3].trim().to_string(),
        });
    }
    Ok(out)
}
