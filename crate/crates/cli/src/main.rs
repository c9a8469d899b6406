//! `nf-forge`: stratification corpora, closed-term evaluation, and lemma
//! catalog runs over finite typed universes.

use clap::{Args, Parser, Subcommand, ValueEnum};
use nf_forge::cardinal::{Arith, Mutations, SymSize};
use nf_forge::eval::Evaluator;
use nf_forge::formula::corpus::{parse_corpus, Expect, Mode, Record};
use nf_forge::formula::parse_term;
use nf_forge::harness::{run_catalog, RunOptions};
use nf_forge::stratify::batch_check;
use nf_forge::universe::{Universe, DEFAULT_BUDGET};
use nf_forge::Error;
use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

/// Highest base level run by `check` at n ≥ 4 unless `--heavy` is given.
const LARGE_MAX_BASE: usize = 2;

#[derive(Parser)]
#[command(name = "nf-forge", version, about = "Stratification and finite-universe cardinal checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check corpus files (or stdin with `-`) against their expected verdicts.
    Stratify(StratifyArgs),
    /// Evaluate a closed term in a finite universe.
    Eval(EvalArgs),
    /// Run the lemma catalog.
    Check(CheckArgs),
    /// Print level sizes, the finite and semifinite cardinals, and the size
    /// of the multiplication graph.
    UniverseStats(UniverseArgs),
}

#[derive(Args)]
struct UniverseArgs {
    /// Number of atoms.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Highest enumerated level.
    #[arg(long = "L", default_value_t = 2)]
    max_level: usize,
    /// Largest permitted size of the top enumerated level.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Build multiplication graphs above cardinal level 2 even for n ≥ 4.
    #[arg(long)]
    heavy: bool,
}

#[derive(Args)]
struct StratifyArgs {
    /// Corpus files; `-` reads stdin.
    #[arg(required = true)]
    files: Vec<String>,
    /// Treat each input line as a bare formula with this expectation.
    #[arg(long, value_enum)]
    expect: Option<ExpectArg>,
    /// Mode for bare formulas: `strat` or `strat-wrt:VAR`.
    #[arg(long, default_value = "strat")]
    mode: String,
    #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
    format: TableFormat,
    #[arg(long, env = "NF_FORGE_JOBS", default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpectArg {
    #[value(name = "PASS", alias = "pass")]
    Pass,
    #[value(name = "FAIL", alias = "fail")]
    Fail,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

#[derive(Args)]
struct EvalArgs {
    /// Closed term, e.g. `exp2(two)`.
    expr: String,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long = "L", default_value_t = 2)]
    max_level: usize,
    /// Requested result level; raised to the lowest level the term fits.
    #[arg(long, default_value_t = 2)]
    level: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long = "L", default_value_t = 2)]
    max_level: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Comma-separated id globs.
    #[arg(long, default_value = "*")]
    select: String,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Worker threads; defaults to all cores.
    #[arg(long, env = "NF_FORGE_JOBS")]
    jobs: Option<usize>,
    /// Record per-check wall time (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
    /// Required for n ≥ 4.
    #[arg(long)]
    large: bool,
    /// At n ≥ 4, also run base levels above 2.
    #[arg(long, requires = "large")]
    heavy: bool,
    /// Highest base level to run.
    #[arg(long)]
    max_base: Option<usize>,
    /// Deliberate defects: `add_no_disjoint`, `frege_no_inhabited_guard`.
    #[arg(long, value_delimiter = ',')]
    mutate: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Tsv,
    Json,
}

/// A failure with its exit code.
struct Exit(u8, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Exit {
        let code = if e.is_resource() { EXIT_RESOURCE } else { EXIT_USAGE };
        Exit(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Stratify(a) => cmd_stratify(a),
        Cmd::Eval(a) => cmd_eval(a),
        Cmd::Check(a) => cmd_check(a),
        Cmd::UniverseStats(a) => cmd_universe_stats(a),
    };
    match res {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

struct Output {
    text: String,
    code: u8,
}

fn ok(text: String) -> Output {
    Output { text, code: 0 }
}

fn read_input(path: &str) -> Result<String, Exit> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Exit(EXIT_USAGE, format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Exit(EXIT_USAGE, format!("{path}: {e}")))?;
    }
    Ok(text)
}

/// Each nonblank, non-comment line becomes a record named `<source>:<line>`.
fn bare_records(source: &str, text: &str, expect: Expect, mode: &Mode) -> Vec<Record> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| Record {
            line: i + 1,
            name: format!("{source}:{}", i + 1),
            expect,
            mode: mode.clone(),
            formula: l.trim().to_string(),
        })
        .collect()
}

fn cmd_stratify(a: StratifyArgs) -> Result<Output, Exit> {
    let mode: Mode = a.mode.parse().map_err(|e| Exit(EXIT_USAGE, e))?;
    let mut records = Vec::new();
    for path in &a.files {
        let text = read_input(path)?;
        match a.expect {
            Some(e) => {
                let expect = match e {
                    ExpectArg::Pass => Expect::Pass,
                    ExpectArg::Fail => Expect::Fail,
                };
                records.extend(bare_records(path, &text, expect, &mode));
            }
            None => records.extend(
                parse_corpus(&text).map_err(|e| Exit(EXIT_USAGE, format!("{path}: {e}")))?,
            ),
        }
    }
    let report = batch_check(&records, a.jobs);
    let text = match a.format {
        TableFormat::Tsv => report.to_tsv(),
        TableFormat::Json => {
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
        }
    };
    let code = if report.all_matched() { 0 } else { EXIT_MISMATCH };
    Ok(Output { text, code })
}

fn cmd_eval(a: EvalArgs) -> Result<Output, Exit> {
    let term = parse_term(&a.expr).map_err(|e| Exit(EXIT_USAGE, e.to_string()))?;
    let u = Universe::new(a.n, a.max_level, a.budget)?;
    let v = Evaluator::new(&u).eval(&term, a.level)?;
    Ok(ok(v.render() + "\n"))
}

fn mutations(names: &[String]) -> Result<Mutations, Exit> {
    let mut m = Mutations::default();
    for name in names {
        match name.as_str() {
            "add_no_disjoint" => m.add_no_disjoint = true,
            "frege_no_inhabited_guard" => m.frege_no_inhabited_guard = true,
            other => return Err(Exit(EXIT_USAGE, format!("unknown mutation `{other}`"))),
        }
    }
    Ok(m)
}

fn cmd_check(a: CheckArgs) -> Result<Output, Exit> {
    if a.n >= 4 && !a.large {
        return Err(Exit(EXIT_USAGE, format!("n={} needs --large", a.n)));
    }
    let u = Universe::new(a.n, a.max_level, a.budget)?;
    let large_cap = (a.n >= 4 && !a.heavy).then_some(LARGE_MAX_BASE);
    let opts = RunOptions {
        mutations: mutations(&a.mutate)?,
        jobs: a.jobs,
        timing: a.timing,
        max_base: match (a.max_base, large_cap) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        },
    };
    let report = run_catalog(&u, &a.select, &opts)?;
    let text = match a.format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => report.to_json() + "\n",
        ReportFormat::Tsv => report_tsv(&report),
    };
    let code = if report.has_failures() { EXIT_MISMATCH } else { 0 };
    Ok(Output { text, code })
}

fn report_tsv(r: &nf_forge::harness::Report) -> String {
    use nf_forge::harness::Status;
    let mut out = String::from("id\tstatus\tinstances\tvacuity\tmillis\tdetail\n");
    for c in &r.checks {
        let detail = match &c.status {
            Status::Fail { witness } => {
                let b: Vec<String> = witness.bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
                format!("level={} {} : {}", witness.level, b.join(" "), witness.detail)
            }
            Status::Skipped { reason } => reason.clone(),
            _ => String::new(),
        };
        let millis = c.millis.map_or("-".to_string(), |m| m.to_string());
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{:.4}\t{}\t{}",
            c.id,
            c.status.label(),
            c.instances,
            c.vacuity(),
            millis,
            detail
        );
    }
    out
}

fn size_label(s: SymSize) -> String {
    match s {
        SymSize::Finite(k) => k.to_string(),
        SymSize::Overflow => "OVERFLOW".to_string(),
    }
}

fn cmd_universe_stats(a: UniverseArgs) -> Result<Output, Exit> {
    let u = Universe::new(a.n, a.max_level, a.budget)?;
    let ar = Arith::new(&u);
    let mut out = String::new();
    let _ = writeln!(out, "n={} L={} budget={}", a.n, a.max_level, a.budget);
    for (l, s) in u.level_sizes().iter().enumerate() {
        let _ = writeln!(out, "U{l}\t{s}");
    }
    let graph_cap = if a.n >= 4 && !a.heavy { LARGE_MAX_BASE } else { u.max_set_level() };
    for c in 2..=u.max_set_level() {
        let sizes = |list: &[nf_forge::universe::SetVal]| -> Result<String, Exit> {
            let mut v = Vec::new();
            for k in list {
                v.push(size_label(ar.sym_size(k)?.size));
            }
            Ok(v.join(" "))
        };
        let _ = writeln!(out, "F({c})\t{}", sizes(ar.frege(c)?)?);
        let _ = writeln!(out, "SF({c})\t{}", sizes(ar.semifinite(c)?)?);
        if c <= graph_cap {
            let _ = writeln!(out, "G({c})\t{} triples", ar.mul_graph(c)?.len());
        } else {
            let _ = writeln!(out, "G({c})\tskipped (use --heavy)");
        }
    }
    Ok(ok(out))
}
