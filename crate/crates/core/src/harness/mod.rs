//! Declarative catalog of lemma checks evaluated exhaustively over a
//! [`Universe`], with hypothesis-filter accounting and concrete witnesses.

pub mod catalog;
pub mod report;

use crate::cardinal::{Arith, Mutations};
use crate::error::{Error, Result};
use crate::universe::{parse_obj, render_obj, Obj, SetVal, Universe};
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

pub use catalog::{catalog, find, OUT_OF_SCOPE};
pub use report::{Report, Summary};

/// A value bound to one quantified variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inst {
    Obj(Obj),
    /// A subset of the semifinite list at some level, as a bitmask over
    /// list positions.
    Mask(u64),
}

impl Inst {
    pub fn render(&self) -> String {
        match self {
            Inst::Obj(o) => render_obj(o),
            Inst::Mask(m) => format!("mask:{m:#b}"),
        }
    }

    pub fn parse(u: &Universe, text: &str) -> Result<Inst> {
        match text.strip_prefix("mask:0b") {
            Some(bits) => u64::from_str_radix(bits, 2)
                .map(Inst::Mask)
                .map_err(|_| Error::BadSetVal(format!("bad mask `{text}`"))),
            None => parse_obj(u, text).map(Inst::Obj),
        }
    }
}

/// Quantifier range for one variable. Level offsets are relative to the
/// check's base level; variable references point at earlier variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Range {
    /// ℱ at base + d.
    Frege(i8),
    /// SF at base + d.
    Semi(i8),
    /// Every element of U_{base+d}; atoms when the level is 0.
    Elems(i8),
    /// Members of an earlier set variable.
    Members(usize),
    /// Subsets of an earlier set variable.
    Subsets(usize),
    /// Subsets of the product of two earlier set variables.
    Rel(usize, usize),
    /// Subsets of SF at base + d, as masks over its list positions.
    SemiMasks(i8),
    /// Level-(base+d) sets whose members are all unit subclasses.
    UnitFamilies(i8),
    /// Every element of U_{base+d} when that level is enumerated and within
    /// [`MAX_RANGE`], SF there otherwise.
    Sets(i8),
}

/// Largest element range a check may quantify over; bigger levels are
/// skipped for that check.
pub const MAX_RANGE: usize = 4096;

/// Result of one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Eval {
    Holds,
    /// A hypothesis, by position in the check's list, was false.
    Filtered(usize),
    Violated(String),
}

/// How a check relates to the statement it is anchored to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    /// Every object in the statement is materialized.
    Exact,
    /// Level-(L+2) cardinals are handled through representatives.
    Reduced,
    /// The statement is about definability; the check stratifies the
    /// defining formula.
    Syntactic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    /// A stated lemma or theorem.
    Statement,
    /// Artifact-internal cross-check.
    Oracle,
}

pub type Body = fn(&Ctx, &[Inst]) -> Result<Eval>;

pub struct Check {
    pub id: &'static str,
    pub anchor: &'static str,
    pub origin: Origin,
    pub form: Form,
    /// Base levels to run at; levels the universe cannot hold are skipped.
    pub levels: &'static [usize],
    pub vars: &'static [(&'static str, Range)],
    pub hyps: &'static [&'static str],
    /// Run in a separate universe with at most this many atoms and this
    /// maximal level.
    pub aux: Option<(usize, usize)>,
    pub body: Body,
}

/// Evaluation context handed to a check body.
pub struct Ctx<'a> {
    pub a: &'a Arith<'a>,
    pub u: &'a Universe,
    pub base: usize,
}

impl Ctx<'_> {
    pub fn level(&self, d: i8) -> Option<usize> {
        usize::try_from(self.base as i64 + d as i64).ok()
    }

    pub fn num(&self, c: usize, k: usize) -> Result<SetVal> {
        self.a.numeral(c, k)
    }
}

pub fn set(v: &[Inst], i: usize) -> &SetVal {
    match &v[i] {
        Inst::Obj(Obj::Set(s)) => s,
        other => panic!("variable {i} is not a set: {other:?}"),
    }
}

pub fn obj(v: &[Inst], i: usize) -> &Obj {
    match &v[i] {
        Inst::Obj(o) => o,
        other => panic!("variable {i} is not an object: {other:?}"),
    }
}

pub fn mask(v: &[Inst], i: usize) -> u64 {
    match v[i] {
        Inst::Mask(m) => m,
        ref other => panic!("variable {i} is not a mask: {other:?}"),
    }
}

/// A concrete counter-instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub level: usize,
    pub bindings: Vec<(String, String)>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// Every instance was filtered by a hypothesis.
    PassVacuous,
    Fail { witness: Witness },
    Skipped { reason: String },
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::PassVacuous => "pass-vacuous",
            Status::Fail { .. } => "fail",
            Status::Skipped { .. } => "skipped",
        }
    }
}

/// Outcome of one catalog entry.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheck {
    pub id: &'static str,
    pub anchor: &'static str,
    pub origin: Origin,
    pub form: Form,
    pub levels: Vec<usize>,
    pub instances: u64,
    pub hypotheses: Vec<(&'static str, u64)>,
    pub status: Status,
    /// Declared levels that were not run, with the reason.
    pub skipped_levels: Vec<(usize, String)>,
    #[serde(skip)]
    pub millis: Option<u64>,
}

impl LemmaCheck {
    /// Fraction of instances removed by hypotheses.
    pub fn vacuity(&self) -> f64 {
        if self.instances == 0 {
            return 1.0;
        }
        let filtered: u64 = self.hypotheses.iter().map(|(_, k)| k).sum();
        filtered as f64 / self.instances as f64
    }
}

/// Settings for a catalog run.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub mutations: Mutations,
    pub jobs: Option<usize>,
    pub timing: bool,
    /// Highest base level to run; declared levels above it are skipped.
    pub max_base: Option<usize>,
}

struct Tally {
    instances: u64,
    filtered: Vec<u64>,
}

enum Walk {
    Done,
    Failed(Witness),
}

fn enumerate(ctx: &Ctx, r: Range, bound: &[Inst]) -> Result<Vec<Inst>> {
    let lv = |d: i8, what: &str| {
        ctx.level(d).ok_or_else(|| Error::Eval(format!("negative level in {what} range")))
    };
    let objs = |it: Vec<SetVal>| it.into_iter().map(|s| Inst::Obj(Obj::Set(s))).collect();
    Ok(match r {
        Range::Frege(d) => objs(ctx.a.frege(lv(d, "ℱ")?)?.to_vec()),
        Range::Semi(d) => objs(ctx.a.semifinite(lv(d, "SF")?)?.to_vec()),
        Range::Elems(d) => elems(ctx, lv(d, "element")?)?,
        Range::Sets(d) => {
            let l = lv(d, "set")?;
            if l <= ctx.u.max_enum_level() && ctx.u.size(l) <= MAX_RANGE {
                elems(ctx, l)?
            } else {
                objs(ctx.a.semifinite(l)?.to_vec())
            }
        }
        Range::Members(i) => ctx
            .u
            .member_objs(set(bound, i))
            .into_iter()
            .map(Inst::Obj)
            .collect(),
        Range::Subsets(i) => subsets(set(bound, i)).map(|s| Inst::Obj(Obj::Set(s))).collect(),
        Range::Rel(i, j) => {
            let p = ctx.u.product(set(bound, i), set(bound, j))?;
            subsets(&p).map(|s| Inst::Obj(Obj::Set(s))).collect()
        }
        Range::SemiMasks(d) => {
            let n = ctx.a.semifinite(lv(d, "SF")?)?.len();
            if n > 20 {
                return Err(Error::Eval(format!("{n} semifinite values are too many to mask")));
            }
            (0..1u64 << n).map(Inst::Mask).collect()
        }
        Range::UnitFamilies(d) => {
            let l = lv(d, "unit family")?;
            ctx.u.check_set_level(l, "unit family")?;
            // the unit subclasses USC(a) for a ∈ U_{l−2}
            let units: Vec<usize> = (0..ctx.u.size(l - 2))
                .map(|a| {
                    let usc = ctx.u.usc(&ctx.u.elem(l - 2, a).clone())?;
                    ctx.u.index_of(&Obj::Set(usc))
                })
                .collect::<Result<_>>()?;
            let base = ctx.u.set_of(l, units.iter().copied())?;
            subsets(&base).map(|s| Inst::Obj(Obj::Set(s))).collect()
        }
    })
}

fn elems(ctx: &Ctx, l: usize) -> Result<Vec<Inst>> {
    ctx.u.check_enum_level(l, "quantifier range")?;
    let size = ctx.u.size(l);
    if size > MAX_RANGE {
        return Err(Error::RangeTooLarge {
            level: l,
            size,
            limit: MAX_RANGE,
        });
    }
    Ok((0..size).map(|k| Inst::Obj(ctx.u.obj(l, k))).collect())
}

/// Every subset of `s`, as sets at the same level. Refuses more than 2^20.
pub fn subsets(s: &SetVal) -> impl Iterator<Item = SetVal> + '_ {
    let ms: Vec<usize> = s.members().collect();
    assert!(ms.len() <= 20, "subset enumeration over {} members", ms.len());
    (0..1u64 << ms.len()).map(move |mask| {
        let mut out = s.clone();
        for (i, &m) in ms.iter().enumerate() {
            if mask >> i & 1 == 0 {
                out.remove(m);
            }
        }
        out
    })
}

fn walk(check: &Check, ctx: &Ctx, bound: &mut Vec<Inst>, tally: &mut Tally) -> Result<Walk> {
    let depth = bound.len();
    if depth == check.vars.len() {
        tally.instances += 1;
        let outcome = run_body(check, ctx, bound)?;
        return Ok(match outcome {
            Eval::Holds => Walk::Done,
            Eval::Filtered(h) => {
                tally.filtered[h] += 1;
                Walk::Done
            }
            Eval::Violated(detail) => Walk::Failed(Witness {
                level: ctx.base,
                bindings: check
                    .vars
                    .iter()
                    .zip(bound.iter())
                    .map(|((name, _), v)| (name.to_string(), v.render()))
                    .collect(),
                detail,
            }),
        });
    }
    for v in enumerate(ctx, check.vars[depth].1, bound)? {
        bound.push(v);
        let r = walk(check, ctx, bound, tally);
        bound.pop();
        if let Walk::Failed(w) = r? {
            return Ok(Walk::Failed(w));
        }
    }
    Ok(Walk::Done)
}

fn aux_universe(main: &Universe, aux: Option<(usize, usize)>) -> Result<Option<Universe>> {
    match aux {
        None => Ok(None),
        Some((n, l)) => Universe::new(main.n_atoms().min(n), l, main.budget().max(1 << 16)).map(Some),
    }
}

/// Runs one check over every level it declares.
pub fn check_lemma(check: &Check, u: &Universe, opts: &RunOptions) -> LemmaCheck {
    let start = Instant::now();
    let mut tally = Tally {
        instances: 0,
        filtered: vec![0; check.hyps.len()],
    };
    let mut levels = Vec::new();
    let mut skipped = Vec::new();
    let status = match run_levels(check, u, opts, &mut tally, &mut levels, &mut skipped) {
        Ok(None) if tally.instances > 0 && tally.filtered.iter().sum::<u64>() == tally.instances => {
            Status::PassVacuous
        }
        Ok(None) if levels.is_empty() => Status::Skipped {
            reason: skipped
                .first()
                .map(|(l, r)| format!("level {l}: {r}"))
                .unwrap_or_else(|| "no declared level fits the universe".into()),
        },
        Ok(None) => Status::Pass,
        Ok(Some(witness)) => Status::Fail { witness },
        Err(e) => Status::Skipped {
            reason: e.to_string(),
        },
    };
    LemmaCheck {
        id: check.id,
        anchor: check.anchor,
        origin: check.origin,
        form: check.form,
        levels,
        instances: tally.instances,
        hypotheses: check.hyps.iter().copied().zip(tally.filtered).collect(),
        status,
        skipped_levels: skipped,
        millis: opts.timing.then(|| start.elapsed().as_millis() as u64),
    }
}

fn run_levels(
    check: &Check,
    main: &Universe,
    opts: &RunOptions,
    tally: &mut Tally,
    levels: &mut Vec<usize>,
    skipped: &mut Vec<(usize, String)>,
) -> Result<Option<Witness>> {
    let aux = aux_universe(main, check.aux)?;
    let u = aux.as_ref().unwrap_or(main);
    let a = Arith::with_mutations(u, opts.mutations);
    for &base in check.levels {
        if base > u.max_set_level() {
            skipped.push((base, format!("above max set level {}", u.max_set_level())));
            continue;
        }
        if let Some(cap) = opts.max_base.filter(|&cap| base > cap && check.aux.is_none()) {
            skipped.push((base, format!("above the base-level cap {cap}")));
            continue;
        }
        let ctx = Ctx { a: &a, u, base };
        match walk(check, &ctx, &mut Vec::new(), tally) {
            Ok(Walk::Done) => levels.push(base),
            Ok(Walk::Failed(w)) => {
                levels.push(base);
                return Ok(Some(w));
            }
            Err(e) if e.is_resource() => skipped.push((base, e.to_string())),
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// Re-evaluates a check body on a recorded witness, after confirming each
/// binding lies in its declared range.
pub fn recheck(id: &str, u: &Universe, mutations: Mutations, w: &Witness) -> Result<Eval> {
    let check = find(id).ok_or_else(|| Error::UnknownSelection(id.to_string()))?;
    let aux = aux_universe(u, check.aux)?;
    let u = aux.as_ref().unwrap_or(u);
    let a = Arith::with_mutations(u, mutations);
    let ctx = Ctx { a: &a, u, base: w.level };
    let vals = w
        .bindings
        .iter()
        .map(|(_, text)| Inst::parse(u, text))
        .collect::<Result<Vec<_>>>()?;
    if vals.len() != check.vars.len() {
        return Err(Error::Eval(format!("{id} binds {} variables", check.vars.len())));
    }
    for (i, (name, range)) in check.vars.iter().enumerate() {
        if !enumerate(&ctx, *range, &vals[..i])?.contains(&vals[i]) {
            return Err(Error::OutOfRange(name.to_string()));
        }
    }
    run_body(check, &ctx, &vals)
}

/// Runs a body on one instance. An engine error on a concrete instance is a
/// defect, not a skip, so only resource errors propagate.
fn run_body(check: &Check, ctx: &Ctx, vals: &[Inst]) -> Result<Eval> {
    match (check.body)(ctx, vals) {
        Err(e) if !e.is_resource() => Ok(Eval::Violated(format!("error: {e}"))),
        r => r,
    }
}

/// Glob match with `*` and `?`.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    let (mut pi, mut ti) = (0, 0);
    let (mut star, mut mark) = (None, 0);
    while ti < t.len() {
        if pi < p.len() && (p[pi] == '?' || p[pi] == t[ti]) {
            pi += 1;
            ti += 1;
        } else if pi < p.len() && p[pi] == '*' {
            star = Some(pi);
            mark = ti;
            pi += 1;
        } else if let Some(s) = star {
            pi = s + 1;
            mark += 1;
            ti = mark;
        } else {
            return false;
        }
    }
    p[pi..].iter().all(|&c| c == '*')
}

/// Selects catalog entries by comma-separated globs. A pattern that matches
/// nothing is an error.
pub fn select(selection: &str) -> Result<Vec<&'static Check>> {
    let pats: Vec<&str> = selection.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
    for p in &pats {
        if !catalog().iter().any(|c| glob_match(p, c.id)) {
            return Err(Error::UnknownSelection(p.to_string()));
        }
    }
    Ok(catalog()
        .iter()
        .filter(|c| pats.iter().any(|p| glob_match(p, c.id)))
        .collect())
}

/// Runs the selected checks on a bounded pool; results keep catalog order.
pub fn run_catalog(u: &Universe, selection: &str, opts: &RunOptions) -> Result<Report> {
    let checks = select(selection)?;
    let run = || -> Vec<LemmaCheck> {
        checks.par_iter().map(|c| check_lemma(c, u, opts)).collect()
    };
    let results = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Eval(format!("worker pool: {e}")))?
            .install(run),
        None => run(),
    };
    Ok(Report::new(u, results))
}
