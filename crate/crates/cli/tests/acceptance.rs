//! Acceptance criteria 1-8, run in order with one pass/fail line each on
//! stderr. Tolerances are pinned in the constants below.

#[path = "../../core/tests/support/brute.rs"]
mod brute;

use nf_forge::cardinal::oracle::Oracle;
use nf_forge::cardinal::{Arith, Mutations};
use nf_forge::formula::corpus::parse_corpus;
use nf_forge::formula::Formula;
use nf_forge::harness::{recheck, run_catalog, Eval, Origin, RunOptions, Status};
use nf_forge::stratify::{batch_check, stratify, stratify_wrt, RecordReport, Verdict};
use nf_forge::universe::{FuncView, SetVal, Universe, DEFAULT_BUDGET};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

const CORPUS_LIMIT: Duration = Duration::from_secs(1);
const BRUTE_LIMIT: Duration = Duration::from_secs(30);
const BRUTE_COUNT: usize = 1000;
const BRUTE_SEED: u64 = 2024;
const CATALOG_LIMIT: Duration = Duration::from_secs(120);
const DEDEKIND_LIMIT: Duration = Duration::from_secs(10);

/// Checks that must be non-vacuous passes at n = 3.
const REQUIRED: &[&str] = &[
    "theorem:finitetrichotomy",
    "lemma:addition2",
    "lemma:addition3",
    "theorem:multiplication",
    "lemma:right_distributiveNF",
    "lemma:left_distributiveNF",
    "lemma:multiplication_commutative",
    "lemma:multiplication_associative",
    "lemma:exp_zero",
    "lemma:exp_one",
    "lemma:exp_two",
    "lemma:exprec",
    "lemma:exp_sum",
    "lemma:mlessthanexpm",
    "lemma:exporder",
    "lemma:exponeone",
    "lemma:Tzero",
    "lemma:Tone",
    "lemma:Ttwo",
    "lemma:Tsum",
    "lemma:Torder",
    "lemma:expT_inhabited",
    "lemma:expT",
    "lemma:Toneone",
    "lemma:Tonto",
    "lemma:Teven",
    "lemma:expandT",
    "lemma:noinsertions",
    "lemma:orderbyaddition",
    "lemma:nothingbetween",
    "lemma:le_transitive",
    "lemma:lessthan_transitive",
    "lemma:Jsuccessor",
    "lemma:Jfinite",
    "lemma:Jcardinality",
];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn corpus_text(name: &str) -> String {
    let path = format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn record<'a>(rs: &'a [RecordReport], name: &str) -> Result<&'a RecordReport, String> {
    rs.iter().find(|r| r.name == name).ok_or_else(|| format!("no record {name}"))
}

fn index(r: &RecordReport, v: &str) -> Result<i64, String> {
    r.result
        .as_ref()
        .and_then(|s| s.index_of(v))
        .ok_or_else(|| format!("{}: no index for {v}", r.name))
}

fn criterion_corpora() -> Outcome {
    let start = Instant::now();
    let defs = parse_corpus(&corpus_text("definitions.nf")).map_err(|e| e.to_string())?;
    let negs = parse_corpus(&corpus_text("negatives.nf")).map_err(|e| e.to_string())?;
    let d = batch_check(&defs, 1);
    let n = batch_check(&negs, 1);
    ensure(d.all_matched(), || format!("{} definition mismatches", d.mismatched))?;
    ensure(n.all_matched(), || format!("{} negative mismatches", n.mismatched))?;

    let pair = record(&d.records, "ordered_pair")?;
    let (z, x, y) = (index(pair, "z")?, index(pair, "x")?, index(pair, "y")?);
    ensure(z == x + 2 && z == y + 2, || format!("pair: z={z} x={x} y={y}"))?;

    let exp = record(&d.records, "exp")?;
    let u = exp.eigen_index.ok_or("exp: no eigen index")?;
    let m = index(exp, "m")?;
    ensure(u + 1 == m, || format!("exp: u={u} m={m}"))?;

    let add = record(&d.records, "addition")?;
    let [u, v, z, x, y] = ["u", "v", "z", "x", "y"].map(|s| index(add, s));
    let (u, v, z, x, y) = (u?, v?, z?, x?, y?);
    ensure(u == z && v == z && x == z + 1 && y == z + 1, || {
        format!("addition: u={u} v={v} z={z} x={x} y={y}")
    })?;

    for r in &n.records {
        let s = r.result.as_ref().ok_or_else(|| format!("{}: no result", r.name))?;
        ensure(s.verdict == Verdict::Unstratified && s.verify(), || format!("{}: {}", r.name, s.detail()))?;
        ensure(matches!(s.conflict_offset(), Some(o) if o != 0), || format!("{}: zero net offset", r.name))?;
    }
    let t = within(start, CORPUS_LIMIT)?;
    Ok(format!("{} definitions, {} negatives in {t:.2?}", d.total, n.total))
}

fn criterion_brute_force() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(BRUTE_SEED);
    let mut formulas: Vec<Formula> = Vec::new();
    while formulas.len() < BRUTE_COUNT {
        let f = brute::small_formula(&mut rng, 3);
        if brute::index_nodes(&f) <= 6 {
            formulas.push(f);
        }
    }
    let mut unstratified = 0;
    for f in &formulas {
        let got = stratify(f).verdict == Verdict::Stratified;
        ensure(got == brute::brute_stratified(f), || format!("strat disagrees on {f}"))?;
        unstratified += usize::from(!got);
        for eigen in ["x", "y"] {
            let got = stratify_wrt(f, eigen).verdict != Verdict::Unstratified;
            ensure(got == brute::brute_stratified_wrt(f, eigen), || format!("wrt {eigen} disagrees on {f}"))?;
        }
    }
    ensure(unstratified > 0 && unstratified < BRUTE_COUNT, || "only one verdict exercised".into())?;
    let t = within(start, BRUTE_LIMIT)?;
    Ok(format!("{BRUTE_COUNT} formulas agree ({unstratified} unstratified) in {t:.2?}"))
}

fn universe(n: usize) -> Universe {
    Universe::new(n, 2, DEFAULT_BUDGET).unwrap()
}

fn criterion_catalog() -> Outcome {
    let start = Instant::now();
    let u = universe(3);
    let opts = RunOptions {
        jobs: Some(1),
        ..RunOptions::default()
    };
    let r = run_catalog(&u, "*", &opts).map_err(|e| e.to_string())?;
    ensure(r.summary.fail == 0 && r.summary.skip == 0, || {
        let bad: Vec<&str> = r.checks.iter().filter(|c| !c.status.label().starts_with("pass")).map(|c| c.id).collect();
        format!("fail={} skip={}: {bad:?}", r.summary.fail, r.summary.skip)
    })?;
    for id in REQUIRED {
        let c = r.checks.iter().find(|c| c.id == *id).ok_or_else(|| format!("{id} missing"))?;
        ensure(c.status == Status::Pass, || format!("{id}: {}", c.status.label()))?;
    }
    let t = within(start, CATALOG_LIMIT)?;
    Ok(format!("{} checks pass at n=3 in {t:.2?}", r.summary.pass))
}

fn criterion_overflow_and_oracle() -> Outcome {
    let u = universe(3);
    let a = Arith::new(&u);
    let num = |k| a.numeral(2, k).unwrap();
    let lambda = u.empty(2).unwrap();
    let (two, three) = (num(2), num(3));
    let add22 = a.add(&two, &two).map_err(|e| e.to_string())?;
    ensure(add22 == lambda, || "2+2 is not Λ at n=3".into())?;
    ensure(a.succ(&three).unwrap() == lambda, || "succ(3) is not Λ".into())?;
    ensure(a.mul(&two, &two).unwrap() == lambda, || "2·2 is not Λ".into())?;
    ensure(a.add(&three, &three).unwrap() == add22, || "3+3 differs from 2+2".into())?;

    let mut compared = 0;
    for n in 0..=3 {
        let u = universe(n);
        let a = Arith::new(&u);
        let o = Oracle::new(u.level_sizes());
        for c in 2..=u.max_set_level() {
            let f = a.frege(c).unwrap();
            let size = |k: &SetVal| a.sym_size(k).unwrap().size;
            for x in f {
                ensure(size(&a.succ(x).unwrap()) == o.succ(c, size(x)), || format!("succ n={n} c={c}"))?;
                for y in f {
                    let (sx, sy) = (size(x), size(y));
                    ensure(size(&a.add(x, y).unwrap()) == o.add(c, sx, sy), || format!("add n={n} c={c}"))?;
                    ensure(size(&a.mul(x, y).unwrap()) == o.mul(c, sx, sy), || format!("mul n={n} c={c}"))?;
                    compared += 1;
                }
            }
        }
    }
    let r = run_catalog(&u, "oracle:*", &RunOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.checks.iter().all(|c| c.origin == Origin::Oracle), || "non-oracle check selected".into())?;
    ensure(!r.checks.is_empty() && !r.has_failures() && r.summary.skip == 0, || {
        format!("oracle checks: {:?}", r.summary)
    })?;
    Ok(format!("Λ overflow holds; {compared} pairs and {} oracle checks agree", r.checks.len()))
}

/// Plain-integer model of relations on a set of atoms: one-to-one and onto
/// coincide for functions from a finite set to itself.
fn criterion_dedekind() -> Outcome {
    let start = Instant::now();
    let u = universe(3);
    let r = run_catalog(&u, "theorem:dedekind1,theorem:dedekind2", &RunOptions::default())
        .map_err(|e| e.to_string())?;
    ensure(r.checks.len() == 2 && r.checks.iter().all(|c| c.status == Status::Pass), || {
        format!("{:?}", r.checks.iter().map(|c| (c.id, c.status.label())).collect::<Vec<_>>())
    })?;
    let mut functions = 0;
    for n in 0..=3usize {
        let u = universe(n);
        for xmask in 0..1usize << n {
            let xs: Vec<usize> = (0..n).filter(|a| xmask >> a & 1 == 1).collect();
            let pairs: Vec<(usize, usize)> = xs.iter().flat_map(|&a| xs.iter().map(move |&b| (a, b))).collect();
            let xset = u.elem(1, xmask);
            for rel in 0..1u32 << pairs.len() {
                let f: Vec<(usize, usize)> =
                    (0..pairs.len()).filter(|i| rel >> i & 1 == 1).map(|i| pairs[i]).collect();
                let image = |a: usize| f.iter().filter(|p| p.0 == a).map(|p| p.1).collect::<Vec<_>>();
                let is_fn = xs.iter().all(|&a| image(a).len() == 1);
                let view = FuncView::from_pairs(0, f.clone());
                ensure(view.maps(&xset, &xset) == is_fn, || format!("maps disagrees on {f:?}"))?;
                if !is_fn {
                    continue;
                }
                functions += 1;
                let mut hit: Vec<usize> = f.iter().map(|p| p.1).collect();
                hit.sort_unstable();
                hit.dedup();
                let one_one = hit.len() == xs.len();
                let onto = xs.iter().all(|b| hit.contains(b));
                ensure(one_one == onto, || format!("counterexample {f:?}"))?;
                ensure(view.is_one_one(&xset, &xset) == one_one, || format!("is_one_one on {f:?}"))?;
                ensure(view.is_onto(&xset, &xset) == onto, || format!("is_onto on {f:?}"))?;
            }
            let inf = u.is_dedekind_infinite(&xset).map_err(|e| e.to_string())?;
            ensure(!inf, || format!("{xmask:#b} reported Dedekind-infinite"))?;
        }
    }
    let t = within(start, DEDEKIND_LIMIT)?;
    Ok(format!("dedekind1/2 pass; {functions} self-maps checked in {t:.2?}"))
}

/// For every A ∈ U₁, SSC(USC(A)) and USC(SSC(A)) are similar via the map
/// sending a set of unit classes {{a}, ...} to the unit class of {a, ...}.
fn criterion_ssc_usc() -> Outcome {
    let mut sets = 0;
    for n in 0..=3 {
        let u = universe(n);
        for a in u.elements(1).collect::<Vec<_>>() {
            let left = u.ssc(&u.usc(&a).unwrap()).unwrap();
            let right = u.usc(&u.ssc(&a).unwrap()).unwrap();
            let want = 1usize << a.len();
            ensure(left.len() == want && right.len() == want, || {
                format!("n={n} A={}: sizes {} {}", a.len(), left.len(), right.len())
            })?;
            let g = FuncView::from_fn(&left, |y| {
                let s = (0..usize::BITS as usize).filter(|k| y >> k & 1 == 1).fold(0, |acc, k| acc | k);
                1 << s
            });
            ensure(g.is_function() && g.is_similarity(&left, &right), || format!("n={n}: map is not a similarity"))?;
            sets += 1;
        }
        let r = run_catalog(&u, "lemma:sscusc", &RunOptions::default()).map_err(|e| e.to_string())?;
        ensure(r.checks.iter().all(|c| c.status.label().starts_with("pass")) && !r.checks.is_empty(), || {
            format!("lemma:sscusc at n={n}: {:?}", r.summary)
        })?;
    }
    Ok(format!("{sets} sets, sizes 2^|A|, similarity witnessed"))
}

fn criterion_determinism() -> Outcome {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_nf-forge"))
            .args(["check", "--n", "3", "--format", "json"])
            .env("NF_FORGE_JOBS", jobs)
            .output()
            .unwrap()
    };
    let a = run("1");
    let b = run("4");
    ensure(a.status.success() && b.status.success(), || "check exited nonzero".into())?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    Ok(format!("{} bytes identical across job counts", a.stdout.len()))
}

fn criterion_mutations() -> Outcome {
    let u = universe(3);
    let mut parts = Vec::new();
    for (name, m) in [
        ("add_no_disjoint", Mutations { add_no_disjoint: true, ..Default::default() }),
        ("frege_no_inhabited_guard", Mutations { frege_no_inhabited_guard: true, ..Default::default() }),
    ] {
        let opts = RunOptions { mutations: m, ..RunOptions::default() };
        let r = run_catalog(&u, "*", &opts).map_err(|e| e.to_string())?;
        ensure(r.summary.fail >= 1, || format!("{name}: nothing failed"))?;
        for c in &r.checks {
            if let Status::Fail { witness } = &c.status {
                let under = recheck(c.id, &u, m, witness);
                ensure(matches!(under, Ok(Eval::Violated(_))), || format!("{name} {}: {under:?} under mutation", c.id))?;
                let real = recheck(c.id, &u, Mutations::default(), witness);
                ensure(!matches!(real, Ok(Eval::Violated(_))), || format!("{name} {}: fails without mutation", c.id))?;
            }
        }
        parts.push(format!("{name} fails {}", r.summary.fail));
    }
    Ok(parts.join(", "))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("corpora and index relations", criterion_corpora),
        ("solver against brute force", criterion_brute_force),
        ("catalog at n=3", criterion_catalog),
        ("overflow and size oracle", criterion_overflow_and_oracle),
        ("finite self-maps", criterion_dedekind),
        ("SSC/USC similarity", criterion_ssc_usc),
        ("deterministic output", criterion_determinism),
        ("mutations detected", criterion_mutations),
    ];
    let mut err = std::io::stderr();
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => writeln!(err, "criterion {} PASS {name}: {msg}", i + 1).unwrap(),
            Err(msg) => {
                writeln!(err, "criterion {} FAIL {name}: {msg}", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
