//! The lemma catalog. Each entry names its quantifier ranges and the
//! hypotheses it filters on; the body evaluates one instance.
//!
//! Base levels: cardinal statements use the cardinal level, set statements
//! use the level of their main set variable, element statements the level
//! of the element.

use super::{mask, obj, set, Check, Ctx, Eval, Form, Origin, Range};
use crate::cardinal::{SymSize};
use crate::error::Result;
use crate::formula::parse_term;
use crate::stratify::{check_comprehension, Verdict};
use crate::universe::ops::{decode_opair_index, opair_index};
use crate::universe::{FuncView, Obj, SetVal};
use std::sync::OnceLock;

use Range::*;

/// Ids deliberately left unchecked: their content is about intuitionistic
/// logic and collapses in a classical finite model.
pub const OUT_OF_SCOPE: &[&str] = &[
    "lemma:finiteDNS",
    "lemma:markov",
    "lemma:notnotseparable",
    "lemma:union2",
    "lemma:boundedDNS",
];

const CARD: &[usize] = &[2, 3];
const C2: &[usize] = &[2];
const C3: &[usize] = &[3];
const SETS: &[usize] = &[1, 2];
const S1: &[usize] = &[1];
const S2: &[usize] = &[2];
const ELEMS: &[usize] = &[0, 1, 2];
const NOLEVEL: &[usize] = &[0];

type R = Result<Eval>;

macro_rules! hyp {
    ($i:expr, $cond:expr) => {
        if !($cond) {
            return Ok(Eval::Filtered($i));
        }
    };
}

fn ok(cond: bool, what: &str) -> R {
    Ok(if cond {
        Eval::Holds
    } else {
        Eval::Violated(what.to_string())
    })
}

fn check(
    id: &'static str,
    anchor: &'static str,
    levels: &'static [usize],
    vars: &'static [(&'static str, Range)],
    hyps: &'static [&'static str],
    body: super::Body,
) -> Check {
    Check {
        id,
        anchor,
        origin: Origin::Statement,
        form: Form::Exact,
        levels,
        vars,
        hyps,
        aux: None,
        body,
    }
}

impl Check {
    fn reduced(mut self) -> Check {
        self.form = Form::Reduced;
        self
    }

    fn syntactic(mut self) -> Check {
        self.form = Form::Syntactic;
        self
    }

    fn oracle(mut self) -> Check {
        self.origin = Origin::Oracle;
        self
    }

    fn aux(mut self, n: usize, l: usize) -> Check {
        self.aux = Some((n, l));
        self
    }
}

// ---- small set helpers ----

fn with(s: &SetVal, k: usize) -> SetVal {
    let mut t = s.clone();
    t.insert(k);
    t
}

fn without(s: &SetVal, k: usize) -> SetVal {
    let mut t = s.clone();
    t.remove(k);
    t
}

fn union(a: &SetVal, b: &SetVal) -> SetVal {
    a.union(b).expect("same level")
}

fn minus(a: &SetVal, b: &SetVal) -> SetVal {
    a.diff(b).expect("same level")
}

/// `a ⊆ b ∧ b = a ∪ (b − a)`.
fn separable(a: &SetVal, b: &SetVal) -> bool {
    a.is_subset(b) && *b == union(a, &minus(b, a))
}

fn sim(a: &SetVal, b: &SetVal) -> bool {
    FuncView::bijection(a, b).is_some()
}

fn unit(s: &SetVal) -> bool {
    s.len() == 1
}

fn idx(c: &Ctx, o: &Obj) -> Result<usize> {
    c.u.index_of(o)
}

fn sv(s: SetVal) -> Obj {
    Obj::Set(s)
}

/// Composition `g ∘ f` of pair-list relations.
fn compose(f: &FuncView, g: &FuncView) -> FuncView {
    let pairs = f
        .pairs
        .iter()
        .flat_map(|&(x, y)| g.partners(y).map(move |z| (x, z)))
        .collect();
    FuncView::from_pairs(f.comp_level, pairs)
}

fn inverse(f: &FuncView) -> FuncView {
    FuncView::from_pairs(f.comp_level, f.pairs.iter().map(|&(x, y)| (y, x)).collect())
}

fn restrict(f: &FuncView, x: &SetVal) -> FuncView {
    FuncView::from_pairs(
        f.comp_level,
        f.pairs.iter().copied().filter(|(a, _)| x.contains(*a)).collect(),
    )
}

// ---- cardinal helpers ----

fn zero(c: &Ctx) -> Result<SetVal> {
    c.a.zero(c.base)
}

fn n(c: &Ctx, k: usize) -> Result<SetVal> {
    c.num(c.base, k)
}

fn n_at(c: &Ctx, level: usize, k: usize) -> Result<SetVal> {
    c.num(level, k)
}

fn succ(c: &Ctx, x: &SetVal) -> Result<SetVal> {
    let l = x.level();
    if l <= c.u.max_enum_level() {
        if let Some(i) = x.index() {
            return Ok(c.u.elem(l, c.a.succ_idx(l, i)?));
        }
    }
    c.a.succ(x)
}

fn add(c: &Ctx, x: &SetVal, y: &SetVal) -> Result<SetVal> {
    let l = x.level();
    if l == y.level() && l <= c.u.max_enum_level() {
        if let (Some(i), Some(j)) = (x.index(), y.index()) {
            return Ok(c.u.elem(l, c.a.add_idx(l, i, j)?));
        }
    }
    c.a.add(x, y)
}

fn mul(c: &Ctx, x: &SetVal, y: &SetVal) -> Result<SetVal> {
    c.a.mul(x, y)
}

fn le(c: &Ctx, x: &SetVal, y: &SetVal) -> Result<bool> {
    c.a.le(x, y)
}

fn lt(c: &Ctx, x: &SetVal, y: &SetVal) -> Result<bool> {
    c.a.lt(x, y)
}

fn in_f(c: &Ctx, x: &SetVal) -> bool {
    c.a.in_frege(x)
}

fn in_sf(c: &Ctx, x: &SetVal) -> bool {
    c.a.in_semifinite(x)
}

fn inh(x: &SetVal) -> bool {
    !x.is_empty()
}

fn t(c: &Ctx, x: &SetVal) -> Result<SetVal> {
    c.a.t_op(x)
}

fn exp(c: &Ctx, x: &SetVal) -> Result<SetVal> {
    c.a.exp2(x)
}

fn nc(c: &Ctx, x: &SetVal) -> Result<SetVal> {
    c.a.nc(x)
}

fn in_g(c: &Ctx, x: &SetVal, y: &SetVal, z: &SetVal) -> Result<bool> {
    Ok(c.a.mul_graph(x.level())?.contains(x, y, z))
}

/// `∀z ∈ SF (<x,y,z> ∈ 𝔾 ↔ z = w)`.
fn graph_single_valued(c: &Ctx, x: &SetVal, y: &SetVal, w: &SetVal) -> Result<bool> {
    for z in c.a.semifinite(x.level())? {
        if in_g(c, x, y, z)? != (z == w) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn frege_any(c: &Ctx, level: usize, mut p: impl FnMut(&SetVal) -> Result<bool>) -> Result<bool> {
    for r in c.a.frege(level)? {
        if p(r)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Level-1 sets of the form `{x}` for the element `x` given by index.
fn singleton_idx(k: usize) -> usize {
    1usize << k
}

fn stratifies(src: &str) -> R {
    let term = parse_term(src).map_err(|e| crate::error::Error::Eval(e.to_string()))?;
    match check_comprehension(&term) {
        Some(r) if r.verdict == Verdict::Stratified => ok(true, ""),
        Some(r) => ok(false, &format!("verdict {:?}", r.verdict)),
        None => ok(false, "not a comprehension term"),
    }
}

/// The catalog, built once.
pub fn catalog() -> &'static [Check] {
    static CATALOG: OnceLock<Vec<Check>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn find(id: &str) -> Option<&'static Check> {
    catalog().iter().find(|c| c.id == id)
}

fn build() -> Vec<Check> {
    let mut v = Vec::new();
    pairs_and_functions(&mut v);
    finite_sets(&mut v);
    frege_cardinals(&mut v);
    order(&mut v);
    unit_subclasses(&mut v);
    exponentiation(&mut v);
    addition(&mut v);
    multiplication(&mut v);
    t_operator(&mut v);
    products(&mut v);
    one_to_one(&mut v);
    segments(&mut v);
    oracles(&mut v);
    v
}

fn pairs_and_functions(v: &mut Vec<Check>) {
    v.push(check(
        "lemma:ordered_pair_equality",
        "<x,y> = <a,b> <-> x = a & y = b",
        &[0, 1],
        &[("x", Elems(0)), ("y", Elems(0)), ("a", Elems(0)), ("b", Elems(0))],
        &[],
        |c, v| {
            let (x, y, a, b) = (obj(v, 0), obj(v, 1), obj(v, 2), obj(v, 3));
            let eq = c.u.mk_opair(x, y)? == c.u.mk_opair(a, b)?;
            ok(eq == (x == a && y == b), "pair equality disagrees with componentwise equality")
        },
    ));
    v.push(check(
        "lemma:singleton1",
        "u in {x} <-> u = x",
        ELEMS,
        &[("x", Elems(0)), ("u", Elems(0))],
        &[],
        |c, v| {
            let s = c.u.mk_singleton(obj(v, 0))?;
            ok(s.contains(idx(c, obj(v, 1))?) == (v[0] == v[1]), "membership in {x}")
        },
    ));
    v.push(check(
        "lemma:single_oneone",
        "{x} = {y} <-> x = y",
        ELEMS,
        &[("x", Elems(0)), ("y", Elems(0))],
        &[],
        |c, v| {
            let eq = c.u.mk_singleton(obj(v, 0))? == c.u.mk_singleton(obj(v, 1))?;
            ok(eq == (v[0] == v[1]), "singleton injectivity")
        },
    ));
    v.push(
        check(
            "lemma:Ap",
            "f function & <x,y> in f -> y = Ap(f,x)",
            S1,
            &[("D", Elems(1)), ("f", Rel(0, 0))],
            &["f is a function"],
            |c, v| {
                let f = set(v, 1);
                let view = FuncView::from_setval(f);
                hyp!(0, view.is_function());
                for &(x, y) in &view.pairs {
                    let ap = c.u.ap(f, &c.u.obj(c.base, x))?;
                    if sv(ap) != c.u.obj(c.base, y) {
                        return ok(false, &format!("Ap differs at pair ({x},{y})"));
                    }
                }
                ok(true, "")
            },
        )
        .aux(2, 3),
    );
    v.push(check(
        "lemma:finverse",
        "f: X -> Y one-to-one and onto -> f^-1: Y -> X one-to-one and onto",
        S1,
        &[("X", Elems(0)), ("Y", Elems(0)), ("f", Rel(0, 1))],
        &["f is a function", "f: X -> Y", "one-to-one", "onto"],
        |_, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            let f = FuncView::from_setval(set(v, 2));
            hyp!(0, f.is_function());
            hyp!(1, f.maps(x, y));
            hyp!(2, f.is_one_one(x, y));
            hyp!(3, f.is_onto(x, y));
            let g = inverse(&f);
            ok(
                g.is_function() && g.maps(y, x) && g.is_one_one(y, x) && g.is_onto(y, x),
                "inverse is not a similarity",
            )
        },
    ));
    v.push(check(
        "lemma:sim",
        "~ is reflexive, symmetric and transitive",
        S1,
        &[("x", Elems(0)), ("y", Elems(0)), ("z", Elems(0))],
        &[],
        |_, v| {
            let (x, y, z) = (set(v, 0), set(v, 1), set(v, 2));
            if !sim(x, x) {
                return ok(false, "not reflexive");
            }
            if let Some(f) = FuncView::bijection(x, y) {
                if !inverse(&f).is_similarity(y, x) {
                    return ok(false, "inverse witness fails");
                }
                if let Some(g) = FuncView::bijection(y, z) {
                    return ok(compose(&f, &g).is_similarity(x, z), "composite witness fails");
                }
            }
            ok(true, "")
        },
    ));
    v.push(check(
        "lemma:similar_to_empty2",
        "x ~ Lambda <-> x = Lambda",
        SETS,
        &[("x", Elems(0))],
        &[],
        |c, v| {
            let x = set(v, 0);
            ok(sim(x, &c.u.empty(c.base)?) == x.is_empty(), "similarity to Lambda")
        },
    ));
}

fn finite_sets(v: &mut Vec<Check>) {
    v.push(check(
        "lemma:finitedecidable",
        "FINITE subset DECIDABLE",
        SETS,
        &[("x", Elems(0))],
        &["x finite"],
        |c, v| {
            hyp!(0, c.u.is_finite(set(v, 0)));
            ok(c.u.has_dec_eq(set(v, 0)), "finite set without decidable equality")
        },
    ));
    v.push(check(
        "lemma:empty_or_inhabited",
        "x in FINITE -> x = Lambda | exists u. u in x",
        SETS,
        &[("x", Elems(0))],
        &["x finite"],
        |c, v| {
            let x = set(v, 0);
            hyp!(0, c.u.is_finite(x));
            ok(x.is_empty() || x.members().next().is_some(), "neither empty nor inhabited")
        },
    ));
    v.push(check(
        "lemma:lambda_finite",
        "Lambda in FINITE",
        &[1, 2, 3],
        &[],
        &[],
        |c, _| ok(c.u.is_finite(&c.u.empty(c.base)?), "Lambda not finite"),
    ));
    v.push(check(
        "lemma:finite_adjoin",
        "x in FINITE & c notin x -> x u {c} in FINITE",
        SETS,
        &[("x", Elems(0)), ("c", Elems(-1))],
        &["x finite", "c not in x"],
        |cx, v| {
            let x = set(v, 0);
            let k = idx(cx, obj(v, 1))?;
            hyp!(0, cx.u.is_finite(x));
            hyp!(1, !x.contains(k));
            ok(cx.u.is_finite(&with(x, k)), "adjunction left FINITE")
        },
    ));
    v.push(check(
        "lemma:finite_structure",
        "z in FINITE -> z = Lambda | exists x in FINITE, c notin x. z = x u {c}",
        SETS,
        &[("z", Elems(0))],
        &["z finite"],
        |c, v| {
            let z = set(v, 0);
            hyp!(0, c.u.is_finite(z));
            let found = z.is_empty() || z.members().any(|k| c.u.is_finite(&without(z, k)));
            ok(found, "no decomposition")
        },
    ));
    v.push(check(
        "lemma:singletons_finite",
        "{x} in FINITE",
        ELEMS,
        &[("x", Elems(0))],
        &[],
        |c, v| ok(c.u.is_finite(&c.u.mk_singleton(obj(v, 0))?), "singleton not finite"),
    ));
    v.push(check(
        "lemma:uscfinite",
        "USC(x) in FINITE <-> x in FINITE",
        SETS,
        &[("x", Elems(0))],
        &[],
        |c, v| {
            let x = set(v, 0);
            ok(c.u.is_finite(&c.u.usc(x)?) == c.u.is_finite(x), "finiteness of USC")
        },
    ));
    v.push(check(
        "lemma:union",
        "x, y in FINITE & x n y = Lambda -> x u y in FINITE",
        SETS,
        &[("x", Elems(0)), ("y", Elems(0))],
        &["x finite", "y finite", "disjoint"],
        |c, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            hyp!(0, c.u.is_finite(x));
            hyp!(1, c.u.is_finite(y));
            hyp!(2, x.is_disjoint(y));
            ok(c.u.is_finite(&union(x, y)), "union not finite")
        },
    ));
    v.push(check(
        "lemma:similar_decidable",
        "x in DECIDABLE & x ~ y -> y in DECIDABLE",
        SETS,
        &[("x", Elems(0)), ("y", Elems(0))],
        &["x decidable", "x ~ y"],
        |c, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            hyp!(0, c.u.has_dec_eq(x));
            hyp!(1, sim(x, y));
            ok(c.u.has_dec_eq(y), "y not decidable")
        },
    ));
    v.push(check(
        "lemma:similarityrestricted",
        "f: z u {c} -> y similarity & c notin z -> f|z: z -> y - {f(c)} similarity",
        S1,
        &[("w", Elems(0)), ("y", Elems(0)), ("c", Members(0)), ("f", Rel(0, 1))],
        &["f: w -> y similarity"],
        |c, v| {
            let (w, y) = (set(v, 0), set(v, 1));
            let k = idx(c, obj(v, 2))?;
            let f = FuncView::from_setval(set(v, 3));
            hyp!(0, f.is_function() && f.is_similarity(w, y));
            let z = without(w, k);
            let fc = f.partners(k).next().expect("c is in the domain");
            let g = restrict(&f, &z);
            ok(g.is_similarity(&z, &without(y, fc)), "restriction is not a similarity")
        },
    ));
    for id in ["lemma:finitesimilar", "lemma:similar_to_finite"] {
        v.push(check(
            id,
            "x ~ y & y in FINITE -> x in FINITE",
            SETS,
            &[("x", Elems(0)), ("y", Elems(0))],
            &["y finite", "x ~ y"],
            |c, v| {
                let (x, y) = (set(v, 0), set(v, 1));
                hyp!(0, c.u.is_finite(y));
                hyp!(1, sim(x, y));
                ok(c.u.is_finite(x), "x not finite")
            },
        ));
    }
    v.push(check(
        "lemma:finitepowerset",
        "x in FINITE -> SSC(x) in FINITE",
        SETS,
        &[("x", Elems(0))],
        &["x finite"],
        |c, v| {
            let x = set(v, 0);
            hyp!(0, c.u.is_finite(x));
            ok(c.u.is_finite(&c.u.ssc(x)?), "SSC(x) not finite")
        },
    ));
    v.push(check(
        "lemma:finiteseparable",
        "a, b in FINITE & a subset b -> b = a u (b - a)",
        SETS,
        &[("b", Elems(0)), ("a", Subsets(0))],
        &["b finite", "a finite"],
        |c, v| {
            let (b, a) = (set(v, 0), set(v, 1));
            hyp!(0, c.u.is_finite(b));
            hyp!(1, c.u.is_finite(a));
            ok(separable(a, b), "finite subset not separable")
        },
    ));
    v.push(check(
        "lemma:separablefinite",
        "b in FINITE & a separable subset of b -> a in FINITE",
        SETS,
        &[("b", Elems(0)), ("a", Subsets(0))],
        &["b finite", "a separable in b"],
        |c, v| {
            let (b, a) = (set(v, 0), set(v, 1));
            hyp!(0, c.u.is_finite(b));
            hyp!(1, separable(a, b));
            ok(c.u.is_finite(a), "separable subset not finite")
        },
    ));
    v.push(check(
        "lemma:finitedif",
        "a, b in FINITE & b subset a -> a - b in FINITE",
        SETS,
        &[("a", Elems(0)), ("b", Subsets(0))],
        &["a finite", "b finite"],
        |c, v| {
            let (a, b) = (set(v, 0), set(v, 1));
            hyp!(0, c.u.is_finite(a));
            hyp!(1, c.u.is_finite(b));
            ok(c.u.is_finite(&minus(a, b)), "difference not finite")
        },
    ));
    v.push(check(
        "lemma:boundedquantification",
        "X decidable, R separable on X, B finite subset X -> {z in X : exists u in B. <u,z> in R} separable in X",
        S1,
        &[("X", Elems(0)), ("B", Subsets(0)), ("R", Rel(0, 0))],
        &["X decidable", "B finite"],
        |c, v| {
            let (x, b) = (set(v, 0), set(v, 1));
            let r = FuncView::from_setval(set(v, 2));
            hyp!(0, c.u.has_dec_eq(x));
            hyp!(1, c.u.is_finite(b));
            let y = c.u.set_of(
                x.level(),
                x.members().filter(|&z| b.members().any(|u| r.contains(u, z))),
            )?;
            ok(separable(&y, x), "defined subset not separable")
        },
    ));
    v.push(check(
        "lemma:swap_similarity",
        "b in U, c notin U, Y = (U - {b}) u {c} -> U ~ Y",
        SETS,
        &[("U", Elems(0)), ("b", Members(0)), ("c", Elems(-1))],
        &["c not in U"],
        |cx, v| {
            let u = set(v, 0);
            let (b, k) = (idx(cx, obj(v, 1))?, idx(cx, obj(v, 2))?);
            hyp!(0, !u.contains(k));
            let y = with(&without(u, b), k);
            let f = FuncView::from_fn(u, |m| if m == b { k } else { m });
            ok(f.is_similarity(u, &y), "swap map is not a similarity")
        },
    ));
    v.push(check(
        "theorem:infiniteimpliesnotfinite",
        "X ~ Y & Y subset X & Y != X -> X notin FINITE",
        SETS,
        &[("X", Elems(0))],
        &["X Dedekind infinite"],
        |c, v| {
            let x = set(v, 0);
            hyp!(0, c.u.is_dedekind_infinite(x)?);
            ok(!c.u.is_finite(x), "Dedekind-infinite set is finite")
        },
    ));
    v.push(check(
        "lemma:finiteunion",
        "x in FINITE, members finite and pairwise disjoint -> Union x in FINITE",
        S2,
        &[("x", Elems(0))],
        &["x finite", "members finite", "members pairwise disjoint"],
        |c, v| {
            let x = set(v, 0);
            hyp!(0, c.u.is_finite(x));
            let ms: Vec<SetVal> = x.members().map(|m| c.u.elem(x.level() - 1, m)).collect();
            hyp!(1, ms.iter().all(|m| c.u.is_finite(m)));
            hyp!(
                2,
                ms.iter()
                    .enumerate()
                    .all(|(i, a)| ms[i + 1..].iter().all(|b| a.is_disjoint(b)))
            );
            ok(c.u.is_finite(&c.u.bigunion(x)?), "union not finite")
        },
    ));
    v.push(check(
        "lemma:ssc_adjoin",
        "c notin x -> SSC(x) subset SSC(x u {c})",
        SETS,
        &[("x", Elems(0)), ("c", Elems(-1))],
        &["c not in x"],
        |cx, v| {
            let x = set(v, 0);
            let k = idx(cx, obj(v, 1))?;
            hyp!(0, !x.contains(k));
            ok(cx.u.ssc(x)?.is_subset(&cx.u.ssc(&with(x, k))?), "SSC not monotone")
        },
    ));
    v.push(check(
        "lemma:intersectionseparable",
        "x, y separable in A -> x n y, x u y separable in A",
        SETS,
        &[("A", Elems(0)), ("x", Subsets(0)), ("y", Subsets(0))],
        &["x separable in A", "y separable in A"],
        |_, v| {
            let (a, x, y) = (set(v, 0), set(v, 1), set(v, 2));
            hyp!(0, separable(x, a));
            hyp!(1, separable(y, a));
            ok(
                separable(&x.inter(y)?, a) && separable(&union(x, y), a),
                "intersection or union not separable",
            )
        },
    ));
}

fn frege_cardinals(v: &mut Vec<Check>) {
    v.push(check(
        "lemma:finitecardinals1",
        "k in F & x in k -> x in FINITE",
        CARD,
        &[("k", Frege(0)), ("x", Members(0))],
        &[],
        |c, v| ok(c.u.is_finite(set(v, 1)), "member not finite"),
    ));
    v.push(check(
        "lemma:induction",
        "P(zero) & (P(x) & x+ inhabited -> P(x+)) -> forall x in F. P(x)",
        CARD,
        &[("P", SemiMasks(0))],
        &["zero in P", "P closed under inhabited successor"],
        |c, v| {
            let p = mask(v, 0);
            let sf = c.a.semifinite(c.base)?;
            let pos = |x: &SetVal| sf.iter().position(|s| s == x);
            let holds = |x: &SetVal| pos(x).is_some_and(|i| p >> i & 1 == 1);
            hyp!(0, holds(&zero(c)?));
            for x in c.a.frege(c.base)? {
                let s = succ(c, x)?;
                hyp!(1, !(holds(x) && inh(&s)) || holds(&s));
            }
            for x in c.a.frege(c.base)? {
                if !holds(x) {
                    return ok(false, "inductive predicate misses a member of F");
                }
            }
            ok(true, "")
        },
    ));
    for id in ["lemma:cardinalsinhabited", "lemma:Finhabited"] {
        v.push(check(
            id,
            "k in F -> exists u. u in k",
            CARD,
            &[("k", Frege(0))],
            &[],
            |_, v| ok(inh(set(v, 0)), "empty finite cardinal"),
        ));
    }
    v.push(check(
        "lemma:finitecardinals0",
        "k in F & x in k & x ~ y -> y in k",
        CARD,
        &[("k", Frege(0)), ("x", Members(0)), ("y", Elems(-1))],
        &["x ~ y"],
        |c, v| {
            let (k, x, y) = (set(v, 0), set(v, 1), set(v, 2));
            hyp!(0, sim(x, y));
            ok(k.contains(idx(c, obj(v, 2))?), "similar set outside the cardinal")
        },
    ));
    v.push(check(
        "lemma:finitecardinals2",
        "k in F & x, y in k -> x ~ y",
        CARD,
        &[("k", Frege(0)), ("x", Members(0)), ("y", Members(0))],
        &[],
        |_, v| ok(sim(set(v, 1), set(v, 2)), "members not similar"),
    ));
    v.push(check(
        "lemma:xinNcx",
        "x in Nc(x)",
        CARD,
        &[("x", Elems(-1))],
        &[],
        |c, v| ok(nc(c, set(v, 0))?.contains(idx(c, obj(v, 0))?), "x notin Nc(x)"),
    ));
    v.push(check(
        "lemma:cardinalequality",
        "Nc(x) = Nc(y) <-> x ~ y",
        CARD,
        &[("x", Elems(-1)), ("y", Elems(-1))],
        &[],
        |c, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            ok((nc(c, x)? == nc(c, y)?) == sim(x, y), "Nc equality disagrees with ~")
        },
    ));
    v.push(check(
        "lemma:Ncsuccessor",
        "c notin x -> Nc(x u {c}) = Nc(x)+",
        CARD,
        &[("x", Elems(-1)), ("c", Elems(-2))],
        &["c not in x"],
        |cx, v| {
            let x = set(v, 0);
            let k = idx(cx, obj(v, 1))?;
            hyp!(0, !x.contains(k));
            ok(nc(cx, &with(x, k))? == succ(cx, &nc(cx, x)?)?, "Nc of adjunction")
        },
    ));
    v.push(check(
        "lemma:Nc_empty",
        "Nc(Lambda) = zero",
        CARD,
        &[],
        &[],
        |c, _| ok(nc(c, &c.u.empty(c.base - 1)?)? == zero(c)?, "Nc(Lambda) != zero"),
    ));
    v.push(check(
        "lemma:successorinhabited",
        "k+ inhabited -> k+ has an inhabited member and all members inhabited",
        C2,
        &[("k", Elems(0))],
        &["k+ inhabited"],
        |c, v| {
            let s = succ(c, set(v, 0))?;
            hyp!(0, inh(&s));
            let has_empty = s.contains(0);
            ok(!has_empty, "successor contains Lambda")
        },
    ));
    v.push(check(
        "lemma:Fregesuccessoromits0",
        "x+ != zero",
        C2,
        &[("x", Elems(0))],
        &[],
        |c, v| ok(succ(c, set(v, 0))? != zero(c)?, "successor equals zero"),
    ));
    v.push(check(
        "lemma:nonzeroissuccessor",
        "k in F & k != zero -> exists m. m+ = k",
        CARD,
        &[("k", Frege(0))],
        &["k != zero"],
        |c, v| {
            let k = set(v, 0);
            hyp!(0, *k != zero(c)?);
            for m in c.a.semifinite(c.base)? {
                if succ(c, m)? == *k {
                    return ok(true, "");
                }
            }
            ok(false, "no predecessor")
        },
    ));
    v.push(check(
        "lemma:zeroF",
        "zero in F",
        CARD,
        &[],
        &[],
        |c, _| ok(in_f(c, &zero(c)?), "zero notin F"),
    ));
    v.push(check(
        "lemma:successorF",
        "k in F & k+ inhabited -> k+ in F",
        CARD,
        &[("k", Frege(0))],
        &["k+ inhabited"],
        |c, v| {
            let s = succ(c, set(v, 0))?;
            hyp!(0, inh(&s));
            ok(in_f(c, &s), "inhabited successor outside F")
        },
    ));
    v.push(check(
        "lemma:oneF",
        "one in F",
        CARD,
        &[],
        &["one inhabited"],
        |c, _| {
            let one = n(c, 1)?;
            hyp!(0, inh(&one));
            ok(in_f(c, &one), "one notin F")
        },
    ));
    v.push(check(
        "lemma:finitecardinals3",
        "x in FINITE -> Nc(x) in F",
        CARD,
        &[("x", Elems(-1))],
        &["x finite"],
        |c, v| {
            let x = set(v, 0);
            hyp!(0, c.u.is_finite(x));
            ok(in_f(c, &nc(c, x)?), "Nc of a finite set outside F")
        },
    ));
    v.push(check(
        "lemma:cardinalpredecessor",
        "k in F & x in k+ & c in x -> x - {c} in k",
        CARD,
        &[("k", Frege(0)), ("x", Elems(-1)), ("c", Elems(-2))],
        &["x in k+", "c in x"],
        |cx, v| {
            let (k, x) = (set(v, 0), set(v, 1));
            let e = idx(cx, obj(v, 2))?;
            hyp!(0, succ(cx, k)?.contains(idx(cx, obj(v, 1))?));
            hyp!(1, x.contains(e));
            let r = without(x, e);
            ok(k.contains(idx(cx, &sv(r))?), "predecessor set outside k")
        },
    ));
    v.push(check(
        "lemma:separable_similarity",
        "f: b -> c similarity & a separable in b -> c = f``a u (c - f``a)",
        S1,
        &[("b", Elems(0)), ("c", Elems(0)), ("f", Rel(0, 1)), ("a", Subsets(0))],
        &["f: b -> c similarity"],
        |cx, v| {
            let (b, cc, fs, a) = (set(v, 0), set(v, 1), set(v, 2), set(v, 3));
            let f = FuncView::from_setval(fs);
            hyp!(0, f.is_function() && f.is_similarity(b, cc));
            let e = cx.u.image(fs, a)?;
            ok(separable(&e, cc), "image not separable")
        },
    ));
    v.push(check(
        "lemma:similarity_image",
        "f: a -> b similarity & x subset a -> f|x: x -> f``x similarity",
        S1,
        &[("a", Elems(0)), ("b", Elems(0)), ("f", Rel(0, 1)), ("x", Subsets(0))],
        &["f: a -> b similarity"],
        |cx, v| {
            let (a, b, fs, x) = (set(v, 0), set(v, 1), set(v, 2), set(v, 3));
            let f = FuncView::from_setval(fs);
            hyp!(0, f.is_function() && f.is_similarity(a, b));
            let img = cx.u.image(fs, x)?;
            ok(restrict(&f, x).is_similarity(x, &img), "restriction not a similarity")
        },
    ));
}

fn order(v: &mut Vec<Check>) {
    const K2: &[(&str, Range)] = &[("k", Frege(0)), ("m", Frege(0))];
    const K3: &[(&str, Range)] = &[("k", Frege(0)), ("l", Frege(0)), ("m", Frege(0))];
    v.push(check(
        "lemma:le_transitive",
        "k <= l & l <= m -> k <= m",
        CARD,
        K3,
        &["k <= l", "l <= m"],
        |c, v| {
            let (k, l, m) = (set(v, 0), set(v, 1), set(v, 2));
            hyp!(0, le(c, k, l)?);
            hyp!(1, le(c, l, m)?);
            ok(le(c, k, m)?, "k <= m fails")
        },
    ));
    v.push(check(
        "lemma:cardinalsdisjoint",
        "k, m in F: common member -> k = m; k != m -> k n m = Lambda",
        CARD,
        K2,
        &[],
        |_, v| {
            let (k, m) = (set(v, 0), set(v, 1));
            ok(k.is_disjoint(m) || k == m, "distinct cardinals share a member")
        },
    ));
    v.push(check(
        "lemma:lessthan2",
        "k < m <-> exists x in k, y in m. x proper subset y & y = x u (y - x)",
        CARD,
        K2,
        &[],
        |c, v| {
            let (k, m) = (set(v, 0), set(v, 1));
            let ys: Vec<usize> = m.members().collect();
            let rhs = k.members().any(|x| ys.iter().any(|&y| x & !y == 0 && x != y));
            ok(lt(c, k, m)? == rhs, "< disagrees with proper separable inclusion")
        },
    ));
    v.push(check(
        "lemma:le2",
        "m inhabited -> (k <= m <-> forall b in m exists a in k. a subset b & b = a u (b - a))",
        CARD,
        K2,
        &["m inhabited"],
        |c, v| {
            let (k, m) = (set(v, 0), set(v, 1));
            hyp!(0, inh(m));
            let xs: Vec<usize> = k.members().collect();
            let rhs = m.members().all(|b| xs.iter().any(|&a| a & !b == 0));
            ok(le(c, k, m)? == rhs, "<= disagrees with the all-members form")
        },
    ));
    v.push(check(
        "lemma:ordersuccessor",
        "m+ inhabited -> (k <= m <-> k+ <= m+)",
        CARD,
        K2,
        &["m+ inhabited"],
        |c, v| {
            let (k, m) = (set(v, 0), set(v, 1));
            let (ks, ms) = (succ(c, k)?, succ(c, m)?);
            hyp!(0, inh(&ms));
            ok(le(c, k, m)? == le(c, &ks, &ms)?, "successor does not preserve <=")
        },
    ));
    v.push(check(
        "lemma:successoroneone",
        "l+, m+ inhabited -> (l = m <-> l+ = m+)",
        CARD,
        K2,
        &["l+ inhabited", "m+ inhabited"],
        |c, v| {
            let (l, m) = (set(v, 0), set(v, 1));
            let (ls, ms) = (succ(c, l)?, succ(c, m)?);
            hyp!(0, inh(&ls));
            hyp!(1, inh(&ms));
            ok((l == m) == (ls == ms), "successor not one-to-one")
        },
    ));
    for id in ["lemma:strictordersuccessor", "lemma:successorstrict"] {
        v.push(check(
            id,
            "k+, m+ inhabited -> (k < m <-> k+ < m+)",
            CARD,
            K2,
            &["k+ inhabited", "m+ inhabited"],
            |c, v| {
                let (k, m) = (set(v, 0), set(v, 1));
                let (ks, ms) = (succ(c, k)?, succ(c, m)?);
                hyp!(0, inh(&ks));
                hyp!(1, inh(&ms));
                ok(lt(c, k, m)? == lt(c, &ks, &ms)?, "successor does not preserve <")
            },
        ));
    }
    v.push(check(
        "lemma:difference_nonempty",
        "x separable in y -> (y - x = Lambda <-> y = x)",
        SETS,
        &[("y", Elems(0)), ("x", Subsets(0))],
        &["x separable in y"],
        |_, v| {
            let (y, x) = (set(v, 0), set(v, 1));
            hyp!(0, separable(x, y));
            ok(minus(y, x).is_empty() == (x == y), "empty difference without equality")
        },
    ));
    v.push(check(
        "lemma:zero_or_not_zero",
        "k in F -> k = zero | k != zero",
        CARD,
        &[("k", Frege(0))],
        &[],
        |c, v| {
            let z = zero(c)?;
            ok(*set(v, 0) == z || *set(v, 0) != z, "excluded middle")
        },
    ));
    v.push(check(
        "theorem:finitetrichotomy",
        "k < m | k = m | m < k, and not (k < m & m < k)",
        CARD,
        K2,
        &[],
        |c, v| {
            let (k, m) = (set(v, 0), set(v, 1));
            let (a, b) = (lt(c, k, m)?, lt(c, m, k)?);
            ok((a || k == m || b) && !(a && b), "trichotomy fails")
        },
    ));
    v.push(check(
        "lemma:FregeNdecidable",
        "k, m in F -> k = m | k != m",
        CARD,
        K2,
        &[],
        |_, v| ok(set(v, 0) == set(v, 1) || set(v, 0) != set(v, 1), "excluded middle"),
    ));
    v.push(check(
        "lemma:le_reflexive",
        "k <= k",
        CARD,
        &[("k", Frege(0))],
        &[],
        |c, v| ok(le(c, set(v, 0), set(v, 0))?, "not reflexive"),
    ));
    v.push(check(
        "lemma:letolessthan",
        "k <= m <-> k < m | k = m",
        CARD,
        K2,
        &[],
        |c, v| {
            let (k, m) = (set(v, 0), set(v, 1));
            ok(le(c, k, m)? == (lt(c, k, m)? || k == m), "<= disagrees with < or =")
        },
    ));
    v.push(check(
        "lemma:finitetrichotomy2",
        "k <= m & m <= k -> k = m",
        CARD,
        K2,
        &["k <= m", "m <= k"],
        |c, v| {
            let (k, m) = (set(v, 0), set(v, 1));
            hyp!(0, le(c, k, m)?);
            hyp!(1, le(c, m, k)?);
            ok(k == m, "antisymmetry fails")
        },
    ));
    v.push(check(
        "lemma:le_transitive2",
        "k < m <= l -> k < l",
        CARD,
        K3,
        &["k < l", "l <= m"],
        |c, v| {
            let (k, l, m) = (set(v, 0), set(v, 1), set(v, 2));
            hyp!(0, lt(c, k, l)?);
            hyp!(1, le(c, l, m)?);
            ok(lt(c, k, m)?, "k < m fails")
        },
    ));
    v.push(check(
        "lemma:le_transitive3",
        "k <= l < m -> k < m",
        CARD,
        K3,
        &["k <= l", "l < m"],
        |c, v| {
            let (k, l, m) = (set(v, 0), set(v, 1), set(v, 2));
            hyp!(0, le(c, k, l)?);
            hyp!(1, lt(c, l, m)?);
            ok(lt(c, k, m)?, "k < m fails")
        },
    ));
    v.push(check(
        "lemma:lessthan_transitive",
        "k < l < m -> k < m",
        CARD,
        K3,
        &["k < l", "l < m"],
        |c, v| {
            let (k, l, m) = (set(v, 0), set(v, 1), set(v, 2));
            hyp!(0, lt(c, k, l)?);
            hyp!(1, lt(c, l, m)?);
            ok(lt(c, k, m)?, "k < m fails")
        },
    ));
    v.push(check(
        "lemma:lessthansuccessor",
        "k+ in F & k+ inhabited -> k < k+",
        CARD,
        &[("k", Frege(0))],
        &["k+ in F and inhabited"],
        |c, v| {
            let k = set(v, 0);
            let s = succ(c, k)?;
            hyp!(0, in_f(c, &s) && inh(&s));
            ok(lt(c, k, &s)?, "k < k+ fails")
        },
    ));
    v.push(check(
        "lemma:successorincreasing",
        "m in F -> not m+ <= m",
        CARD,
        &[("m", Frege(0))],
        &[],
        |c, v| {
            let m = set(v, 0);
            ok(!le(c, &succ(c, m)?, m)?, "m+ <= m")
        },
    ));
    v.push(check(
        "lemma:xnotlessthanx",
        "not x < x",
        CARD,
        &[("x", Frege(0))],
        &[],
        |c, v| ok(!lt(c, set(v, 0), set(v, 0))?, "x < x"),
    ));
    for id in ["lemma:xnotlessthanzero", "lemma:nothinglessthanzero"] {
        v.push(check(
            id,
            "not x < zero",
            CARD,
            &[("x", Frege(0))],
            &[],
            |c, v| ok(!lt(c, set(v, 0), &zero(c)?)?, "x < zero"),
        ));
    }
    v.push(check(
        "lemma:noinsertions",
        "k < m -> k+ <= m",
        CARD,
        K2,
        &["k < m"],
        |c, v| {
            let (k, m) = (set(v, 0), set(v, 1));
            hyp!(0, lt(c, k, m)?);
            ok(le(c, &succ(c, k)?, m)?, "k+ <= m fails")
        },
    ));
    v.push(check(
        "lemma:successorbounded",
        "a < b -> a+ in F",
        CARD,
        &[("a", Frege(0)), ("b", Frege(0))],
        &["a < b"],
        |c, v| {
            let (a, b) = (set(v, 0), set(v, 1));
            hyp!(0, lt(c, a, b)?);
            ok(in_f(c, &succ(c, a)?), "a+ notin F")
        },
    ));
    v.push(check(
        "lemma:lessthansuccessor2",
        "k <= m+ -> k <= m | k = m+; with m+ in F the converse holds",
        CARD,
        K2,
        &[],
        |c, v| {
            let (k, m) = (set(v, 0), set(v, 1));
            let ms = succ(c, m)?;
            let lhs = le(c, k, &ms)?;
            let rhs = le(c, k, m)? || *k == ms;
            if lhs && !rhs {
                return ok(false, "forward direction fails");
            }
            ok(!in_f(c, &ms) || lhs == rhs, "equivalence fails with m+ in F")
        },
    ));
    v.push(check(
        "lemma:lessthansuccessor3",
        "k < m+ -> k < m | k = m; with m+ in F the converse holds",
        CARD,
        K2,
        &[],
        |c, v| {
            let (k, m) = (set(v, 0), set(v, 1));
            let ms = succ(c, m)?;
            let lhs = lt(c, k, &ms)?;
            let rhs = lt(c, k, m)? || k == m;
            if lhs && !rhs {
                return ok(false, "forward direction fails");
            }
            ok(!in_f(c, &ms) || lhs == rhs, "equivalence fails with m+ in F")
        },
    ));
    v.push(check(
        "lemma:finitemaximal",
        "every nonempty finite subset of F has a maximal element",
        CARD,
        &[("S", SemiMasks(0))],
        &["S nonempty subset of F"],
        |c, v| {
            let s = mask(v, 0);
            let sf = c.a.semifinite(c.base)?;
            let f_len = c.a.frege(c.base)?.len();
            hyp!(0, s != 0 && s >> f_len == 0);
            let ms: Vec<&SetVal> = (0..f_len).filter(|i| s >> i & 1 == 1).map(|i| &sf[i]).collect();
            for m in &ms {
                let mut maximal = true;
                for x in &ms {
                    if lt(c, m, x)? {
                        maximal = false;
                    }
                }
                if maximal {
                    return ok(true, "");
                }
            }
            ok(false, "no maximal element")
        },
    ));
    v.push(check(
        "lemma:xnotequalsuccessorx",
        "x, x+ in F -> x != x+",
        CARD,
        &[("x", Frege(0))],
        &["x+ in F"],
        |c, v| {
            let x = set(v, 0);
            let s = succ(c, x)?;
            hyp!(0, in_f(c, &s));
            ok(*x != s, "x = x+")
        },
    ));
    v.push(check(
        "lemma:xlessthansuccessorx",
        "x, x+ in F -> x < x+",
        CARD,
        &[("x", Frege(0))],
        &["x+ in F"],
        |c, v| {
            let x = set(v, 0);
            let s = succ(c, x)?;
            hyp!(0, in_f(c, &s));
            ok(lt(c, x, &s)?, "x < x+ fails")
        },
    ));
    v.push(check(
        "lemma:smallarith",
        "zero < one < two < three < four",
        CARD,
        &[],
        &["four inhabited"],
        |c, _| {
            let ns = (0..5).map(|k| n(c, k)).collect::<Result<Vec<_>>>()?;
            hyp!(0, inh(&ns[4]));
            for w in ns.windows(2) {
                if !lt(c, &w[0], &w[1])? {
                    return ok(false, "chain breaks");
                }
            }
            ok(true, "")
        },
    ));
    v.push(check(
        "lemma:lessthanone",
        "m < one <-> m = zero",
        CARD,
        &[("m", Frege(0))],
        &["one inhabited"],
        |c, v| {
            let m = set(v, 0);
            let one = n(c, 1)?;
            hyp!(0, inh(&one));
            ok(lt(c, m, &one)? == (*m == zero(c)?), "m < one disagrees with m = zero")
        },
    ));
    v.push(check(
        "lemma:lessthantwo",
        "m < two <-> m = zero | m = one",
        CARD,
        &[("m", Frege(0))],
        &["two inhabited"],
        |c, v| {
            let m = set(v, 0);
            let two = n(c, 2)?;
            hyp!(0, inh(&two));
            ok(
                lt(c, m, &two)? == (*m == zero(c)? || *m == n(c, 1)?),
                "m < two disagrees with m in {zero, one}",
            )
        },
    ));
    v.push(check(
        "lemma:le_zero",
        "x <= zero -> x = zero",
        CARD,
        &[("x", Frege(0))],
        &["x <= zero"],
        |c, v| {
            let x = set(v, 0);
            let z = zero(c)?;
            hyp!(0, le(c, x, &z)?);
            ok(*x == z, "x <= zero but x != zero")
        },
    ));
    v.push(check(
        "lemma:nothingbetween",
        "m + n <= m+ & m + n in F & n != zero -> n = one",
        CARD,
        &[("m", Frege(0)), ("n", Frege(0))],
        &["m + n <= m+", "m + n in F", "n != zero"],
        |c, v| {
            let (m, nn) = (set(v, 0), set(v, 1));
            let s = add(c, m, nn)?;
            hyp!(0, le(c, &s, &succ(c, m)?)?);
            hyp!(1, in_f(c, &s));
            hyp!(2, *nn != zero(c)?);
            ok(*nn == n(c, 1)?, "n != one")
        },
    ));
    v.push(check(
        "lemma:separableNc",
        "X in FINITE & Z separable in X -> Nc(Z) <= Nc(X)",
        CARD,
        &[("X", Elems(-1)), ("Z", Subsets(0))],
        &["X finite", "Z separable in X"],
        |c, v| {
            let (x, z) = (set(v, 0), set(v, 1));
            hyp!(0, c.u.is_finite(x));
            hyp!(1, separable(z, x));
            ok(le(c, &nc(c, z)?, &nc(c, x)?)?, "Nc(Z) <= Nc(X) fails")
        },
    ));
}

fn unit_subclasses(v: &mut Vec<Check>) {
    v.push(check(
        "lemma:subset_usc",
        "y in SSC(USC(a)) -> exists z in SSC(a). y = USC(z)",
        S1,
        &[("a", Elems(0)), ("y", Elems(1))],
        &["y in SSC(USC(a))"],
        |c, v| {
            let (a, y) = (set(v, 0), set(v, 1));
            let ua = c.u.usc(a)?;
            hyp!(0, y.is_subset(&ua));
            for z in c.u.ssc(a)?.members() {
                if c.u.usc(&c.u.elem(a.level(), z))? == *y {
                    return ok(true, "");
                }
            }
            ok(false, "no z with USC(z) = y")
        },
    ));
    v.push(
        check(
            "lemma:sscusc",
            "Nc(SSC(USC(a))) = Nc(USC(SSC(a)))",
            S1,
            &[("a", Elems(0))],
            &[],
            |c, v| {
                let a = set(v, 0);
                let left = c.u.ssc(&c.u.usc(a)?)?;
                let right = c.u.usc(&c.u.ssc(a)?)?;
                // y = USC(z) is sent to {z}, where z is the union of y
                let f = FuncView::from_fn(&left, |y| {
                    let z = crate::universe::ops::bits_of(y).fold(0, |acc, s| acc | s);
                    singleton_idx(z)
                });
                ok(f.is_function() && f.is_similarity(&left, &right), "witness map fails")
            },
        )
        .reduced(),
    );
    v.push(check(
        "lemma:singletons_similar",
        "{x} ~ {y}",
        SETS,
        &[("x", Elems(-1)), ("y", Elems(-1))],
        &[],
        |c, v| {
            let (x, y) = (c.u.mk_singleton(obj(v, 0))?, c.u.mk_singleton(obj(v, 1))?);
            ok(sim(&x, &y), "unit classes not similar")
        },
    ));
    v.push(check(
        "lemma:similar_to_singleton",
        "x ~ {a} -> x is a unit class",
        SETS,
        &[("x", Elems(0)), ("a", Elems(-1))],
        &["x ~ {a}"],
        |c, v| {
            let x = set(v, 0);
            hyp!(0, sim(x, &c.u.mk_singleton(obj(v, 1))?));
            ok(unit(x), "not a unit class")
        },
    ));
    v.push(check(
        "lemma:one_members",
        "u in one <-> exists a. u = {a}",
        CARD,
        &[("u", Elems(-1))],
        &[],
        |c, v| {
            let u = set(v, 0);
            ok(n(c, 1)?.contains(idx(c, obj(v, 0))?) == unit(u), "membership in one")
        },
    ));
    v.push(check(
        "lemma:two_members",
        "u in two <-> exists a, b. a != b & u = {a, b}",
        CARD,
        &[("u", Elems(-1))],
        &[],
        |c, v| ok(n(c, 2)?.contains(idx(c, obj(v, 0))?) == (set(v, 0).len() == 2), "membership in two"),
    ));
    v.push(check(
        "lemma:three_members",
        "u in three <-> exists a, b, c distinct. u = {a, b, c}",
        CARD,
        &[("u", Elems(-1))],
        &[],
        |c, v| ok(n(c, 3)?.contains(idx(c, obj(v, 0))?) == (set(v, 0).len() == 3), "membership in three"),
    ));
    v.push(check(
        "lemma:usc_subset3",
        "a, b in FINITE & a in SSC(b) -> USC(a) in SSC(SSC(b))",
        S1,
        &[("a", Elems(0)), ("b", Elems(0))],
        &["a, b finite", "a in SSC(b)"],
        |c, v| {
            let (a, b) = (set(v, 0), set(v, 1));
            hyp!(0, c.u.is_finite(a) && c.u.is_finite(b));
            hyp!(1, a.is_subset(b));
            let target = c.u.ssc(&c.u.ssc(b)?)?;
            ok(target.contains(idx(c, &sv(c.u.usc(a)?))?), "USC(a) notin SSC(SSC(b))")
        },
    ));
    v.push(check(
        "lemma:uscsimilar",
        "a ~ b <-> USC(a) ~ USC(b)",
        SETS,
        &[("a", Elems(0)), ("b", Elems(0))],
        &[],
        |c, v| {
            let (a, b) = (set(v, 0), set(v, 1));
            ok(sim(a, b) == sim(&c.u.usc(a)?, &c.u.usc(b)?), "USC changes similarity")
        },
    ));
    v.push(check(
        "lemma:sscsimilar",
        "a ~ b -> SSC(a) ~ SSC(b)",
        SETS,
        &[("a", Elems(0)), ("b", Elems(0))],
        &["a ~ b"],
        |c, v| {
            let (a, b) = (set(v, 0), set(v, 1));
            hyp!(0, sim(a, b));
            ok(sim(&c.u.ssc(a)?, &c.u.ssc(b)?), "SSC images not similar")
        },
    ));
    v.push(check(
        "lemma:usc_subset_ssc",
        "a in DECIDABLE -> USC(a) subset SSC(a)",
        SETS,
        &[("a", Elems(0))],
        &["a decidable"],
        |c, v| {
            let a = set(v, 0);
            hyp!(0, c.u.has_dec_eq(a));
            ok(c.u.usc(a)?.is_subset(&c.u.ssc(a)?), "USC(a) not in SSC(a)")
        },
    ));
    v.push(check(
        "lemma:usc_subset",
        "a subset b <-> USC(a) subset USC(b)",
        SETS,
        &[("a", Elems(0)), ("b", Elems(0))],
        &[],
        |c, v| {
            let (a, b) = (set(v, 0), set(v, 1));
            ok(a.is_subset(b) == c.u.usc(a)?.is_subset(&c.u.usc(b)?), "USC changes inclusion")
        },
    ));
    v.push(check(
        "lemma:ssc_subset1",
        "a in SSC(b) <-> USC(a) in SSC(USC(b))",
        S1,
        &[("a", Elems(0)), ("b", Elems(0))],
        &[],
        |c, v| {
            let (a, b) = (set(v, 0), set(v, 1));
            let lhs = c.u.ssc(b)?.contains(idx(c, obj(v, 0))?);
            let rhs = c.u.ssc(&c.u.usc(b)?)?.contains(idx(c, &sv(c.u.usc(a)?))?);
            ok(lhs == rhs, "membership differs")
        },
    ));
    v.push(check(
        "lemma:ssc_subset2",
        "a in SSC(b) <-> SSC(a) subset SSC(b)",
        SETS,
        &[("a", Elems(0)), ("b", Elems(0))],
        &[],
        |c, v| {
            let (a, b) = (set(v, 0), set(v, 1));
            let lhs = c.u.ssc(b)?.contains(idx(c, obj(v, 0))?);
            ok(lhs == c.u.ssc(a)?.is_subset(&c.u.ssc(b)?), "membership differs from inclusion")
        },
    ));
    v.push(check(
        "lemma:ssc_subset4",
        "b in FINITE -> forall x, y in SSC(b). x subset y | not x subset y",
        SETS,
        &[("b", Elems(0)), ("x", Subsets(0)), ("y", Subsets(0))],
        &["b finite"],
        |c, v| {
            hyp!(0, c.u.is_finite(set(v, 0)));
            let (x, y) = (set(v, 1), set(v, 2));
            let by_bits = x.members().all(|m| y.contains(m));
            ok(x.is_subset(y) == by_bits, "inclusion undecided")
        },
    ));
    v.push(check(
        "lemma:ssc_subset3",
        "a, b in FINITE & a in SSC(b) -> SSC(a) in SSC(SSC(b))",
        S1,
        &[("a", Elems(0)), ("b", Elems(0))],
        &["a, b finite", "a in SSC(b)"],
        |c, v| {
            let (a, b) = (set(v, 0), set(v, 1));
            hyp!(0, c.u.is_finite(a) && c.u.is_finite(b));
            hyp!(1, a.is_subset(b));
            let target = c.u.ssc(&c.u.ssc(b)?)?;
            ok(target.contains(idx(c, &sv(c.u.ssc(a)?))?), "SSC(a) notin SSC(SSC(b))")
        },
    ));
    v.push(check(
        "lemma:usc_successor",
        "c notin a -> USC(a u {c}) = USC(a) u {{c}}",
        SETS,
        &[("a", Elems(0)), ("c", Elems(-1))],
        &["c not in a"],
        |cx, v| {
            let a = set(v, 0);
            let k = idx(cx, obj(v, 1))?;
            hyp!(0, !a.contains(k));
            let lhs = cx.u.usc(&with(a, k))?;
            let rhs = with(&cx.u.usc(a)?, singleton_idx(k));
            ok(lhs == rhs, "USC of adjunction")
        },
    ));
    v.push(check(
        "lemma:usc_dif2",
        "USC(a - b) = USC(a) - USC(b)",
        SETS,
        &[("a", Elems(0)), ("b", Elems(0))],
        &[],
        |c, v| {
            let (a, b) = (set(v, 0), set(v, 1));
            ok(c.u.usc(&minus(a, b))? == minus(&c.u.usc(a)?, &c.u.usc(b)?), "USC of difference")
        },
    ));
    v.push(check(
        "lemma:usc_empty",
        "USC(Lambda) = Lambda",
        SETS,
        &[],
        &[],
        |c, _| ok(c.u.usc(&c.u.empty(c.base)?)?.is_empty(), "USC(Lambda) inhabited"),
    ));
    v.push(check(
        "lemma:usc_up_down",
        "x in a <-> {x} in USC(a)",
        SETS,
        &[("x", Elems(-1)), ("a", Elems(0))],
        &[],
        |c, v| {
            let (k, a) = (idx(c, obj(v, 0))?, set(v, 1));
            ok(a.contains(k) == c.u.usc(a)?.contains(singleton_idx(k)), "USC membership")
        },
    ));
    v.push(check(
        "lemma:ssc_empty",
        "SSC(Lambda) = {Lambda}",
        SETS,
        &[],
        &[],
        |c, _| {
            let s = c.u.ssc(&c.u.empty(c.base)?)?;
            ok(s.len() == 1 && s.contains(0), "SSC(Lambda) != {Lambda}")
        },
    ));
    v.push(check(
        "lemma:similarinhabited",
        "a ~ b & a inhabited -> b inhabited",
        SETS,
        &[("a", Elems(0)), ("b", Elems(0))],
        &["a ~ b", "a inhabited"],
        |_, v| {
            let (a, b) = (set(v, 0), set(v, 1));
            hyp!(0, sim(a, b));
            hyp!(1, inh(a));
            ok(inh(b), "b empty")
        },
    ));
    v.push(check(
        "lemma:usc_unitclass",
        "a unit class <-> USC(a) unit class",
        SETS,
        &[("a", Elems(0))],
        &[],
        |c, v| {
            let a = set(v, 0);
            ok(unit(a) == unit(&c.u.usc(a)?), "USC changes unit-class status")
        },
    ));
    v.push(check(
        "lemma:extend_similar",
        "x ~ y & a notin x & b notin y -> x u {a} ~ y u {b}",
        S1,
        &[("x", Elems(0)), ("y", Elems(0)), ("a", Elems(-1)), ("b", Elems(-1))],
        &["x ~ y", "a not in x", "b not in y"],
        |c, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            let (a, b) = (idx(c, obj(v, 2))?, idx(c, obj(v, 3))?);
            let f = FuncView::bijection(x, y);
            hyp!(0, f.is_some());
            hyp!(1, !x.contains(a));
            hyp!(2, !y.contains(b));
            let mut pairs = f.expect("checked").pairs;
            pairs.push((a, b));
            let g = FuncView::from_pairs(x.level() - 1, pairs);
            ok(g.is_similarity(&with(x, a), &with(y, b)), "extended map fails")
        },
    ));
}

fn exponentiation(v: &mut Vec<Check>) {
    v.push(check(
        "lemma:expuscssc",
        "m in F & USC(a) in m -> SSC(a) in 2^m & 2^m = Nc(SSC(a))",
        C3,
        &[("m", Frege(0)), ("a", Elems(-2))],
        &["USC(a) in m"],
        |c, v| {
            let (m, a) = (set(v, 0), set(v, 1));
            hyp!(0, m.contains(idx(c, &sv(c.u.usc(a)?))?));
            let e = exp(c, m)?;
            let s = c.u.ssc(a)?;
            ok(e.contains(idx(c, &sv(s.clone()))?) && e == nc(c, &s)?, "2^m != Nc(SSC(a))")
        },
    ));
    v.push(
        check(
            "lemma:expdefinable",
            "{ <m, 2^m> : m in F } is stratified",
            NOLEVEL,
            &[],
            &[],
            |_, _| {
                stratifies(
                    "{ z : exists m. exists a. (m in Ffin & usc(a) in m & z = <m, nc(ssc(a))>) }",
                )
            },
        )
        .syntactic(),
    );
    v.push(check(
        "lemma:exp_inhabited",
        "m in F & 2^m inhabited -> exists a. USC(a) in m & SSC(a) in 2^m",
        C3,
        &[("m", Frege(0))],
        &["2^m inhabited"],
        |c, v| {
            let m = set(v, 0);
            let e = exp(c, m)?;
            hyp!(0, inh(&e));
            for a in c.u.elements(c.base - 2) {
                let ua = idx(c, &sv(c.u.usc(&a)?))?;
                if m.contains(ua) && e.contains(idx(c, &sv(c.u.ssc(&a)?))?) {
                    return ok(true, "");
                }
            }
            ok(false, "no witness a")
        },
    ));
    v.push(check(
        "lemma:finiteexp",
        "m in F & 2^m inhabited -> 2^m in F",
        C3,
        &[("m", Frege(0))],
        &["2^m inhabited"],
        |c, v| {
            let e = exp(c, set(v, 0))?;
            hyp!(0, inh(&e));
            ok(in_f(c, &e), "2^m notin F")
        },
    ));
    v.push(check("lemma:exp_zero", "2^zero = one", C3, &[], &[], |c, _| {
        ok(exp(c, &n(c, 0)?)? == n(c, 1)?, "2^zero != one")
    }));
    v.push(check("lemma:exp_one", "2^one = two", C3, &[], &[], |c, _| {
        ok(exp(c, &n(c, 1)?)? == n(c, 2)?, "2^one != two")
    }));
    v.push(check("lemma:exp_two", "2^two = four", C3, &[], &[], |c, _| {
        ok(exp(c, &n(c, 2)?)? == n(c, 4)?, "2^two != four")
    }));
    v.push(check(
        "lemma:mlessthanexpm",
        "m in F & 2^m inhabited -> m < 2^m",
        C3,
        &[("m", Frege(0))],
        &["2^m inhabited"],
        |c, v| {
            let m = set(v, 0);
            let e = exp(c, m)?;
            hyp!(0, inh(&e));
            ok(lt(c, m, &e)?, "m < 2^m fails")
        },
    ));
    v.push(check(
        "lemma:mplusone_le_expm",
        "m in F & 2^m inhabited -> m+ <= 2^m",
        C3,
        &[("m", Frege(0))],
        &["2^m inhabited"],
        |c, v| {
            let m = set(v, 0);
            let e = exp(c, m)?;
            hyp!(0, inh(&e));
            ok(le(c, &succ(c, m)?, &e)?, "m+ <= 2^m fails")
        },
    ));
    v.push(check(
        "lemma:exporder",
        "m <= n & 2^n inhabited -> 2^m inhabited & 2^m <= 2^n",
        C3,
        &[("m", Frege(0)), ("n", Frege(0))],
        &["m <= n", "2^n inhabited"],
        |c, v| {
            let (m, nn) = (set(v, 0), set(v, 1));
            let (em, en) = (exp(c, m)?, exp(c, nn)?);
            hyp!(0, le(c, m, nn)?);
            hyp!(1, inh(&en));
            ok(inh(&em) && le(c, &em, &en)?, "2^m <= 2^n fails")
        },
    ));
    v.push(check(
        "lemma:exporderstrict",
        "m < n & 2^n inhabited -> 2^m inhabited & 2^m < 2^n",
        C3,
        &[("m", Frege(0)), ("n", Frege(0))],
        &["m < n", "2^n inhabited"],
        |c, v| {
            let (m, nn) = (set(v, 0), set(v, 1));
            let (em, en) = (exp(c, m)?, exp(c, nn)?);
            hyp!(0, lt(c, m, nn)?);
            hyp!(1, inh(&en));
            ok(inh(&em) && lt(c, &em, &en)?, "2^m < 2^n fails")
        },
    ));
    v.push(check(
        "lemma:exp_members2",
        "m in F & USC(x) in m -> SSC(x) in 2^m",
        C3,
        &[("m", Frege(0)), ("x", Elems(-2))],
        &["USC(x) in m"],
        |c, v| {
            let (m, x) = (set(v, 0), set(v, 1));
            hyp!(0, m.contains(idx(c, &sv(c.u.usc(x)?))?));
            ok(exp(c, m)?.contains(idx(c, &sv(c.u.ssc(x)?))?), "SSC(x) notin 2^m")
        },
    ));
    v.push(check(
        "lemma:expnotzero",
        "2^z != zero",
        C3,
        &[("z", UnitFamilies(0))],
        &[],
        |c, v| ok(exp(c, set(v, 0))? != zero(c)?, "2^z = zero"),
    ));
    v.push(check(
        "lemma:ssc_adjoin2",
        "b in FINITE & c notin b -> Nc(SSC(b u {c})) = Nc(SSC(b)) + Nc(SSC(b))",
        S1,
        &[("b", Elems(0)), ("c", Elems(-1))],
        &["b finite", "c not in b"],
        |cx, v| {
            let b = set(v, 0);
            let k = idx(cx, obj(v, 1))?;
            hyp!(0, cx.u.is_finite(b));
            hyp!(1, !b.contains(k));
            let lhs = nc(cx, &cx.u.ssc(&with(b, k))?)?;
            let half = nc(cx, &cx.u.ssc(b)?)?;
            ok(lhs == add(cx, &half, &half)?, "doubling fails")
        },
    ));
    v.push(check(
        "lemma:exprec",
        "p in F & 2^(p+) in F -> 2^(p+) = 2^p + 2^p",
        C3,
        &[("p", Frege(0))],
        &["2^(p+) in F"],
        |c, v| {
            let p = set(v, 0);
            let lhs = exp(c, &succ(c, p)?)?;
            hyp!(0, in_f(c, &lhs));
            let e = exp(c, p)?;
            ok(lhs == add(c, &e, &e)?, "2^(p+) != 2^p + 2^p")
        },
    ));
    v.push(check(
        "lemma:exponeonebase",
        "m in F -> (2^m = one <-> m = zero)",
        C3,
        &[("m", Frege(0))],
        &[],
        |c, v| {
            let m = set(v, 0);
            ok((exp(c, m)? == n(c, 1)?) == (*m == zero(c)?), "2^m = one disagrees with m = zero")
        },
    ));
    v.push(check(
        "lemma:exponeone",
        "2^n = 2^m & 2^n inhabited -> n = m",
        C3,
        &[("n", Frege(0)), ("m", Frege(0))],
        &["2^n = 2^m", "2^n inhabited"],
        |c, v| {
            let (nn, m) = (set(v, 0), set(v, 1));
            let en = exp(c, nn)?;
            hyp!(0, en == exp(c, m)?);
            hyp!(1, inh(&en));
            ok(nn == m, "n != m")
        },
    ));
}

fn addition(v: &mut Vec<Check>) {
    v.push(check(
        "lemma:addition2",
        "x + zero = x; x + y+ = (x + y)+; x + y+ = x+ + y",
        CARD,
        &[("x", Sets(0)), ("y", Sets(0))],
        &[],
        |c, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            if add(c, x, &zero(c)?)? != *x {
                return ok(false, "x + zero != x");
            }
            let lhs = add(c, x, &succ(c, y)?)?;
            if lhs != succ(c, &add(c, x, y)?)? {
                return ok(false, "x + y+ != (x + y)+");
            }
            ok(lhs == add(c, &succ(c, x)?, y)?, "x + y+ != x+ + y")
        },
    ));
    v.push(check(
        "lemma:addition3",
        "zero + x = x; (x + y) + z = x + (y + z); x + y = y + x",
        CARD,
        &[("x", Sets(0)), ("y", Sets(0)), ("z", Sets(0))],
        &[],
        |c, v| {
            let (x, y, z) = (set(v, 0), set(v, 1), set(v, 2));
            if add(c, &zero(c)?, x)? != *x {
                return ok(false, "zero + x != x");
            }
            let xy = add(c, x, y)?;
            if add(c, &xy, z)? != add(c, x, &add(c, y, z)?)? {
                return ok(false, "not associative");
            }
            ok(xy == add(c, y, x)?, "not commutative")
        },
    ));
    v.push(check(
        "lemma:successorisplusone",
        "m in F -> m+ = m + one",
        CARD,
        &[("m", Frege(0))],
        &[],
        |c, v| {
            let m = set(v, 0);
            ok(succ(c, m)? == add(c, m, &n(c, 1)?)?, "m+ != m + one")
        },
    ));
    for id in ["lemma:oneplusone", "lemma:twoequalsoneplusone"] {
        v.push(check(id, "one + one = two", CARD, &[], &[], |c, _| {
            let one = n(c, 1)?;
            ok(add(c, &one, &one)? == n(c, 2)?, "one + one != two")
        }));
    }
    v.push(check(
        "lemma:inhabited_sum",
        "k, m in F & k + m inhabited -> k + m in F",
        CARD,
        &[("k", Frege(0)), ("m", Frege(0))],
        &["k + m inhabited"],
        |c, v| {
            let s = add(c, set(v, 0), set(v, 1))?;
            hyp!(0, inh(&s));
            ok(in_f(c, &s), "inhabited sum outside F")
        },
    ));
    v.push(check(
        "lemma:subterms",
        "p+q+r in F -> p+q, q+r in F; p+q+r+s in F -> p+q+r in F",
        CARD,
        &[("p", Frege(0)), ("q", Frege(0)), ("r", Frege(0)), ("s", Frege(0))],
        &[],
        |c, v| {
            let (p, q, r, s) = (set(v, 0), set(v, 1), set(v, 2), set(v, 3));
            let pq = add(c, p, q)?;
            let pqr = add(c, &pq, r)?;
            if in_f(c, &pqr) && !(in_f(c, &pq) && in_f(c, &add(c, q, r)?)) {
                return ok(false, "three-term subterm outside F");
            }
            ok(!in_f(c, &add(c, &pqr, s)?) || in_f(c, &pqr), "four-term subterm outside F")
        },
    ));
    v.push(check(
        "lemma:subterms2",
        "p in F & p + q+ in F -> p+ in F",
        CARD,
        &[("p", Frege(0)), ("q", Semi(0))],
        &["p + q+ in F"],
        |c, v| {
            let (p, q) = (set(v, 0), set(v, 1));
            hyp!(0, in_f(c, &add(c, p, &succ(c, q)?)?));
            ok(in_f(c, &succ(c, p)?), "p+ notin F")
        },
    ));
    v.push(check(
        "lemma:subterms3",
        "p, q in F & p + q+ in F -> p + q in F",
        CARD,
        &[("p", Frege(0)), ("q", Frege(0))],
        &["p + q+ in F"],
        |c, v| {
            let (p, q) = (set(v, 0), set(v, 1));
            hyp!(0, in_f(c, &add(c, p, &succ(c, q)?)?));
            ok(in_f(c, &add(c, p, q)?), "p + q notin F")
        },
    ));
    v.push(check(
        "lemma:addorder",
        "b + q in F & a <= b & p <= q -> a + p <= b + q",
        CARD,
        &[("a", Frege(0)), ("b", Frege(0)), ("p", Frege(0)), ("q", Frege(0))],
        &["b + q in F", "a <= b", "p <= q"],
        |c, v| {
            let (a, b, p, q) = (set(v, 0), set(v, 1), set(v, 2), set(v, 3));
            let bq = add(c, b, q)?;
            hyp!(0, in_f(c, &bq));
            hyp!(1, le(c, a, b)?);
            hyp!(2, le(c, p, q)?);
            ok(le(c, &add(c, a, p)?, &bq)?, "a + p <= b + q fails")
        },
    ));
    v.push(check(
        "lemma:addorder2",
        "b + q in F & a < b & p <= q -> a + p < b + q",
        CARD,
        &[("a", Frege(0)), ("b", Frege(0)), ("p", Frege(0)), ("q", Frege(0))],
        &["b + q in F", "a < b", "p <= q"],
        |c, v| {
            let (a, b, p, q) = (set(v, 0), set(v, 1), set(v, 2), set(v, 3));
            let bq = add(c, b, q)?;
            hyp!(0, in_f(c, &bq));
            hyp!(1, lt(c, a, b)?);
            hyp!(2, le(c, p, q)?);
            ok(lt(c, &add(c, a, p)?, &bq)?, "a + p < b + q fails")
        },
    ));
    v.push(check(
        "lemma:cardinality_additive",
        "p, q in FINITE & p n q = Lambda -> Nc(p u q) = Nc(p) + Nc(q)",
        CARD,
        &[("p", Elems(-1)), ("q", Elems(-1))],
        &["p, q finite", "p n q = Lambda"],
        |c, v| {
            let (p, q) = (set(v, 0), set(v, 1));
            hyp!(0, c.u.is_finite(p) && c.u.is_finite(q));
            hyp!(1, p.is_disjoint(q));
            ok(nc(c, &union(p, q))? == add(c, &nc(c, p)?, &nc(c, q)?)?, "Nc not additive")
        },
    ));
    v.push(check(
        "lemma:subtraction",
        "q + p in F -> (q + p = r + p -> q = r) & (p + q = p + r -> q = r)",
        CARD,
        &[("p", Frege(0)), ("q", Frege(0)), ("r", Frege(0))],
        &["q + p in F"],
        |c, v| {
            let (p, q, r) = (set(v, 0), set(v, 1), set(v, 2));
            let qp = add(c, q, p)?;
            hyp!(0, in_f(c, &qp));
            if qp == add(c, r, p)? && q != r {
                return ok(false, "right cancellation fails");
            }
            ok(add(c, p, q)? != add(c, p, r)? || q == r, "left cancellation fails")
        },
    ));
    v.push(check(
        "lemma:orderbyaddition",
        "p <= q <-> exists k in F. p + k = q",
        CARD,
        &[("p", Frege(0)), ("q", Frege(0))],
        &[],
        |c, v| {
            let (p, q) = (set(v, 0), set(v, 1));
            let rhs = frege_any(c, c.base, |k| Ok(add(c, p, k)? == *q))?;
            ok(le(c, p, q)? == rhs, "<= disagrees with additive form")
        },
    ));
    v.push(check(
        "lemma:xlessthan_xplusy",
        "p + q in F -> p <= p + q & q <= p + q",
        CARD,
        &[("p", Frege(0)), ("q", Frege(0))],
        &["p + q in F"],
        |c, v| {
            let (p, q) = (set(v, 0), set(v, 1));
            let s = add(c, p, q)?;
            hyp!(0, in_f(c, &s));
            ok(le(c, p, &s)? && le(c, q, &s)?, "summand exceeds sum")
        },
    ));
    v.push(check(
        "lemma:adds_to_zero",
        "p + q = zero -> p = zero",
        C2,
        &[("p", Elems(0)), ("q", Elems(0))],
        &["p + q = zero"],
        |c, v| {
            let (p, q) = (set(v, 0), set(v, 1));
            let z = zero(c)?;
            hyp!(0, add(c, p, q)? == z);
            ok(*p == z, "p != zero")
        },
    ));
    v.push(check(
        "lemma:dividebytwo",
        "x + x = y + y -> x = y",
        CARD,
        &[("x", Frege(0)), ("y", Frege(0))],
        &["x + x inhabited (infinity presupposition)", "x + x = y + y"],
        |c, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            let xx = add(c, x, x)?;
            hyp!(0, inh(&xx));
            hyp!(1, xx == add(c, y, y)?);
            ok(x == y, "x != y")
        },
    ));
    v.push(check(
        "lemma:epluse",
        "e + e in F -> e+ in F",
        CARD,
        &[("e", Frege(0))],
        &["one inhabited (infinity presupposition)", "e + e in F"],
        |c, v| {
            let e = set(v, 0);
            hyp!(0, inh(&n(c, 1)?));
            hyp!(1, in_f(c, &add(c, e, e)?));
            ok(in_f(c, &succ(c, e)?), "e+ notin F")
        },
    ));
}

fn multiplication(v: &mut Vec<Check>) {
    const XYZ: &[(&str, Range)] = &[("x", Semi(0)), ("y", Semi(0)), ("z", Semi(0))];
    v.push(check(
        "lemma:successorSF",
        "x in SF -> x+ in SF",
        CARD,
        &[("x", Semi(0))],
        &[],
        |c, v| ok(in_sf(c, &succ(c, set(v, 0))?), "x+ notin SF"),
    ));
    v.push(check(
        "lemma:FsubsetSF",
        "F subset SF",
        CARD,
        &[("x", Frege(0))],
        &[],
        |c, v| ok(in_sf(c, set(v, 0)), "member of F outside SF"),
    ));
    v.push(check(
        "lemma:zero_or_successor",
        "x in SF -> x = zero | exists u in SF. u+ = x",
        CARD,
        &[("x", Semi(0))],
        &[],
        |c, v| {
            let x = set(v, 0);
            let found = *x == zero(c)?
                || c.a.semifinite(c.base)?.iter().any(|u| succ(c, u).is_ok_and(|s| s == *x));
            ok(found, "neither zero nor a successor")
        },
    ));
    v.push(check(
        "lemma:additionSF",
        "x, y in SF -> x + y in SF",
        CARD,
        &[("x", Semi(0)), ("y", Semi(0))],
        &[],
        |c, v| ok(in_sf(c, &add(c, set(v, 0), set(v, 1))?), "sum outside SF"),
    ));
    v.push(
        check(
            "lemma:multiplication1",
            "the intersection of all relations closed under the G clauses is stratified",
            NOLEVEL,
            &[],
            &[],
            |_, _| {
                stratifies(
                    "{ t : forall w. ((forall x. (x in SF -> <x, zero, zero> in w) & \
                     forall x. (x in SF -> <zero, x, zero> in w) & \
                     forall x. forall y. forall z. (<x, y, z> in w -> <x, succ(y), plus(z, x)> in w)) \
                     -> t in w) }",
                )
            },
        )
        .syntactic(),
    );
    v.push(check(
        "lemma:multiplication2",
        "<x,zero,zero>, <zero,x,zero> in G for x in SF; <x,y,z> in G -> <x,y+,z+x> in G",
        CARD,
        XYZ,
        &[],
        |c, v| {
            let (x, y, z) = (set(v, 0), set(v, 1), set(v, 2));
            let zr = zero(c)?;
            if !in_g(c, x, &zr, &zr)? || !in_g(c, &zr, x, &zr)? {
                return ok(false, "base triple missing");
            }
            if in_g(c, x, y, z)? && !in_g(c, x, &succ(c, y)?, &add(c, z, x)?)? {
                return ok(false, "not closed under the successor clause");
            }
            ok(true, "")
        },
    ));
    v.push(check(
        "lemma:multiplicationSF",
        "<x,y,z> in G -> x, y, z in SF",
        CARD,
        &[],
        &[],
        |c, _| {
            let g = c.a.mul_graph(c.base)?;
            ok(
                g.triples().all(|(x, y, z)| in_sf(c, x) && in_sf(c, y) && in_sf(c, z)),
                "triple component outside SF",
            )
        },
    ));
    v.push(check(
        "lemma:zero_or_successorG",
        "<x,y,z> in G -> z = zero | exists u in SF. u+ = z",
        CARD,
        XYZ,
        &["<x,y,z> in G"],
        |c, v| {
            let (x, y, z) = (set(v, 0), set(v, 1), set(v, 2));
            hyp!(0, in_g(c, x, y, z)?);
            let found = *z == zero(c)?
                || c.a.semifinite(c.base)?.iter().any(|u| succ(c, u).is_ok_and(|s| s == *z));
            ok(found, "z neither zero nor a successor")
        },
    ));
    v.push(check(
        "lemma:addstozero",
        "x, y in SF & x + y = zero -> x = zero & y = zero",
        CARD,
        &[("x", Semi(0)), ("y", Semi(0))],
        &["x + y = zero"],
        |c, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            let z = zero(c)?;
            hyp!(0, add(c, x, y)? == z);
            ok(*x == z && *y == z, "nonzero summand")
        },
    ));
    v.push(check(
        "lemma:multiplication3helper",
        "<zero,y,z> in G -> z = zero",
        CARD,
        &[("y", Semi(0)), ("z", Semi(0))],
        &["<zero,y,z> in G"],
        |c, v| {
            let (y, z) = (set(v, 0), set(v, 1));
            let zr = zero(c)?;
            hyp!(0, in_g(c, &zr, y, z)?);
            ok(*z == zr, "z != zero")
        },
    ));
    v.push(check(
        "lemma:multiplication3",
        "<x,y,z> in G: z = zero -> x = zero | y = zero; z != zero -> exists p,q,r in SF. \
         x = p+ & y = q+ & <x,q,r> in G & z = r + x = (r + p)+",
        CARD,
        XYZ,
        &["<x,y,z> in G"],
        |c, v| {
            let (x, y, z) = (set(v, 0), set(v, 1), set(v, 2));
            hyp!(0, in_g(c, x, y, z)?);
            let zr = zero(c)?;
            if *z == zr {
                return ok(*x == zr || *y == zr, "zero product of nonzero factors");
            }
            let sf = c.a.semifinite(c.base)?;
            for p in sf.iter().filter(|p| succ(c, p).is_ok_and(|s| s == *x)) {
                for q in sf.iter().filter(|q| succ(c, q).is_ok_and(|s| s == *y)) {
                    for r in sf {
                        if in_g(c, x, q, r)?
                            && *z == add(c, r, x)?
                            && *z == succ(c, &add(c, r, p)?)?
                        {
                            return ok(true, "");
                        }
                    }
                }
            }
            ok(false, "no decomposition p, q, r")
        },
    ));
    v.push(check(
        "lemma:inhabitedSF",
        "m in SF & m inhabited -> m in F",
        CARD,
        &[("m", Semi(0))],
        &["m inhabited"],
        |c, v| {
            let m = set(v, 0);
            hyp!(0, inh(m));
            ok(in_f(c, m), "inhabited SF member outside F")
        },
    ));
    v.push(check(
        "lemma:successorSFF",
        "x in SF & x+ in F -> x in F",
        CARD,
        &[("x", Semi(0))],
        &["x+ in F"],
        |c, v| {
            let x = set(v, 0);
            hyp!(0, in_f(c, &succ(c, x)?));
            ok(in_f(c, x), "x notin F")
        },
    ));
    v.push(check(
        "lemma:multiplication4",
        "y in F & <x,y,z> in G & <x,y,t> in G -> z = t",
        CARD,
        &[("y", Frege(0)), ("x", Semi(0)), ("z", Semi(0)), ("t", Semi(0))],
        &["<x,y,z> in G", "<x,y,t> in G"],
        |c, v| {
            let (y, x, z, t) = (set(v, 0), set(v, 1), set(v, 2), set(v, 3));
            hyp!(0, in_g(c, x, y, z)?);
            hyp!(1, in_g(c, x, y, t)?);
            ok(z == t, "G not functional")
        },
    ));
    v.push(check(
        "lemma:multhelper",
        "x in SF, y, y+ in F, x.y in SF, G single-valued at (x,y) -> x.y+ = x.y + x",
        CARD,
        &[("x", Semi(0)), ("y", Frege(0))],
        &["y+ in F", "x.y in SF", "G single-valued at (x,y)"],
        |c, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            let ys = succ(c, y)?;
            let xy = mul(c, x, y)?;
            hyp!(0, in_f(c, &ys));
            hyp!(1, in_sf(c, &xy));
            hyp!(2, graph_single_valued(c, x, y, &xy)?);
            ok(mul(c, x, &ys)? == add(c, &xy, x)?, "x.y+ != x.y + x")
        },
    ));
    v.push(check(
        "lemma:multhelper2",
        "x in SF, y, y+ in F, x.y in SF, G single-valued at (x,y) -> same at (x,y+)",
        CARD,
        &[("x", Semi(0)), ("y", Frege(0))],
        &["y+ in F", "x.y in SF", "G single-valued at (x,y)"],
        |c, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            let ys = succ(c, y)?;
            let xy = mul(c, x, y)?;
            hyp!(0, in_f(c, &ys));
            hyp!(1, in_sf(c, &xy));
            hyp!(2, graph_single_valued(c, x, y, &xy)?);
            let xys = mul(c, x, &ys)?;
            ok(in_sf(c, &xys) && graph_single_valued(c, x, &ys, &xys)?, "fails at (x,y+)")
        },
    ));
    v.push(check(
        "lemma:multiplication5",
        "x, y in F -> x.y in SF & forall z. (<x,y,z> in G <-> z = x.y)",
        CARD,
        &[("y", Frege(0)), ("x", Frege(0))],
        &[],
        |c, v| {
            let (y, x) = (set(v, 0), set(v, 1));
            let xy = mul(c, x, y)?;
            ok(in_sf(c, &xy) && graph_single_valued(c, x, y, &xy)?, "G not single-valued")
        },
    ));
    v.push(check(
        "lemma:mul_zeroNF",
        "x in SF -> x.zero = zero",
        CARD,
        &[("x", Semi(0))],
        &[],
        |c, v| ok(mul(c, set(v, 0), &zero(c)?)? == zero(c)?, "x.zero != zero"),
    ));
    v.push(check(
        "lemma:zero_mulNF",
        "x in F -> zero.x = zero",
        CARD,
        &[("x", Frege(0))],
        &[],
        |c, v| ok(mul(c, &zero(c)?, set(v, 0))? == zero(c)?, "zero.x != zero"),
    ));
    v.push(check(
        "theorem:multiplication",
        "x, y, y+ in F -> x.y+ = x.y + x",
        CARD,
        &[("x", Frege(0)), ("y", Frege(0))],
        &["y+ in F"],
        |c, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            let ys = succ(c, y)?;
            hyp!(0, in_f(c, &ys));
            ok(mul(c, x, &ys)? == add(c, &mul(c, x, y)?, x)?, "x.y+ != x.y + x")
        },
    ));
    v.push(check(
        "lemma:right_distributiveNF",
        "x, y, z, y + z in F -> x.(y + z) = x.y + x.z",
        CARD,
        &[("x", Frege(0)), ("y", Frege(0)), ("z", Frege(0))],
        &["y + z in F"],
        |c, v| {
            let (x, y, z) = (set(v, 0), set(v, 1), set(v, 2));
            let yz = add(c, y, z)?;
            hyp!(0, in_f(c, &yz));
            ok(mul(c, x, &yz)? == add(c, &mul(c, x, y)?, &mul(c, x, z)?)?, "not distributive")
        },
    ));
    v.push(check(
        "lemma:left_distributiveNF",
        "x, y, z, x + y in F -> (x + y).z = x.z + y.z",
        CARD,
        &[("x", Frege(0)), ("y", Frege(0)), ("z", Frege(0))],
        &["x + y in F"],
        |c, v| {
            let (x, y, z) = (set(v, 0), set(v, 1), set(v, 2));
            let xy = add(c, x, y)?;
            hyp!(0, in_f(c, &xy));
            ok(mul(c, &xy, z)? == add(c, &mul(c, x, z)?, &mul(c, y, z)?)?, "not distributive")
        },
    ));
    v.push(check(
        "lemma:one_mulNF",
        "x in F -> one.x = x",
        CARD,
        &[("x", Frege(0))],
        &[],
        |c, v| ok(mul(c, &n(c, 1)?, set(v, 0))? == *set(v, 0), "one.x != x"),
    ));
    v.push(check(
        "lemma:mul_oneNF",
        "x in F -> x.one = x",
        CARD,
        &[("x", Frege(0))],
        &[],
        |c, v| ok(mul(c, set(v, 0), &n(c, 1)?)? == *set(v, 0), "x.one != x"),
    ));
    v.push(check(
        "lemma:multiplication_commutative",
        "x, y in F -> x.y = y.x",
        CARD,
        &[("x", Frege(0)), ("y", Frege(0))],
        &[],
        |c, v| {
            let (x, y) = (set(v, 0), set(v, 1));
            ok(mul(c, x, y)? == mul(c, y, x)?, "not commutative")
        },
    ));
    v.push(check(
        "lemma:subtractionF",
        "x in SF & u in F & x + u in F -> x in F",
        CARD,
        &[("x", Semi(0)), ("u", Frege(0))],
        &["x + u in F"],
        |c, v| {
            let (x, u) = (set(v, 0), set(v, 1));
            hyp!(0, in_f(c, &add(c, x, u)?));
            ok(in_f(c, x), "x notin F")
        },
    ));
    v.push(check(
        "lemma:assoc_helper",
        "y, z, z+ in F & y.z+ in F -> y.z in F",
        CARD,
        &[("y", Frege(0)), ("z", Frege(0))],
        &["z+ in F", "y.z+ in F"],
        |c, v| {
            let (y, z) = (set(v, 0), set(v, 1));
            let zs = succ(c, z)?;
            hyp!(0, in_f(c, &zs));
            hyp!(1, in_f(c, &mul(c, y, &zs)?));
            ok(in_f(c, &mul(c, y, z)?), "y.z notin F")
        },
    ));
    v.push(check(
        "lemma:multiplication_associative",
        "x, y, z, x.y, y.z in F -> x.(y.z) = (x.y).z",
        CARD,
        &[("x", Frege(0)), ("y", Frege(0)), ("z", Frege(0))],
        &["x.y in F", "y.z in F"],
        |c, v| {
            let (x, y, z) = (set(v, 0), set(v, 1), set(v, 2));
            let (xy, yz) = (mul(c, x, y)?, mul(c, y, z)?);
            hyp!(0, in_f(c, &xy));
            hyp!(1, in_f(c, &yz));
            ok(mul(c, x, &yz)? == mul(c, &xy, z)?, "not associative")
        },
    ));
    v.push(check(
        "lemma:timestwo",
        "x in F -> x + x = x.two",
        CARD,
        &[("x", Frege(0))],
        &[],
        |c, v| {
            let x = set(v, 0);
            ok(add(c, x, x)? == mul(c, x, &n(c, 2)?)?, "x + x != x.two")
        },
    ));
    v.push(check(
        "lemma:exp_sum",
        "p, q, p + q, 2^(p+q) in F -> 2^p, 2^q, 2^p.2^q in F & 2^(p+q) = 2^p.2^q",
        C3,
        &[("p", Frege(0)), ("q", Frege(0))],
        &["p + q in F", "2^(p+q) in F"],
        |c, v| {
            let (p, q) = (set(v, 0), set(v, 1));
            let pq = add(c, p, q)?;
            hyp!(0, in_f(c, &pq));
            let e = exp(c, &pq)?;
            hyp!(1, in_f(c, &e));
            let (ep, eq) = (exp(c, p)?, exp(c, q)?);
            let prod = mul(c, &ep, &eq)?;
            ok(
                in_f(c, &ep) && in_f(c, &eq) && in_f(c, &prod) && e == prod,
                "2^(p+q) != 2^p.2^q",
            )
        },
    ));
}

fn t_operator(v: &mut Vec<Check>) {
    v.push(check(
        "lemma:Tmembers",
        "k in F -> (x in k <-> USC(x) in T k)",
        C2,
        &[("k", Frege(0)), ("x", Elems(-1))],
        &[],
        |c, v| {
            let (k, x) = (set(v, 0), set(v, 1));
            let tk = t(c, k)?;
            let ux = idx(c, &sv(c.u.usc(x)?))?;
            ok(k.contains(idx(c, obj(v, 1))?) == tk.contains(ux), "membership not transported")
        },
    ));
    v.push(check(
        "lemma:T",
        "k in F & x in k -> T k = Nc(USC(x))",
        C2,
        &[("k", Frege(0)), ("x", Members(0))],
        &[],
        |c, v| {
            let (k, x) = (set(v, 0), set(v, 1));
            ok(t(c, k)? == nc(c, &c.u.usc(x)?)?, "T k != Nc(USC(x))")
        },
    ));
    v.push(check(
        "lemma:Ncdef",
        "k in F & x in k -> k = Nc(x)",
        CARD,
        &[("k", Frege(0)), ("x", Members(0))],
        &[],
        |c, v| ok(*set(v, 0) == nc(c, set(v, 1))?, "k != Nc(x)"),
    ));
    v.push(check(
        "lemma:SpeckerT",
        "Nc(x) in F -> T(Nc(x)) = Nc(USC(x))",
        C2,
        &[("x", Elems(-1))],
        &["Nc(x) in F"],
        |c, v| {
            let x = set(v, 0);
            let k = nc(c, x)?;
            hyp!(0, in_f(c, &k));
            ok(t(c, &k)? == nc(c, &c.u.usc(x)?)?, "T(Nc(x)) != Nc(USC(x))")
        },
    ));
    v.push(check(
        "lemma:Tfinite",
        "m in F -> T m in F",
        C2,
        &[("m", Frege(0))],
        &[],
        |c, v| ok(in_f(c, &t(c, set(v, 0))?), "T m notin F"),
    ));
    v.push(check(
        "lemma:Nc_unitclass",
        "Nc({x}) = one",
        CARD,
        &[("x", Elems(-2))],
        &[],
        |c, v| ok(nc(c, &c.u.mk_singleton(obj(v, 0))?)? == n(c, 1)?, "Nc({x}) != one"),
    ));
    v.push(check(
        "lemma:Tsuccessor",
        "m in F & m+ inhabited -> T(m+) = (T m)+",
        C2,
        &[("m", Frege(0))],
        &["m+ inhabited"],
        |c, v| {
            let m = set(v, 0);
            let ms = succ(c, m)?;
            hyp!(0, inh(&ms));
            ok(t(c, &ms)? == succ(c, &t(c, m)?)?, "T(m+) != (T m)+")
        },
    ));
    v.push(check("lemma:Tzero", "T(zero) = zero", C2, &[], &[], |c, _| {
        ok(t(c, &zero(c)?)? == c.a.zero(c.base + 1)?, "T(zero) != zero")
    }));
    v.push(check("lemma:Tone", "T(one) = one", C2, &[], &["one inhabited"], |c, _| {
        let one = n(c, 1)?;
        hyp!(0, inh(&one));
        ok(t(c, &one)? == n_at(c, c.base + 1, 1)?, "T(one) != one")
    }));
    v.push(check("lemma:Ttwo", "T(two) = two", C2, &[], &["two inhabited"], |c, _| {
        let two = n(c, 2)?;
        hyp!(0, inh(&two));
        ok(t(c, &two)? == n_at(c, c.base + 1, 2)?, "T(two) != two")
    }));
    v.push(check(
        "lemma:Torder",
        "n < m -> T n < T m",
        C2,
        &[("n", Frege(0)), ("m", Frege(0))],
        &["n < m"],
        |c, v| {
            let (nn, m) = (set(v, 0), set(v, 1));
            hyp!(0, lt(c, nn, m)?);
            ok(lt(c, &t(c, nn)?, &t(c, m)?)?, "T n < T m fails")
        },
    ));
    v.push(check(
        "lemma:Tsum",
        "n + m in F -> T(n + m) = T n + T m",
        C2,
        &[("n", Frege(0)), ("m", Frege(0))],
        &["n + m in F"],
        |c, v| {
            let (nn, m) = (set(v, 0), set(v, 1));
            let s = add(c, nn, m)?;
            hyp!(0, in_f(c, &s));
            ok(t(c, &s)? == add(c, &t(c, nn)?, &t(c, m)?)?, "T not additive")
        },
    ));
    v.push(check(
        "lemma:expT_inhabited",
        "m in F -> 2^(T m) inhabited",
        C2,
        &[("m", Frege(0))],
        &[],
        |c, v| ok(inh(&exp(c, &t(c, set(v, 0))?)?), "2^(T m) empty"),
    ));
    v.push(check(
        "lemma:expTinF",
        "m in F -> 2^(T m) in F",
        C2,
        &[("m", Frege(0))],
        &[],
        |c, v| ok(in_f(c, &exp(c, &t(c, set(v, 0))?)?), "2^(T m) notin F"),
    ));
    v.push(check(
        "lemma:successorT",
        "m in F -> (T m)+ in F",
        C2,
        &[("m", Frege(0))],
        &[],
        |c, v| ok(in_f(c, &succ(c, &t(c, set(v, 0))?)?), "(T m)+ notin F"),
    ));
    v.push(
        check(
            "lemma:expT",
            "m in F & 2^m inhabited -> 2^(T m) = T(2^m)",
            C3,
            &[("m", Frege(0))],
            &["2^m inhabited"],
            |c, v| {
                let m = set(v, 0);
                let e = exp(c, m)?;
                hyp!(0, inh(&e));
                let lhs = c.a.exp2_red(&c.a.t_red(m)?)?;
                let rhs = c.a.t_red(&e)?;
                ok(c.a.red_eq(&lhs, &rhs).holds(), "2^(T m) != T(2^m)")
            },
        )
        .reduced(),
    );
    v.push(check(
        "lemma:Toneone",
        "T n = T m -> n = m",
        C2,
        &[("n", Frege(0)), ("m", Frege(0))],
        &["T n = T m"],
        |c, v| {
            let (nn, m) = (set(v, 0), set(v, 1));
            hyp!(0, t(c, nn)? == t(c, m)?);
            ok(nn == m, "T not one-to-one")
        },
    ));
    v.push(check(
        "lemma:fivepointthree_converse",
        "T a + T b in F & T a + T b = T c -> a + b = c",
        C2,
        &[("a", Frege(0)), ("b", Frege(0)), ("c", Frege(0))],
        &["T a + T b in F", "T a + T b = T c"],
        |cx, v| {
            let (a, b, c) = (set(v, 0), set(v, 1), set(v, 2));
            let s = add(cx, &t(cx, a)?, &t(cx, b)?)?;
            hyp!(0, in_f(cx, &s));
            hyp!(1, s == t(cx, c)?);
            ok(add(cx, a, b)? == *c, "a + b != c")
        },
    ));
    v.push(check(
        "lemma:Tlessthan",
        "n < m <-> T n < T m",
        C2,
        &[("n", Frege(0)), ("m", Frege(0))],
        &[],
        |c, v| {
            let (nn, m) = (set(v, 0), set(v, 1));
            ok(lt(c, nn, m)? == lt(c, &t(c, nn)?, &t(c, m)?)?, "T changes <")
        },
    ));
    v.push(check(
        "lemma:Tonto",
        "p < T q -> exists r in F. p = T r",
        C2,
        &[("p", Frege(1)), ("q", Frege(0))],
        &["p < T q"],
        |c, v| {
            let (p, q) = (set(v, 0), set(v, 1));
            hyp!(0, lt(c, p, &t(c, q)?)?);
            ok(frege_any(c, c.base, |r| Ok(t(c, r)? == *p))?, "p not in the range of T")
        },
    ));
    v.push(check(
        "lemma:Tinexp",
        "p in F & 2^p inhabited -> exists q in F. p = T q",
        C2,
        &[("p", Frege(1))],
        &["2^p inhabited"],
        |c, v| {
            let p = set(v, 0);
            hyp!(0, inh(&exp(c, p)?));
            ok(frege_any(c, c.base, |q| Ok(t(c, q)? == *p))?, "p not in the range of T")
        },
    ));
    v.push(check(
        "lemma:Teven",
        "T c = a + a & a + a in F -> exists b in F. c = b + b",
        C2,
        &[("c", Frege(0)), ("a", Frege(1))],
        &["a + a in F", "T c = a + a"],
        |cx, v| {
            let (c, a) = (set(v, 0), set(v, 1));
            let aa = add(cx, a, a)?;
            hyp!(0, in_f(cx, &aa));
            hyp!(1, t(cx, c)? == aa);
            ok(frege_any(cx, cx.base, |b| Ok(add(cx, b, b)? == *c))?, "c is not even")
        },
    ));
    v.push(check(
        "lemma:expandT",
        "p in F -> (2^p in F <-> exists q in F. p = T q)",
        C2,
        &[("p", Frege(1))],
        &[],
        |c, v| {
            let p = set(v, 0);
            let lhs = in_f(c, &exp(c, p)?);
            ok(lhs == frege_any(c, c.base, |q| Ok(t(c, q)? == *p))?, "range of T differs")
        },
    ));
}

fn products(v: &mut Vec<Check>) {
    v.push(
        check(
            "lemma:productfinite_helper",
            "A decidable, Y finite subset A, a in A -> {a} x Y finite & T^2 Nc(Y) = Nc({a} x Y)",
            S1,
            &[("A", Elems(0)), ("Y", Subsets(0)), ("a", Members(0))],
            &["A decidable", "Y finite"],
            |c, v| {
                let (aa, y) = (set(v, 0), set(v, 1));
                let a = idx(c, obj(v, 2))?;
                hyp!(0, c.u.has_dec_eq(aa));
                hyp!(1, c.u.is_finite(y));
                let single = c.u.set_of(1, [a])?;
                let p = c.u.product(&single, y)?;
                if !c.u.is_finite(&p) {
                    return ok(false, "{a} x Y not finite");
                }
                let lhs = c.a.t_red(&t(c, &nc(c, y)?)?)?;
                let rhs = c.a.nc_red(&p)?;
                if !c.a.red_eq(&lhs, &rhs).holds() {
                    return ok(false, "T^2 Nc(Y) != Nc({a} x Y)");
                }
                // {{y}} goes to <a,y>
                let uu = c.u.usc(&c.u.usc(y)?)?;
                let f = FuncView::from_fn(&uu, |m| {
                    let inner = m.trailing_zeros() as usize;
                    opair_index(a, inner.trailing_zeros() as usize)
                });
                ok(f.is_similarity(&uu, &p), "USC(USC(Y)) ~ {a} x Y witness fails")
            },
        )
        .reduced(),
    );
    v.push(
        check(
            "lemma:productfinite",
            "A decidable, X, Y finite subsets of A -> X x Y finite & T^2 Nc(X) . T^2 Nc(Y) = Nc(X x Y)",
            S1,
            &[("A", Elems(0)), ("X", Subsets(0)), ("Y", Subsets(0))],
            &["A decidable", "X, Y finite"],
            |c, v| {
                let (aa, x, y) = (set(v, 0), set(v, 1), set(v, 2));
                hyp!(0, c.u.has_dec_eq(aa));
                hyp!(1, c.u.is_finite(x) && c.u.is_finite(y));
                let p = c.u.product(x, y)?;
                if !c.u.is_finite(&p) {
                    return ok(false, "X x Y not finite");
                }
                let tx = c.a.t_red(&t(c, &nc(c, x)?)?)?;
                let ty = c.a.t_red(&t(c, &nc(c, y)?)?)?;
                let lhs = c.a.mul_red(&tx, &ty)?;
                let rhs = c.a.nc_red(&p)?;
                // every pair decodes back to its components
                let decoded = p.members().all(|k| {
                    decode_opair_index(k).is_some_and(|(i, j)| x.contains(i) && y.contains(j))
                });
                ok(decoded && c.a.red_eq(&lhs, &rhs).holds(), "T^2 k . T^2 m != Nc(X x Y)")
            },
        )
        .reduced(),
    );
}

fn one_to_one(v: &mut Vec<Check>) {
    v.push(check(
        "lemma:finitefunction",
        "X in FINITE & f: X -> X & dom(f) = X & Rel(f) -> f in FINITE",
        S1,
        &[("X", Elems(0)), ("f", Rel(0, 0))],
        &["X finite", "f: X -> X", "dom(f) = X"],
        |c, v| {
            let (x, fs) = (set(v, 0), set(v, 1));
            let f = FuncView::from_setval(fs);
            hyp!(0, c.u.is_finite(x));
            hyp!(1, f.maps(x, x));
            hyp!(2, c.u.dom(fs)? == *x);
            ok(c.u.is_finite(fs), "f not finite")
        },
    ));
    v.push(check(
        "lemma:decidable_preimage",
        "X finite, f: X -> X, dom(f) = X -> for y in X, a preimage exists or not",
        S1,
        &[("X", Elems(0)), ("f", Rel(0, 0)), ("y", Members(0))],
        &["X finite", "f: X -> X", "dom(f) = X"],
        |c, v| {
            let (x, fs) = (set(v, 0), set(v, 1));
            let y = idx(c, obj(v, 2))?;
            let f = FuncView::from_setval(fs);
            hyp!(0, c.u.is_finite(x));
            hyp!(1, f.maps(x, x));
            hyp!(2, c.u.dom(fs)? == *x);
            let has = x.members().any(|a| f.contains(a, y));
            let hasnt = !x.members().any(|a| f.contains(a, y));
            ok(has || hasnt, "preimage undecided")
        },
    ));
    v.push(check(
        "theorem:dedekind1",
        "X finite & f: X -> X one-to-one -> f onto",
        S1,
        &[("X", Elems(0)), ("f", Rel(0, 0))],
        &["X finite", "f a function", "f: X -> X", "one-to-one"],
        |c, v| {
            let x = set(v, 0);
            let f = FuncView::from_setval(set(v, 1));
            hyp!(0, c.u.is_finite(x));
            hyp!(1, f.is_rel() && f.is_function());
            hyp!(2, f.maps(x, x));
            hyp!(3, f.is_one_one(x, x));
            ok(f.is_onto(x, x), "one-to-one map not onto")
        },
    ));
    v.push(check(
        "theorem:dedekind2",
        "X finite & f: X -> X onto & dom(f) subset X -> f one-to-one",
        S1,
        &[("X", Elems(0)), ("f", Rel(0, 0))],
        &["X finite", "f a function", "f: X -> X", "onto"],
        |c, v| {
            let x = set(v, 0);
            let f = FuncView::from_setval(set(v, 1));
            hyp!(0, c.u.is_finite(x));
            hyp!(1, f.is_rel() && f.is_function());
            hyp!(2, f.maps(x, x));
            hyp!(3, f.is_onto(x, x));
            ok(f.is_one_one(x, x), "onto map not one-to-one")
        },
    ));
    v.push(check(
        "lemma:adjoin_cardinality",
        "B in FINITE & a notin B -> Nc(B u {a}) = Nc(B)+",
        CARD,
        &[("B", Elems(-1)), ("a", Elems(-2))],
        &["B finite", "a not in B"],
        |c, v| {
            let b = set(v, 0);
            let a = idx(c, obj(v, 1))?;
            hyp!(0, c.u.is_finite(b));
            hyp!(1, !b.contains(a));
            ok(nc(c, &with(b, a))? == succ(c, &nc(c, b)?)?, "Nc(B u {a}) != Nc(B)+")
        },
    ));
}

fn segments(v: &mut Vec<Check>) {
    v.push(check(
        "lemma:Jsuccessor",
        "m, m+ in F -> J(m+) = J(m) u {m} & Jbar(m+) = Jbar(m) u {m+}",
        C2,
        &[("m", Frege(0))],
        &["m+ in F"],
        |c, v| {
            let m = set(v, 0);
            let ms = succ(c, m)?;
            hyp!(0, in_f(c, &ms));
            let j = with(&c.a.j_set(m)?, idx(c, &sv(m.clone()))?);
            let jb = with(&c.a.j_bar(m)?, idx(c, &sv(ms.clone()))?);
            ok(c.a.j_set(&ms)? == j && c.a.j_bar(&ms)? == jb, "segment recursion fails")
        },
    ));
    v.push(check(
        "lemma:Jfinite",
        "m in F -> J(m), Jbar(m) in FINITE",
        C2,
        &[("m", Frege(0))],
        &[],
        |c, v| {
            let m = set(v, 0);
            ok(
                c.u.is_finite(&c.a.j_set(m)?) && c.u.is_finite(&c.a.j_bar(m)?),
                "segment not finite",
            )
        },
    ));
    v.push(
        check(
            "lemma:Jcardinality",
            "m in F -> Nc(J(m)) = T^2 m",
            C2,
            &[("m", Frege(0))],
            &[],
            |c, v| {
                let m = set(v, 0);
                let lhs = c.a.nc_red(&c.a.j_set(m)?)?;
                let rhs = c.a.t_red(&t(c, m)?)?;
                ok(c.a.red_eq(&lhs, &rhs).holds(), "Nc(J(m)) != T^2 m")
            },
        )
        .reduced(),
    );
    v.push(
        check(
            "oracle:counting",
            "m in F -> J(m) has as many members as m's members have (T m = m up to level)",
            C2,
            &[("m", Frege(0))],
            &[],
            |c, v| {
                let m = set(v, 0);
                let size = c.a.sym_size(m)?.size;
                let j = c.a.j_set(m)?;
                let same_t = c.a.sym_size(&t(c, m)?)?.size == size;
                ok(same_t && SymSize::Finite(j.len() as u64) == size, "counting fails")
            },
        )
        .oracle(),
    );
}

fn oracles(v: &mut Vec<Check>) {
    fn twin(c: &Ctx, got: &SetVal, want: SymSize) -> R {
        let got = c.a.sym_size(got)?.size;
        ok(got == want, &format!("engine {got:?}, oracle {want:?}"))
    }
    fn size(c: &Ctx, x: &SetVal) -> Result<SymSize> {
        Ok(c.a.sym_size(x)?.size)
    }
    fn oracle(c: &Ctx) -> crate::cardinal::oracle::Oracle {
        crate::cardinal::oracle::Oracle::new(c.u.level_sizes())
    }
    v.push(
        check(
            "oracle:succ",
            "size(x+) = size(x) + 1, saturating",
            CARD,
            &[("x", Semi(0))],
            &[],
            |c, v| {
                let x = set(v, 0);
                twin(c, &succ(c, x)?, oracle(c).succ(c.base, size(c, x)?))
            },
        )
        .oracle(),
    );
    v.push(
        check(
            "oracle:add",
            "size(x + y) = size(x) + size(y), saturating",
            CARD,
            &[("x", Semi(0)), ("y", Semi(0))],
            &[],
            |c, v| {
                let (x, y) = (set(v, 0), set(v, 1));
                twin(c, &add(c, x, y)?, oracle(c).add(c.base, size(c, x)?, size(c, y)?))
            },
        )
        .oracle(),
    );
    v.push(
        check(
            "oracle:mul",
            "size(x.y) = size(x) * size(y), saturating, zero absorbing",
            CARD,
            &[("x", Semi(0)), ("y", Semi(0))],
            &[],
            |c, v| {
                let (x, y) = (set(v, 0), set(v, 1));
                twin(c, &mul(c, x, y)?, oracle(c).mul(c.base, size(c, x)?, size(c, y)?))
            },
        )
        .oracle(),
    );
    v.push(
        check(
            "oracle:exp2",
            "size(2^m) = 2^size(m) when m's members are unit classes of small sets",
            C3,
            &[("m", Semi(0))],
            &[],
            |c, v| {
                let m = set(v, 0);
                twin(c, &exp(c, m)?, oracle(c).exp2(c.base, size(c, m)?))
            },
        )
        .oracle(),
    );
    v.push(
        check(
            "oracle:T",
            "size(T x) = size(x), one level up",
            C2,
            &[("x", Semi(0))],
            &[],
            |c, v| {
                let x = set(v, 0);
                twin(c, &t(c, x)?, oracle(c).t_op(c.base, size(c, x)?))
            },
        )
        .oracle(),
    );
    v.push(
        check(
            "oracle:le",
            "x <= y <-> size(x) <= size(y), both inhabited",
            CARD,
            &[("x", Semi(0)), ("y", Semi(0))],
            &[],
            |c, v| {
                let (x, y) = (set(v, 0), set(v, 1));
                ok(le(c, x, y)? == oracle(c).le(size(c, x)?, size(c, y)?), "order disagrees")
            },
        )
        .oracle(),
    );
}
