//! A random formula fragment and a brute-force stratification oracle that
//! shares no code with the library's constraint generator or solver.

#![allow(dead_code)]

use nf_forge::formula::{Const, FSym, Formula, Term};
use rand::Rng;
use std::collections::BTreeMap;

pub const NAMES: [&str; 6] = ["x", "y", "z", "u", "w", "f"];

/// Random formulas whose atoms use only variables, `Lambda`, `FIN`,
/// singletons and unordered pairs. Every constraint these generate has an
/// offset of magnitude at most 1, so a satisfiable system over k ≤ 6 nodes
/// has a solution inside {0..6}^k.
pub fn small_formula(rng: &mut impl Rng, depth: u32) -> Formula {
    let pick = |rng: &mut dyn rand::RngCore| NAMES[rng.gen_range(0..4)].to_string();
    fn term(rng: &mut impl Rng, depth: u32, pick: &dyn Fn(&mut dyn rand::RngCore) -> String) -> Term {
        match rng.gen_range(0..10) {
            0 => Term::Const(Const::Lambda),
            1 => Term::Const(Const::Fin),
            2 | 3 if depth > 0 => Term::App(FSym::Singleton, vec![term(rng, depth - 1, pick)]),
            4 if depth > 0 => Term::App(
                FSym::UPair,
                vec![term(rng, depth - 1, pick), term(rng, depth - 1, pick)],
            ),
            _ => Term::Var(pick(rng)),
        }
    }
    fn go(rng: &mut impl Rng, depth: u32, pick: &dyn Fn(&mut dyn rand::RngCore) -> String) -> Formula {
        let choice = if depth == 0 { rng.gen_range(0..3) } else { rng.gen_range(0..10) };
        match choice {
            0 | 1 => Formula::Mem(term(rng, 1, pick), term(rng, 1, pick)),
            2 => Formula::Eq(term(rng, 1, pick), term(rng, 1, pick)),
            3 => Formula::not(go(rng, depth - 1, pick)),
            4 | 5 => Formula::and(go(rng, depth - 1, pick), go(rng, depth - 1, pick)),
            6 => Formula::or(go(rng, depth - 1, pick), go(rng, depth - 1, pick)),
            7 => Formula::iff(go(rng, depth - 1, pick), go(rng, depth - 1, pick)),
            8 => Formula::forall(&pick(rng), go(rng, depth - 1, pick)),
            _ => Formula::exists(&pick(rng), go(rng, depth - 1, pick)),
        }
    }
    go(rng, depth, &pick)
}

/// An index expression: node plus offset, or `None` for a term whose index
/// floats freely (it contains a numeral-like constant).
type Idx = Option<(usize, i64)>;

/// Independent constraint extraction for the `small_formula` fragment.
/// Node ids: one per binder occurrence and free variable, one per class
/// constant name, one per unordered-pair term.
struct Extract {
    nodes: usize,
    free: BTreeMap<String, usize>,
    classes: BTreeMap<Const, usize>,
    /// (left, left offset, right, right offset): idx(l)+lo = idx(r)+ro.
    eqs: Vec<(usize, i64, usize, i64)>,
    excluded_vars: Vec<String>,
    exclude_classes: bool,
}

impl Extract {
    fn fresh(&mut self) -> usize {
        self.nodes += 1;
        self.nodes - 1
    }

    fn term(&mut self, t: &Term, scope: &mut Vec<(String, usize)>) -> Idx {
        match t {
            Term::Var(v) => {
                if let Some((_, id)) = scope.iter().rev().find(|(n, _)| n == v) {
                    return Some((*id, 0));
                }
                let id = match self.free.get(v) {
                    Some(&id) => id,
                    None => {
                        let id = self.fresh();
                        self.free.insert(v.clone(), id);
                        id
                    }
                };
                Some((id, 0))
            }
            Term::Const(c) if c.is_class() => {
                let id = match self.classes.get(c) {
                    Some(&id) => id,
                    None => {
                        let id = self.fresh();
                        self.classes.insert(*c, id);
                        id
                    }
                };
                Some((id, 0))
            }
            Term::Const(_) => None,
            Term::App(FSym::Singleton, args) => self.term(&args[0], scope).map(|(n, o)| (n, o + 1)),
            Term::App(FSym::UPair, args) => {
                let a = self.term(&args[0], scope);
                let b = self.term(&args[1], scope);
                let id = self.fresh();
                for side in [a, b].into_iter().flatten() {
                    self.eqs.push((side.0, side.1, id, 0));
                }
                Some((id, 1))
            }
            _ => panic!("outside the generated fragment: {t}"),
        }
    }

    fn is_excluded_param(&self, t: &Term, scope: &[(String, usize)]) -> bool {
        match t {
            Term::Var(v) => {
                !scope.iter().any(|(n, _)| n == v) && self.excluded_vars.iter().any(|e| e == v)
            }
            Term::Const(c) => self.exclude_classes && c.is_class(),
            _ => false,
        }
    }

    fn formula(&mut self, f: &Formula, scope: &mut Vec<(String, usize)>) {
        match f {
            Formula::Mem(a, b) => {
                let ia = self.term(a, scope);
                if self.is_excluded_param(b, scope) {
                    return;
                }
                let ib = self.term(b, scope);
                if let (Some((na, oa)), Some((nb, ob))) = (ia, ib) {
                    self.eqs.push((na, oa + 1, nb, ob));
                }
            }
            Formula::Eq(a, b) => {
                if let (Some((na, oa)), Some((nb, ob))) = (self.term(a, scope), self.term(b, scope)) {
                    self.eqs.push((na, oa, nb, ob));
                }
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                self.formula(a, scope);
                self.formula(b, scope);
            }
            Formula::Not(a) => self.formula(a, scope),
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                let id = self.fresh();
                scope.push((v.clone(), id));
                self.formula(body, scope);
                scope.pop();
            }
            Formula::Truth | Formula::Falsity => {}
        }
    }
}

fn extract(f: &Formula, excluded_vars: Vec<String>, exclude_classes: bool) -> Extract {
    let mut e = Extract {
        nodes: 0,
        free: BTreeMap::new(),
        classes: BTreeMap::new(),
        eqs: Vec::new(),
        excluded_vars,
        exclude_classes,
    };
    e.formula(f, &mut Vec::new());
    e
}

/// Nodes the stratifier would create for `f`: variables, class constants
/// and pair terms. Singletons share their argument's node here, so this is
/// a lower bound on the solver's node count plus the singleton count.
pub fn index_nodes(f: &Formula) -> usize {
    let e = extract(f, Vec::new(), false);
    e.nodes + count_singletons(f)
}

fn count_singletons(f: &Formula) -> usize {
    fn t(x: &Term) -> usize {
        match x {
            Term::App(s, args) => {
                usize::from(*s == FSym::Singleton) + args.iter().map(t).sum::<usize>()
            }
            _ => 0,
        }
    }
    match f {
        Formula::Mem(a, b) | Formula::Eq(a, b) => t(a) + t(b),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            count_singletons(a) + count_singletons(b)
        }
        Formula::Not(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => count_singletons(a),
        Formula::Truth | Formula::Falsity => 0,
    }
}

/// Tries every assignment in {0..=max}^nodes.
fn brute(e: &Extract, max: i64) -> bool {
    let n = e.nodes;
    let mut a = vec![0i64; n];
    loop {
        if e.eqs.iter().all(|&(l, lo, r, ro)| a[l] + lo == a[r] + ro) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            a[i] += 1;
            if a[i] <= max {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

/// Brute-force stratifiability over indices {0..6}.
pub fn brute_stratified(f: &Formula) -> bool {
    brute(&extract(f, Vec::new(), false), 6)
}

/// Free variables other than `eigen` occurring only as the bare right
/// operand of membership, computed independently of the library.
pub fn brute_parameters(f: &Formula, eigen: &str) -> Vec<String> {
    fn term(t: &Term, bound: &mut Vec<String>, right: &mut Vec<String>, other: &mut Vec<String>) {
        match t {
            Term::Var(v) if !bound.contains(v) => other.push(v.clone()),
            Term::App(_, args) => args.iter().for_each(|a| term(a, bound, right, other)),
            Term::Compr(v, body) => {
                bound.push(v.clone());
                walk(body, bound, right, other);
                bound.pop();
            }
            _ => {}
        }
    }
    fn walk(f: &Formula, bound: &mut Vec<String>, right: &mut Vec<String>, other: &mut Vec<String>) {
        match f {
            Formula::Mem(a, b) => {
                term(a, bound, right, other);
                match b {
                    Term::Var(v) if !bound.contains(v) => right.push(v.clone()),
                    _ => term(b, bound, right, other),
                }
            }
            Formula::Eq(a, b) => {
                term(a, bound, right, other);
                term(b, bound, right, other);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                walk(a, bound, right, other);
                walk(b, bound, right, other);
            }
            Formula::Not(a) => walk(a, bound, right, other),
            Formula::Forall(v, a) | Formula::Exists(v, a) => {
                bound.push(v.clone());
                walk(a, bound, right, other);
                bound.pop();
            }
            Formula::Truth | Formula::Falsity => {}
        }
    }
    let (mut right, mut other) = (Vec::new(), Vec::new());
    walk(f, &mut Vec::new(), &mut right, &mut other);
    let mut out: Vec<String> = right
        .into_iter()
        .filter(|v| v != eigen && !other.contains(v))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn class_right_only(f: &Formula) -> bool {
    fn in_term(t: &Term) -> bool {
        match t {
            Term::Const(c) => c.is_class(),
            Term::App(_, args) => args.iter().any(in_term),
            _ => false,
        }
    }
    fn walk(f: &Formula) -> bool {
        match f {
            Formula::Mem(a, b) => !in_term(a) && !matches!(b, Term::App(_, args) if args.iter().any(in_term)),
            Formula::Eq(a, b) => !in_term(a) && !in_term(b),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                walk(a) && walk(b)
            }
            Formula::Not(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => walk(a),
            Formula::Truth | Formula::Falsity => true,
        }
    }
    walk(f)
}

/// Brute-force stratifiability with respect to `eigen`: the full system, or
/// the system with parameters (and right-only class constants) dropped.
pub fn brute_stratified_wrt(f: &Formula, eigen: &str) -> bool {
    if brute_stratified(f) {
        return true;
    }
    // FIN is the only class constant in the fragment
    let drop_classes = class_right_only(f);
    brute(&extract(f, brute_parameters(f, eigen), drop_classes), 6)
}
