//! Abstract syntax for the two-predicate set-theory language, with a
//! precedence-aware printer. The concrete grammar lives in [`parser`].

mod parser;

pub mod corpus;

use std::collections::BTreeSet;
use std::fmt;

pub use parser::{parse_formula, parse_term, ParseError};

/// Named constants of the language.
///
/// The numerals and `Lambda`/`V` are closed terms whose index floats freely
/// per occurrence. The remaining constants name fixed classes that the
/// stratifier treats like parameters (see [`Const::is_class`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Const {
    Lambda,
    V,
    Zero,
    One,
    Two,
    Three,
    Four,
    Fin,
    Dec,
    Ffin,
    Sf,
    Ggraph,
}

impl Const {
    pub const ALL: [Const; 12] = [
        Const::Lambda,
        Const::V,
        Const::Zero,
        Const::One,
        Const::Two,
        Const::Three,
        Const::Four,
        Const::Fin,
        Const::Dec,
        Const::Ffin,
        Const::Sf,
        Const::Ggraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Const::Lambda => "Lambda",
            Const::V => "V",
            Const::Zero => "zero",
            Const::One => "one",
            Const::Two => "two",
            Const::Three => "three",
            Const::Four => "four",
            Const::Fin => "FIN",
            Const::Dec => "DEC",
            Const::Ffin => "Ffin",
            Const::Sf => "SF",
            Const::Ggraph => "Ggraph",
        }
    }

    pub fn from_name(s: &str) -> Option<Const> {
        let c = match s {
            "Lambda" => Const::Lambda,
            "V" => Const::V,
            "zero" => Const::Zero,
            "one" => Const::One,
            "two" => Const::Two,
            "three" => Const::Three,
            "four" => Const::Four,
            "FIN" | "FINITE" => Const::Fin,
            "DEC" | "DECIDABLE" => Const::Dec,
            "Ffin" => Const::Ffin,
            "SF" => Const::Sf,
            "Ggraph" => Const::Ggraph,
            _ => return None,
        };
        Some(c)
    }

    /// Class constants (FINITE, DECIDABLE, the finite cardinals, SF and the
    /// multiplication graph) share one index per formula, like a free variable.
    pub fn is_class(self) -> bool {
        matches!(
            self,
            Const::Fin | Const::Dec | Const::Ffin | Const::Sf | Const::Ggraph
        )
    }
}

/// Function symbols of the extended language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FSym {
    Singleton,
    UPair,
    OPair,
    OTriple,
    Union2,
    Inter2,
    Diff,
    BigUnion,
    Usc,
    Ssc,
    Sc,
    Nc,
    Succ,
    Plus,
    Times,
    Exp2,
    TOp,
    J,
    JBar,
    Prod,
    Image,
    Ap,
    Dom,
    Range,
}

impl FSym {
    pub const ALL: [FSym; 24] = [
        FSym::Singleton,
        FSym::UPair,
        FSym::OPair,
        FSym::OTriple,
        FSym::Union2,
        FSym::Inter2,
        FSym::Diff,
        FSym::BigUnion,
        FSym::Usc,
        FSym::Ssc,
        FSym::Sc,
        FSym::Nc,
        FSym::Succ,
        FSym::Plus,
        FSym::Times,
        FSym::Exp2,
        FSym::TOp,
        FSym::J,
        FSym::JBar,
        FSym::Prod,
        FSym::Image,
        FSym::Ap,
        FSym::Dom,
        FSym::Range,
    ];

    pub fn arity(self) -> usize {
        match self {
            FSym::Singleton
            | FSym::BigUnion
            | FSym::Usc
            | FSym::Ssc
            | FSym::Sc
            | FSym::Nc
            | FSym::Succ
            | FSym::Exp2
            | FSym::TOp
            | FSym::J
            | FSym::JBar
            | FSym::Dom
            | FSym::Range => 1,
            FSym::OTriple => 3,
            _ => 2,
        }
    }

    /// Name used in function-call syntax. Braces and angle brackets are
    /// used for the four pairing symbols, so they have no call name.
    pub fn call_name(self) -> Option<&'static str> {
        let s = match self {
            FSym::Singleton | FSym::UPair | FSym::OPair | FSym::OTriple => return None,
            FSym::Union2 => "union2",
            FSym::Inter2 => "inter2",
            FSym::Diff => "diff",
            FSym::BigUnion => "bigunion",
            FSym::Usc => "usc",
            FSym::Ssc => "ssc",
            FSym::Sc => "sc",
            FSym::Nc => "nc",
            FSym::Succ => "succ",
            FSym::Plus => "plus",
            FSym::Times => "times",
            FSym::Exp2 => "exp2",
            FSym::TOp => "T",
            FSym::J => "J",
            FSym::JBar => "Jbar",
            FSym::Prod => "prod",
            FSym::Image => "image",
            FSym::Ap => "ap",
            FSym::Dom => "dom",
            FSym::Range => "range",
        };
        Some(s)
    }

    pub fn from_call_name(s: &str) -> Option<FSym> {
        let f = match s {
            "union2" => FSym::Union2,
            "inter2" => FSym::Inter2,
            "diff" => FSym::Diff,
            "bigunion" => FSym::BigUnion,
            "usc" => FSym::Usc,
            "ssc" => FSym::Ssc,
            "sc" => FSym::Sc,
            "nc" => FSym::Nc,
            "succ" => FSym::Succ,
            "plus" => FSym::Plus,
            "times" => FSym::Times,
            "exp2" => FSym::Exp2,
            "T" | "t_op" => FSym::TOp,
            "J" | "j" => FSym::J,
            "Jbar" | "jbar" => FSym::JBar,
            "prod" => FSym::Prod,
            "image" => FSym::Image,
            "ap" => FSym::Ap,
            "dom" => FSym::Dom,
            "range" => FSym::Range,
            _ => return None,
        };
        Some(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(Const),
    App(FSym, Vec<Term>),
    /// `{ v : body }`, binding `v` in `body`.
    Compr(String, Box<Formula>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Mem(Term, Term),
    Eq(Term, Term),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
    Truth,
    Falsity,
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn app(f: FSym, args: Vec<Term>) -> Term {
        debug_assert_eq!(f.arity(), args.len());
        Term::App(f, args)
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                if !bound.iter().any(|b| b == v) {
                    out.insert(v.clone());
                }
            }
            Term::Const(_) => {}
            Term::App(_, args) => args.iter().for_each(|a| a.collect_free(bound, out)),
            Term::Compr(v, body) => {
                bound.push(v.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    fn collect_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Const(_) => {}
            Term::App(_, args) => args.iter().for_each(|a| a.collect_names(out)),
            Term::Compr(v, body) => {
                out.insert(v.clone());
                body.collect_names(out);
            }
        }
    }
}

impl Formula {
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn forall(v: &str, body: Formula) -> Formula {
        Formula::Forall(v.to_string(), Box::new(body))
    }

    pub fn exists(v: &str, body: Formula) -> Formula {
        Formula::Exists(v.to_string(), Box::new(body))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    /// Every variable name appearing in the formula, bound or free.
    pub fn all_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Mem(a, b) | Formula::Eq(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                bound.push(v.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
            Formula::Truth | Formula::Falsity => {}
        }
    }

    fn collect_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Mem(a, b) | Formula::Eq(a, b) => {
                a.collect_names(out);
                b.collect_names(out);
            }
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_names(out);
                b.collect_names(out);
            }
            Formula::Not(a) => a.collect_names(out),
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                out.insert(v.clone());
                body.collect_names(out);
            }
            Formula::Truth | Formula::Falsity => {}
        }
    }

    /// Free variables other than `eigen` whose every occurrence is the bare
    /// right operand of a membership atom. Such variables need no index when
    /// stratifying with respect to `eigen`.
    pub fn parameters_of(&self, eigen: &str) -> BTreeSet<String> {
        let mut occ = Occurrences::default();
        occ.formula(self, &mut Vec::new());
        self.free_vars()
            .into_iter()
            .filter(|v| v != eigen && occ.right_only(v))
            .collect()
    }

    /// Class constants whose every occurrence is the bare right operand of a
    /// membership atom.
    pub fn parameter_constants(&self) -> BTreeSet<Const> {
        let mut occ = Occurrences::default();
        occ.formula(self, &mut Vec::new());
        Const::ALL
            .into_iter()
            .filter(|c| c.is_class() && occ.const_right_only(*c))
            .collect()
    }

    /// Renames bound variables to `prefix0`, `prefix1`, ... in binding order.
    pub fn alpha_normalize(&self, prefix: &str) -> Formula {
        let mut counter = 0usize;
        rename_formula(self, &mut Vec::new(), prefix, &mut counter)
    }
}

#[derive(Default)]
struct Occurrences {
    // free variable name -> (right-of-in count, other count)
    vars: std::collections::BTreeMap<String, (usize, usize)>,
    consts: std::collections::BTreeMap<Const, (usize, usize)>,
}

impl Occurrences {
    fn right_only(&self, v: &str) -> bool {
        matches!(self.vars.get(v), Some((r, 0)) if *r > 0)
    }

    fn const_right_only(&self, c: Const) -> bool {
        matches!(self.consts.get(&c), Some((r, 0)) if *r > 0)
    }

    fn note(&mut self, t: &Term, bound: &[String], right: bool) {
        match t {
            Term::Var(v) if !bound.iter().any(|b| b == v) => {
                let e = self.vars.entry(v.clone()).or_default();
                if right {
                    e.0 += 1
                } else {
                    e.1 += 1
                }
            }
            Term::Var(_) => {}
            Term::Const(c) => {
                let e = self.consts.entry(*c).or_default();
                if right {
                    e.0 += 1
                } else {
                    e.1 += 1
                }
            }
            _ => self.term(t, &mut bound.to_vec()),
        }
    }

    fn term(&mut self, t: &Term, bound: &mut Vec<String>) {
        match t {
            Term::Var(_) | Term::Const(_) => self.note(t, bound, false),
            Term::App(_, args) => {
                for a in args {
                    self.note(a, bound, false);
                }
            }
            Term::Compr(v, body) => {
                bound.push(v.clone());
                self.formula(body, bound);
                bound.pop();
            }
        }
    }

    fn formula(&mut self, f: &Formula, bound: &mut Vec<String>) {
        match f {
            Formula::Mem(a, b) => {
                self.note(a, bound, false);
                self.note(b, bound, true);
            }
            Formula::Eq(a, b) => {
                self.note(a, bound, false);
                self.note(b, bound, false);
            }
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                self.formula(a, bound);
                self.formula(b, bound);
            }
            Formula::Not(a) => self.formula(a, bound),
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                bound.push(v.clone());
                self.formula(body, bound);
                bound.pop();
            }
            Formula::Truth | Formula::Falsity => {}
        }
    }
}

fn rename_term(t: &Term, scope: &mut Vec<(String, String)>, prefix: &str, n: &mut usize) -> Term {
    match t {
        Term::Var(v) => match scope.iter().rev().find(|(old, _)| old == v) {
            Some((_, new)) => Term::Var(new.clone()),
            None => t.clone(),
        },
        Term::Const(_) => t.clone(),
        Term::App(f, args) => Term::App(
            *f,
            args.iter().map(|a| rename_term(a, scope, prefix, n)).collect(),
        ),
        Term::Compr(v, body) => {
            let fresh = format!("{prefix}{n}");
            *n += 1;
            scope.push((v.clone(), fresh.clone()));
            let body = rename_formula(body, scope, prefix, n);
            scope.pop();
            Term::Compr(fresh, Box::new(body))
        }
    }
}

fn rename_formula(
    f: &Formula,
    scope: &mut Vec<(String, String)>,
    prefix: &str,
    n: &mut usize,
) -> Formula {
    let bin = |a: &Formula, b: &Formula, scope: &mut Vec<(String, String)>, n: &mut usize| {
        (
            Box::new(rename_formula(a, scope, prefix, n)),
            Box::new(rename_formula(b, scope, prefix, n)),
        )
    };
    match f {
        Formula::Mem(a, b) => Formula::Mem(
            rename_term(a, scope, prefix, n),
            rename_term(b, scope, prefix, n),
        ),
        Formula::Eq(a, b) => Formula::Eq(
            rename_term(a, scope, prefix, n),
            rename_term(b, scope, prefix, n),
        ),
        Formula::And(a, b) => {
            let (a, b) = bin(a, b, scope, n);
            Formula::And(a, b)
        }
        Formula::Or(a, b) => {
            let (a, b) = bin(a, b, scope, n);
            Formula::Or(a, b)
        }
        Formula::Implies(a, b) => {
            let (a, b) = bin(a, b, scope, n);
            Formula::Implies(a, b)
        }
        Formula::Iff(a, b) => {
            let (a, b) = bin(a, b, scope, n);
            Formula::Iff(a, b)
        }
        Formula::Not(a) => Formula::Not(Box::new(rename_formula(a, scope, prefix, n))),
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            let fresh = format!("{prefix}{n}");
            *n += 1;
            scope.push((v.clone(), fresh.clone()));
            let body = Box::new(rename_formula(body, scope, prefix, n));
            scope.pop();
            if matches!(f, Formula::Forall(..)) {
                Formula::Forall(fresh, body)
            } else {
                Formula::Exists(fresh, body)
            }
        }
        Formula::Truth | Formula::Falsity => f.clone(),
    }
}

// ---------------------------------------------------------------------------
// Printing

const PREC_IFF: u8 = 1;
const PREC_IMP: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_UNARY: u8 = 5;
const PREC_ATOM: u8 = 6;

/// Renders `f`, parenthesizing when its precedence is below `min_prec`, or
/// when `closed` is requested and the text would end in an open quantifier
/// body. Returns the text and whether it still ends open.
fn render_f(f: &Formula, min_prec: u8, closed: bool) -> (String, bool) {
    let (body, prec, open) = render_raw(f);
    if prec < min_prec || (closed && open) {
        (format!("({body})"), false)
    } else {
        (body, open)
    }
}

fn render_raw(f: &Formula) -> (String, u8, bool) {
    let binary = |a: &Formula, b: &Formula, op: &str, prec: u8, right_assoc: bool| {
        let lp = if right_assoc { prec + 1 } else { prec };
        let rp = if right_assoc { prec } else { prec + 1 };
        let (l, _) = render_f(a, lp, true);
        let (r, open) = render_f(b, rp, false);
        (format!("{l} {op} {r}"), prec, open)
    };
    match f {
        Formula::Mem(a, b) => (format!("{a} in {b}"), PREC_ATOM, false),
        Formula::Eq(a, b) => (format!("{a} = {b}"), PREC_ATOM, false),
        Formula::Truth => ("true".into(), PREC_ATOM, false),
        Formula::Falsity => ("false".into(), PREC_ATOM, false),
        Formula::Iff(a, b) => binary(a, b, "<->", PREC_IFF, true),
        Formula::Implies(a, b) => binary(a, b, "->", PREC_IMP, true),
        Formula::Or(a, b) => binary(a, b, "|", PREC_OR, false),
        Formula::And(a, b) => binary(a, b, "&", PREC_AND, false),
        Formula::Not(a) => {
            let (s, open) = render_f(a, PREC_UNARY, false);
            (format!("not {s}"), PREC_UNARY, open)
        }
        Formula::Forall(v, body) => {
            let (s, _) = render_f(body, 0, false);
            (format!("forall {v}. {s}"), PREC_UNARY, true)
        }
        Formula::Exists(v, body) => {
            let (s, _) = render_f(body, 0, false);
            (format!("exists {v}. {s}"), PREC_UNARY, true)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_f(self, 0, false).0)
    }
}

impl fmt::Display for Const {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(c) => write!(f, "{c}"),
            Term::App(FSym::Singleton, a) => write!(f, "{{{}}}", a[0]),
            Term::App(FSym::UPair, a) => write!(f, "{{{}, {}}}", a[0], a[1]),
            Term::App(FSym::OPair, a) => write!(f, "<{}, {}>", a[0], a[1]),
            Term::App(FSym::OTriple, a) => write!(f, "<{}, {}, {}>", a[0], a[1], a[2]),
            Term::App(sym, args) => {
                // call_name is Some for every non-bracket symbol
                write!(f, "{}(", sym.call_name().unwrap_or("?"))?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Term::Compr(v, body) => write!(f, "{{ {v} : {body} }}"),
        }
    }
}

/// Renders a formula; same as `to_string`.
pub fn render(f: &Formula) -> String {
    f.to_string()
}

/// Renders a term; same as `to_string`.
pub fn render_term(t: &Term) -> String {
    t.to_string()
}
