//! Proptest strategies for the full grammar, plus the brute-force
//! stratification oracle.

#![allow(dead_code)]

pub mod brute;
pub use brute::*;

use nf_forge::formula::{Const, FSym, Formula, Term};
use proptest::prelude::*;

fn name() -> impl Strategy<Value = String> {
    proptest::sample::select(&NAMES[..]).prop_map(str::to_string)
}

fn constant() -> impl Strategy<Value = Const> {
    proptest::sample::select(&Const::ALL[..])
}

fn fsym() -> impl Strategy<Value = FSym> {
    proptest::sample::select(&FSym::ALL[..])
}

/// Terms over the full signature; comprehension bodies come from `body`.
fn term_with(body: BoxedStrategy<Formula>, depth: u32) -> BoxedStrategy<Term> {
    let leaf = prop_oneof![
        3 => name().prop_map(Term::Var),
        1 => constant().prop_map(Term::Const),
    ];
    leaf.prop_recursive(depth, 24, 3, move |t| {
        prop_oneof![
            3 => (fsym(), proptest::collection::vec(t, 3)).prop_map(|(f, mut args)| {
                args.truncate(f.arity());
                Term::App(f, args)
            }),
            1 => (name(), body.clone()).prop_map(|(v, b)| Term::Compr(v, Box::new(b))),
        ]
    })
    .boxed()
}

pub fn arb_term(depth: u32) -> BoxedStrategy<Term> {
    term_with(arb_formula(depth.saturating_sub(1)), depth)
}

/// Formulas over the full signature with nesting depth at most `depth`.
pub fn arb_formula(depth: u32) -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        4 => (name(), name()).prop_map(|(a, b)| Formula::Mem(Term::Var(a), Term::Var(b))),
        1 => Just(Formula::Truth),
        1 => Just(Formula::Falsity),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        let t = term_with(inner.clone(), 2);
        prop_oneof![
            3 => (t.clone(), t.clone()).prop_map(|(a, b)| Formula::Mem(a, b)),
            2 => (t.clone(), t).prop_map(|(a, b)| Formula::Eq(a, b)),
            1 => inner.clone().prop_map(Formula::not),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::iff(a, b)),
            1 => (name(), inner.clone()).prop_map(|(v, b)| Formula::forall(&v, b)),
            1 => (name(), inner).prop_map(|(v, b)| Formula::exists(&v, b)),
        ]
    })
    .boxed()
}

