mod support;

use nf_forge::formula::{parse_formula, parse_term, Formula};
use nf_forge::stratify::{check_comprehension, stratify, stratify_wrt, Verdict};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{arb_formula, brute_stratified, brute_stratified_wrt, index_nodes, small_formula};

/// Draws `count` fragment formulas with at most six index nodes.
fn sample(seed: u64, count: usize) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let f = small_formula(&mut rng, 3);
        if index_nodes(&f) <= 6 {
            out.push(f);
        }
    }
    out
}

#[test]
fn solver_matches_brute_force() {
    let formulas = sample(7, 1000);
    let mut unstratified = 0;
    for f in &formulas {
        let got = stratify(f).verdict == Verdict::Stratified;
        assert_eq!(got, brute_stratified(f), "{f}");
        unstratified += usize::from(!got);
    }
    // both outcomes must be exercised
    assert!(unstratified > 50 && unstratified < 950, "{unstratified}");
}

#[test]
fn weak_solver_matches_brute_force() {
    for f in sample(11, 1000) {
        for eigen in ["x", "y"] {
            let got = stratify_wrt(&f, eigen).verdict != Verdict::Unstratified;
            assert_eq!(got, brute_stratified_wrt(&f, eigen), "{f} wrt {eigen}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn results_verify_against_their_constraints(f in arb_formula(6)) {
        let r = stratify(&f);
        prop_assert!(r.verify());
        if let Some(a) = &r.assignment {
            prop_assert_eq!(a.iter().copied().min().unwrap_or(0), 0);
        } else {
            prop_assert!(r.conflict_offset().is_some_and(|d| d != 0));
        }
    }

    #[test]
    fn solving_is_deterministic(f in arb_formula(6)) {
        let (a, b) = (stratify(&f), stratify(&f));
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.assignment, b.assignment);
    }

    #[test]
    fn verdict_is_invariant_under_bound_renaming(f in arb_formula(6), eigen in "[xyzuwf]") {
        let g = f.alpha_normalize("v_");
        prop_assert_eq!(stratify(&f).verdict, stratify(&g).verdict);
        let (rf, rg) = (stratify_wrt(&f, &eigen), stratify_wrt(&g, &eigen));
        prop_assert_eq!(rf.verdict, rg.verdict);
        prop_assert_eq!(rf.eigen_index, rg.eigen_index);
    }

    #[test]
    fn stratified_implies_weakly_stratified(f in arb_formula(6)) {
        if stratify(&f).verdict == Verdict::Stratified {
            for v in f.free_vars() {
                let r = stratify_wrt(&f, &v);
                prop_assert_eq!(r.verdict, Verdict::Stratified);
                prop_assert!(r.verify());
            }
        }
    }

    #[test]
    fn weak_results_verify(f in arb_formula(6), eigen in "[xyzuwf]") {
        prop_assert!(stratify_wrt(&f, &eigen).verify());
    }
}

fn compr(src: &str) -> nf_forge::stratify::StratResult {
    let r = check_comprehension(&parse_term(src).unwrap()).unwrap();
    assert!(r.verify(), "{src}");
    r
}

fn idx(r: &nf_forge::stratify::StratResult, v: &str) -> i64 {
    r.index_of(v).unwrap_or_else(|| panic!("no index for {v}"))
}

#[test]
fn addition_body_indices() {
    let r = compr("{ z : exists u. exists v. (u in x & v in y & inter2(u, v) = Lambda & z = union2(u, v)) }");
    assert_eq!(r.verdict, Verdict::Stratified);
    let z = idx(&r, "z");
    assert_eq!((idx(&r, "u"), idx(&r, "v")), (z, z));
    assert_eq!((idx(&r, "x"), idx(&r, "y")), (z + 1, z + 1));
    assert_eq!(r.term_index, Some(z + 1));
}

#[test]
fn exponent_body_indices() {
    let r = compr("{ u : exists a. (usc(a) in m & sim(u, ssc(a))) }");
    assert_eq!(r.verdict, Verdict::Stratified);
    let a = idx(&r, "a");
    assert_eq!(idx(&r, "u"), a + 1);
    assert_eq!(idx(&r, "m"), a + 2);
    // 2^m sits at the same index as m
    assert_eq!(r.term_index, Some(idx(&r, "m")));
}

#[test]
fn successor_body_indices() {
    let r = compr("{ x : exists z. exists a. (z in k & not (a in z) & x = union2(z, {a})) }");
    let a = idx(&r, "a");
    assert_eq!((idx(&r, "x"), idx(&r, "z"), idx(&r, "k")), (a + 1, a + 1, a + 2));
    assert_eq!(r.term_index, Some(idx(&r, "k")));
}

#[test]
fn unit_subclass_finiteness_is_weak() {
    let f = parse_formula("y in FIN -> usc(y) in FIN").unwrap();
    assert_eq!(stratify(&f).verdict, Verdict::Unstratified);
    let r = stratify_wrt(&f, "y");
    assert_eq!(r.verdict, Verdict::WeaklyStratified);
    assert_eq!(r.excluded, ["FIN"]);
}

#[test]
fn parameter_inside_a_function_argument_is_indexed() {
    // P occurs under usc, so it is not a parameter and the system stays cyclic
    let f = parse_formula("x in P & usc(x) in usc(P)").unwrap();
    assert!(f.parameters_of("x").is_empty());
    let f = parse_formula("x in P & {x} in P").unwrap();
    assert_eq!(stratify_wrt(&f, "x").verdict, Verdict::WeaklyStratified);
}

#[test]
fn conflict_cycles_compose_to_a_nonzero_offset() {
    for src in ["not (x in x)", "y = {x} & <x,y> in f", "x in y & y in z & z in x", "x = usc(x)"] {
        let r = stratify(&parse_formula(src).unwrap());
        assert_eq!(r.verdict, Verdict::Unstratified, "{src}");
        let cycle = r.conflict.as_ref().unwrap();
        assert!(!cycle.is_empty());
        assert_ne!(r.conflict_offset(), Some(0), "{src}");
    }
}
