//! Stratification and weak stratification by integer-offset constraint solving.

pub mod batch;
pub mod constraints;
pub mod solver;

use crate::formula::{Formula, Term};
use constraints::{generate, ConstraintSystem, Exclusions, IndexConstraint, Node, NodeKind};
use serde::Serialize;
use std::fmt;

pub use batch::{batch_check, BatchReport, RecordReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Stratified,
    WeaklyStratified,
    Unstratified,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Stratified => "Stratified",
            Verdict::WeaklyStratified => "WeaklyStratified",
            Verdict::Unstratified => "Unstratified",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StratResult {
    pub verdict: Verdict,
    pub nodes: Vec<Node>,
    /// Constraints of the system that was solved (or that failed).
    pub constraints: Vec<IndexConstraint>,
    /// One index per node; present unless unstratified.
    pub assignment: Option<Vec<i64>>,
    /// Cycle with nonzero net offset; present iff unstratified.
    pub conflict: Option<Vec<IndexConstraint>>,
    pub eigen_index: Option<i64>,
    /// Index of the comprehension term, for `check_comprehension`.
    pub term_index: Option<i64>,
    /// Names left out of the constraint graph.
    pub excluded: Vec<String>,
}

impl StratResult {
    fn from_system(sys: ConstraintSystem, ok: Verdict, eigen: Option<&str>, excluded: Vec<String>) -> Self {
        let solved = solver::solve(sys.nodes.len(), &sys.constraints);
        let eigen_node = eigen.and_then(|e| sys.free.get(e).copied());
        match solved {
            Ok(assignment) => StratResult {
                verdict: ok,
                eigen_index: eigen_node.map(|n| assignment[n]),
                assignment: Some(assignment),
                conflict: None,
                nodes: sys.nodes,
                constraints: sys.constraints,
                term_index: None,
                excluded,
            },
            Err(cycle) => StratResult {
                verdict: Verdict::Unstratified,
                conflict: Some(cycle.iter().map(|&i| sys.constraints[i].clone()).collect()),
                assignment: None,
                eigen_index: None,
                nodes: sys.nodes,
                constraints: sys.constraints,
                term_index: None,
                excluded,
            },
        }
    }

    pub fn is_unstratified(&self) -> bool {
        self.verdict == Verdict::Unstratified
    }

    /// Index of the first variable node labelled `name`, free nodes first.
    pub fn index_of(&self, name: &str) -> Option<i64> {
        let a = self.assignment.as_ref()?;
        let pick = |kind| {
            self.nodes
                .iter()
                .position(|n| n.kind == kind && n.label == name)
        };
        pick(NodeKind::FreeVar)
            .or_else(|| pick(NodeKind::BoundVar))
            .or_else(|| pick(NodeKind::Const))
            .map(|i| a[i])
    }

    /// Re-checks every constraint against the assignment.
    pub fn verify(&self) -> bool {
        match (&self.assignment, &self.conflict) {
            (Some(a), None) => {
                self.constraints.iter().all(|c| c.holds(a)) && a.iter().all(|&i| i >= 0)
            }
            (None, Some(cycle)) => matches!(solver::cycle_net_offset(cycle), Some(d) if d != 0),
            _ => false,
        }
    }

    pub fn conflict_offset(&self) -> Option<i64> {
        solver::cycle_net_offset(self.conflict.as_ref()?)
    }

    pub fn describe_constraint(&self, c: &IndexConstraint) -> String {
        let l = &self.nodes[c.left].label;
        let r = &self.nodes[c.right].label;
        match c.offset {
            0 => format!("[{l}] = [{r}]  ({})", c.origin),
            o if o > 0 => format!("[{l}] = [{r}] + {o}  ({})", c.origin),
            o => format!("[{l}] = [{r}] - {}  ({})", -o, c.origin),
        }
    }

    /// One-line summary: variable indices on success, the cycle on failure.
    pub fn detail(&self) -> String {
        if let Some(cycle) = &self.conflict {
            let parts: Vec<String> = cycle.iter().map(|c| self.describe_constraint(c)).collect();
            let net = self.conflict_offset().unwrap_or(0);
            return format!("cycle net {net:+}: {}", parts.join("; "));
        }
        let Some(a) = &self.assignment else {
            return String::new();
        };
        let mut parts: Vec<String> = self
            .nodes
            .iter()
            .zip(a)
            .filter(|(n, _)| matches!(n.kind, NodeKind::FreeVar | NodeKind::BoundVar))
            .map(|(n, i)| format!("{}={i}", n.label))
            .collect();
        if !self.excluded.is_empty() {
            parts.push(format!("params={}", self.excluded.join(",")));
        }
        parts.join(" ")
    }
}

/// Plain stratification: every variable and class constant is indexed.
pub fn stratify(f: &Formula) -> StratResult {
    let sys = generate(f, &Exclusions::default());
    StratResult::from_system(sys, Verdict::Stratified, None, Vec::new())
}

/// Stratification with respect to `eigen`. Parameters (free variables other
/// than `eigen`, and class constants, occurring only as the bare right
/// operand of membership) are dropped when the full system is unsatisfiable.
pub fn stratify_wrt(f: &Formula, eigen: &str) -> StratResult {
    let full = generate(f, &Exclusions::default());
    let res = StratResult::from_system(full, Verdict::Stratified, Some(eigen), Vec::new());
    if !res.is_unstratified() {
        return res;
    }
    let ex = Exclusions {
        vars: f.parameters_of(eigen),
        consts: f.parameter_constants(),
    };
    let mut excluded: Vec<String> = ex.vars.iter().cloned().collect();
    excluded.extend(ex.consts.iter().map(|c| c.name().to_string()));
    let sys = generate(f, &ex);
    StratResult::from_system(sys, Verdict::WeaklyStratified, Some(eigen), excluded)
}

/// Checks a comprehension term `{ v : body }` by stratifying `body` with
/// respect to `v`. Returns `None` if `t` is not a comprehension.
pub fn check_comprehension(t: &Term) -> Option<StratResult> {
    let Term::Compr(v, body) = t else {
        return None;
    };
    let mut res = stratify_wrt(body, v);
    res.term_index = res.eigen_index.map(|i| i + 1);
    Some(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, parse_term};

    const OPAIR_DEF: &str =
        "u in z <-> (forall w. (w in u -> w = x)) | (forall w. (w in u -> (w = x | w = y)))";

    #[test]
    fn ordered_pair_definition_is_stratified() {
        let f = parse_formula(&format!("forall u. ({OPAIR_DEF})")).unwrap();
        let r = stratify(&f);
        assert_eq!(r.verdict, Verdict::Stratified);
        let (x, y, z) = (r.index_of("x").unwrap(), r.index_of("y").unwrap(), r.index_of("z").unwrap());
        assert_eq!(z, x + 2);
        assert_eq!(z, y + 2);
        assert!(r.verify());
    }

    #[test]
    fn russell_and_singleton_graph_fail() {
        let r = stratify(&parse_formula("not (x in x)").unwrap());
        assert_eq!(r.verdict, Verdict::Unstratified);
        assert_eq!(r.conflict_offset(), Some(1));
        let r = stratify(&parse_formula("y = {x} & <x,y> in f").unwrap());
        assert_eq!(r.verdict, Verdict::Unstratified);
        assert!(r.conflict_offset().unwrap() != 0);
        assert!(r.verify());
    }

    #[test]
    fn finitepowerset_formula_is_weakly_stratified() {
        let f = parse_formula("x in FIN -> ssc(x) in FIN").unwrap();
        assert_eq!(stratify(&f).verdict, Verdict::Unstratified);
        let r = stratify_wrt(&f, "x");
        assert_eq!(r.verdict, Verdict::WeaklyStratified);
        assert_eq!(r.excluded, vec!["FIN".to_string()]);
        assert!(r.verify());
    }

    #[test]
    fn stratified_stays_stratified_under_wrt() {
        let f = parse_formula("x in y & y in z").unwrap();
        let r = stratify_wrt(&f, "x");
        assert_eq!(r.verdict, Verdict::Stratified);
        assert_eq!(r.eigen_index, Some(0));
    }

    #[test]
    fn comprehension_index_is_one_above_variable() {
        let t = parse_term("{ x : exists z. exists a. (z in k & not (a in z) & x = union2(z, {a})) }").unwrap();
        let r = check_comprehension(&t).unwrap();
        assert_eq!(r.verdict, Verdict::Stratified);
        assert_eq!(r.index_of("a"), Some(0));
        assert_eq!(r.index_of("z"), Some(1));
        assert_eq!(r.eigen_index, Some(1));
        assert_eq!(r.index_of("k"), Some(2));
        assert_eq!(r.term_index, Some(2));
        assert!(check_comprehension(&parse_term("x").unwrap()).is_none());
    }
}
