//! Constraint generation: one node per variable binder, per free variable,
//! per shared class constant, and per term occurrence.

use crate::formula::{Const, FSym, Formula, Term};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeKind {
    FreeVar,
    BoundVar,
    Const,
    Term,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Node {
    pub label: String,
    pub kind: NodeKind,
}

/// `idx(left) = idx(right) + offset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexConstraint {
    pub left: usize,
    pub right: usize,
    pub offset: i64,
    /// Rendered atom or term that produced the constraint.
    pub origin: String,
}

impl IndexConstraint {
    pub fn holds(&self, assignment: &[i64]) -> bool {
        assignment[self.left] == assignment[self.right] + self.offset
    }
}

#[derive(Debug, Clone, Default)]
pub struct ConstraintSystem {
    pub nodes: Vec<Node>,
    pub constraints: Vec<IndexConstraint>,
    pub free: BTreeMap<String, usize>,
}

/// What to leave out of the constraint graph.
#[derive(Debug, Clone, Default)]
pub struct Exclusions {
    pub vars: BTreeSet<String>,
    pub consts: BTreeSet<Const>,
}

pub fn generate(f: &Formula, ex: &Exclusions) -> ConstraintSystem {
    let mut g = Generator {
        sys: ConstraintSystem::default(),
        scope: Vec::new(),
        classes: BTreeMap::new(),
        ex,
    };
    g.formula(f);
    g.sys
}

struct Generator<'a> {
    sys: ConstraintSystem,
    scope: Vec<(String, usize)>,
    classes: BTreeMap<Const, usize>,
    ex: &'a Exclusions,
}

impl Generator<'_> {
    fn node(&mut self, label: String, kind: NodeKind) -> usize {
        self.sys.nodes.push(Node { label, kind });
        self.sys.nodes.len() - 1
    }

    fn constrain(&mut self, left: usize, right: usize, offset: i64, origin: &str) {
        self.sys.constraints.push(IndexConstraint {
            left,
            right,
            offset,
            origin: origin.to_string(),
        });
    }

    fn bind(&mut self, v: &str) -> usize {
        let id = self.node(v.to_string(), NodeKind::BoundVar);
        self.scope.push((v.to_string(), id));
        id
    }

    /// Node for `t`, or `None` when `t` is an excluded parameter.
    fn term(&mut self, t: &Term) -> Option<usize> {
        match t {
            Term::Var(v) => {
                if let Some((_, id)) = self.scope.iter().rev().find(|(n, _)| n == v) {
                    return Some(*id);
                }
                if self.ex.vars.contains(v) {
                    return None;
                }
                if let Some(id) = self.sys.free.get(v) {
                    return Some(*id);
                }
                let id = self.node(v.clone(), NodeKind::FreeVar);
                self.sys.free.insert(v.clone(), id);
                Some(id)
            }
            Term::Const(c) if c.is_class() => {
                if self.ex.consts.contains(c) {
                    return None;
                }
                if let Some(id) = self.classes.get(c) {
                    return Some(*id);
                }
                let id = self.node(c.name().to_string(), NodeKind::Const);
                self.classes.insert(*c, id);
                Some(id)
            }
            Term::Const(c) => Some(self.node(c.name().to_string(), NodeKind::Const)),
            Term::App(sym, args) => {
                let origin = t.to_string();
                let mut a = Vec::with_capacity(args.len());
                for x in args {
                    // an excluded name in argument position gets a detached node
                    let id = match self.term(x) {
                        Some(id) => id,
                        None => self.node(x.to_string(), NodeKind::Term),
                    };
                    a.push(id);
                }
                let r = self.node(origin.clone(), NodeKind::Term);
                self.app(*sym, r, &a, &origin);
                Some(r)
            }
            Term::Compr(v, body) => {
                let origin = t.to_string();
                let bound = self.bind(v);
                self.formula(body);
                self.scope.pop();
                let r = self.node(origin.clone(), NodeKind::Term);
                self.constrain(r, bound, 1, &origin);
                Some(r)
            }
        }
    }

    fn app(&mut self, sym: FSym, r: usize, a: &[usize], origin: &str) {
        use FSym::*;
        let same = |g: &mut Self, xs: &[usize]| {
            for w in xs.windows(2) {
                g.constrain(w[0], w[1], 0, origin);
            }
        };
        match sym {
            Singleton => self.constrain(r, a[0], 1, origin),
            UPair => {
                same(self, a);
                self.constrain(r, a[0], 1, origin);
            }
            OPair => {
                same(self, a);
                self.constrain(r, a[0], 2, origin);
            }
            OTriple => {
                same(self, a);
                self.constrain(r, a[0], 4, origin);
            }
            Union2 | Inter2 | Diff | Plus | Times => {
                same(self, a);
                self.constrain(r, a[0], 0, origin);
            }
            Succ | Exp2 => self.constrain(r, a[0], 0, origin),
            BigUnion => self.constrain(r, a[0], -1, origin),
            Usc | Ssc | Sc | Nc | TOp | J | JBar => self.constrain(r, a[0], 1, origin),
            Prod => {
                same(self, a);
                self.constrain(r, a[0], 2, origin);
            }
            Image => {
                self.constrain(a[0], a[1], 2, origin);
                self.constrain(r, a[1], 0, origin);
            }
            Ap => {
                self.constrain(a[0], a[1], 3, origin);
                self.constrain(r, a[1], 0, origin);
            }
            Dom | Range => self.constrain(r, a[0], -2, origin),
        }
    }

    fn formula(&mut self, f: &Formula) {
        match f {
            Formula::Mem(a, b) => {
                let origin = f.to_string();
                let (na, nb) = (self.term(a), self.term(b));
                if let (Some(na), Some(nb)) = (na, nb) {
                    self.constrain(nb, na, 1, &origin);
                }
            }
            Formula::Eq(a, b) => {
                let origin = f.to_string();
                let (na, nb) = (self.term(a), self.term(b));
                if let (Some(na), Some(nb)) = (na, nb) {
                    self.constrain(na, nb, 0, &origin);
                }
            }
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                self.formula(a);
                self.formula(b);
            }
            Formula::Not(a) => self.formula(a),
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                self.bind(v);
                self.formula(body);
                self.scope.pop();
            }
            Formula::Truth | Formula::Falsity => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    #[test]
    fn binders_get_fresh_nodes_and_free_vars_share() {
        let f = parse_formula("x in y & (forall x. x in y) & x = x").unwrap();
        let sys = generate(&f, &Exclusions::default());
        let bound = sys.nodes.iter().filter(|n| n.kind == NodeKind::BoundVar).count();
        assert_eq!(bound, 1);
        assert_eq!(sys.free.len(), 2);
    }

    #[test]
    fn numerals_are_fresh_per_occurrence() {
        let f = parse_formula("zero = zero").unwrap();
        let sys = generate(&f, &Exclusions::default());
        assert_eq!(sys.nodes.len(), 2);
        let f = parse_formula("x in FIN & y in FIN").unwrap();
        let sys = generate(&f, &Exclusions::default());
        assert_eq!(sys.nodes.len(), 3);
    }

    #[test]
    fn excluded_parameters_produce_no_constraints() {
        let f = parse_formula("x in P").unwrap();
        let ex = Exclusions {
            vars: ["P".to_string()].into(),
            ..Default::default()
        };
        let sys = generate(&f, &ex);
        assert!(sys.constraints.is_empty());
        assert_eq!(sys.nodes.len(), 1);
    }
}
