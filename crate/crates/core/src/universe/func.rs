//! Relations viewed as lists of ordered pairs, with the function,
//! one-to-one, onto and similarity predicates.

use super::ops::{decode_opair_index, opair_index};
use super::{SetVal, Universe};
use crate::error::Result;

/// A relation whose pairs have components at level `comp_level`. Components
/// are element indices in U_{comp_level}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuncView {
    pub comp_level: usize,
    pub pairs: Vec<(usize, usize)>,
    /// `Rel(f)`: every member of the source set was an ordered pair.
    pub rel: bool,
    pub base: Option<SetVal>,
}

impl FuncView {
    pub fn from_pairs(comp_level: usize, mut pairs: Vec<(usize, usize)>) -> FuncView {
        pairs.sort_unstable();
        pairs.dedup();
        FuncView {
            comp_level,
            pairs,
            rel: true,
            base: None,
        }
    }

    /// Views a set at level ≥ 3 as a relation.
    pub fn from_setval(f: &SetVal) -> FuncView {
        let mut rel = true;
        let mut pairs = Vec::new();
        for m in f.members() {
            match decode_opair_index(m) {
                Some(p) => pairs.push(p),
                None => rel = false,
            }
        }
        pairs.sort_unstable();
        FuncView {
            comp_level: f.level().saturating_sub(3),
            pairs,
            rel,
            base: Some(f.clone()),
        }
    }

    /// Materializes the graph as a set at level `comp_level + 3`.
    pub fn materialize(&self, u: &Universe) -> Result<SetVal> {
        let level = self.comp_level + 3;
        u.check_set_level(level, "function graph")?;
        u.set_of(level, self.pairs.iter().map(|&(x, y)| opair_index(x, y)))
    }

    pub fn partners(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.pairs.partition_point(|&(a, _)| a < x);
        self.pairs[start..]
            .iter()
            .take_while(move |&&(a, _)| a == x)
            .map(|&(_, y)| y)
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.pairs.binary_search(&(x, y)).is_ok()
    }

    pub fn is_rel(&self) -> bool {
        self.rel
    }

    /// `<x,y> ∈ f ∧ <x,z> ∈ f → y = z`.
    pub fn is_function(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0].0 != w[1].0)
    }

    /// `f: X → Y`: every x ∈ X has exactly one y ∈ Y with `<x,y> ∈ f`.
    pub fn maps(&self, x: &SetVal, y: &SetVal) -> bool {
        x.members()
            .all(|a| self.partners(a).filter(|&b| y.contains(b)).count() == 1)
    }

    /// `f(x)` read as Def Ap: the union of all partners of `x`. Atom-valued
    /// relations have no union, so their partner list stands in for it.
    fn ap_key(&self, x: usize) -> Vec<usize> {
        if self.comp_level == 0 {
            self.partners(x).collect()
        } else {
            vec![self.partners(x).fold(0, |acc, y| acc | y)]
        }
    }

    /// One-to-one from X to Y: `y ∈ Y ∧ <x,y> ∈ f → x ∈ X`, and for
    /// x, z ∈ X, `f(x) = f(z) → x = z`.
    pub fn is_one_one(&self, x: &SetVal, y: &SetVal) -> bool {
        let closed = self
            .pairs
            .iter()
            .all(|&(a, b)| !y.contains(b) || x.contains(a));
        if !closed {
            return false;
        }
        let ms: Vec<usize> = x.members().collect();
        let keys: Vec<Vec<usize>> = ms.iter().map(|&a| self.ap_key(a)).collect();
        (0..ms.len()).all(|i| (i + 1..ms.len()).all(|j| keys[i] != keys[j]))
    }

    /// Onto Y: every y ∈ Y has some x ∈ X with `<x,y> ∈ f`.
    pub fn is_onto(&self, x: &SetVal, y: &SetVal) -> bool {
        y.members()
            .all(|b| self.pairs.iter().any(|&(a, c)| c == b && x.contains(a)))
    }

    /// `f: X → Y` one-to-one and onto.
    pub fn is_similarity(&self, x: &SetVal, y: &SetVal) -> bool {
        self.maps(x, y) && self.is_one_one(x, y) && self.is_onto(x, y)
    }

    /// Pairs members of `a` and `b` in index order. `None` when the sizes
    /// differ. The result is re-validated against the similarity definition.
    pub fn bijection(a: &SetVal, b: &SetVal) -> Option<FuncView> {
        if a.level() != b.level() || a.len() != b.len() {
            return None;
        }
        let view = FuncView::from_pairs(a.level() - 1, a.members().zip(b.members()).collect());
        view.is_similarity(a, b).then_some(view)
    }

    /// Builds the graph of `g` restricted to the members of `a`.
    pub fn from_fn(a: &SetVal, g: impl Fn(usize) -> usize) -> FuncView {
        FuncView::from_pairs(a.level() - 1, a.members().map(|m| (m, g(m))).collect())
    }
}

/// Boolean similarity: equal member counts.
pub fn similar(a: &SetVal, b: &SetVal) -> bool {
    a.level() == b.level() && a.len() == b.len()
}

impl Universe {
    /// A materialized bijection graph between `a` and `b`, re-validated
    /// from its set form, or `None` if they are not similar.
    pub fn similar_witness(&self, a: &SetVal, b: &SetVal) -> Result<Option<SetVal>> {
        let Some(view) = FuncView::bijection(a, b) else {
            return Ok(None);
        };
        let graph = view.materialize(self)?;
        let back = FuncView::from_setval(&graph);
        assert!(back.is_rel() && back.is_function() && back.is_similarity(a, b));
        Ok(Some(graph))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::{Obj, DEFAULT_BUDGET};

    fn u3() -> Universe {
        Universe::new(3, 2, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn identity_constant_and_empty_graphs() {
        let u = u3();
        let x = u.full(1).unwrap();
        let id = FuncView::from_fn(&x, |m| m);
        assert!(id.is_function() && id.is_similarity(&x, &x));
        let konst = FuncView::from_fn(&x, |_| 0);
        assert!(konst.maps(&x, &x));
        assert!(!konst.is_one_one(&x, &x));
        let e = u.empty(1).unwrap();
        let empty = FuncView::from_pairs(0, vec![]);
        assert!(empty.is_function() && empty.is_similarity(&e, &e));
    }

    #[test]
    fn similarity_matches_cardinality() {
        let u = u3();
        for a in u.elements(2) {
            for b in u.elements(2).step_by(7) {
                assert_eq!(FuncView::bijection(&a, &b).is_some(), similar(&a, &b));
            }
        }
    }

    #[test]
    fn witness_graph_round_trips() {
        let u = u3();
        let a = u.set_of(1, [0, 2]).unwrap();
        let b = u.set_of(1, [1, 2]).unwrap();
        let g = u.similar_witness(&a, &b).unwrap().unwrap();
        assert_eq!(g.level(), 3);
        let f = FuncView::from_setval(&g);
        assert!(f.is_rel());
        assert!(f.contains(0, 1) && f.contains(2, 2));
        let p = u.mk_opair(&Obj::Atom(0), &Obj::Atom(1)).unwrap();
        assert!(g.contains(p.index().unwrap()));
        // level-3 sets need graphs at level 5
        let big = u.full(3).unwrap();
        assert!(u.similar_witness(&big, &big).is_err());
    }
}
