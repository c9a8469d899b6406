//! The multiplication graph 𝔾: the least set of triples containing
//! `<x,zero,zero>` and `<zero,x,zero>` for x ∈ SF, closed under
//! `<x,y,z> ↦ <x, y⁺, z + x>`.

use super::Arith;
use crate::universe::SetVal;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone)]
pub struct MulGraph {
    values: Vec<SetVal>,
    ids: BTreeMap<SetVal, u32>,
    triples: BTreeSet<(u32, u32, u32)>,
}

impl MulGraph {
    pub(crate) fn build(a: &Arith, c: usize, sf: &[SetVal]) -> MulGraph {
        let mut g = MulGraph {
            values: Vec::new(),
            ids: BTreeMap::new(),
            triples: BTreeSet::new(),
        };
        let zero = g.intern(a.zero(c).expect("level checked"));
        let mut todo = Vec::new();
        for x in sf {
            let x = g.intern(x.clone());
            todo.push((x, zero, zero));
            todo.push((zero, x, zero));
        }
        while let Some(t) = todo.pop() {
            if !g.triples.insert(t) {
                continue;
            }
            let (x, y, z) = t;
            let y2 = a.succ(&g.values[y as usize]).expect("level checked");
            let z2 = a
                .add(&g.values[z as usize], &g.values[x as usize])
                .expect("level checked");
            let next = (x, g.intern(y2), g.intern(z2));
            todo.push(next);
        }
        g
    }

    fn intern(&mut self, v: SetVal) -> u32 {
        if let Some(&id) = self.ids.get(&v) {
            return id;
        }
        let id = self.values.len() as u32;
        self.ids.insert(v.clone(), id);
        self.values.push(v);
        id
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, x: &SetVal, y: &SetVal, z: &SetVal) -> bool {
        match (self.ids.get(x), self.ids.get(y), self.ids.get(z)) {
            (Some(&x), Some(&y), Some(&z)) => self.triples.contains(&(x, y, z)),
            _ => false,
        }
    }

    /// Every `z` with `<x,y,z> ∈ 𝔾`.
    pub fn results<'a>(&'a self, x: &SetVal, y: &SetVal) -> impl Iterator<Item = &'a SetVal> {
        let key = self.ids.get(x).zip(self.ids.get(y)).map(|(&x, &y)| (x, y));
        key.into_iter().flat_map(move |(x, y)| {
            self.triples
                .range((x, y, 0)..=(x, y, u32::MAX))
                .map(|&(_, _, z)| &self.values[z as usize])
        })
    }

    pub fn triples(&self) -> impl Iterator<Item = (&SetVal, &SetVal, &SetVal)> {
        self.triples.iter().map(|&(x, y, z)| {
            (
                &self.values[x as usize],
                &self.values[y as usize],
                &self.values[z as usize],
            )
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::Arith;
    use crate::universe::{Universe, DEFAULT_BUDGET};

    #[test]
    fn graph_is_functional_on_semifinite() {
        let u = Universe::new(3, 2, DEFAULT_BUDGET).unwrap();
        let a = Arith::new(&u);
        let g = a.mul_graph(2).unwrap();
        let sf = a.semifinite(2).unwrap();
        for x in sf {
            for y in sf {
                assert_eq!(g.results(x, y).count(), 1);
            }
        }
        let one = a.numeral(2, 1).unwrap();
        let two = a.numeral(2, 2).unwrap();
        assert!(g.contains(&one, &two, &two));
        assert!(!g.is_empty());
    }
}
