//! Frege cardinal arithmetic evaluated extensionally over a [`Universe`].
//!
//! A cardinal at level `c ≥ 2` is a level-`c` set whose members are
//! level-`(c−1)` sets, i.e. subsets of U_{c−2}. Λ (the empty set) is the
//! overflow value.

pub mod mulgraph;
pub mod oracle;
pub mod reduced;

use crate::error::{Error, Result};
use crate::universe::ops::bits_of;
use crate::universe::{SetVal, Universe};
use std::sync::OnceLock;

pub use mulgraph::MulGraph;
pub use oracle::{SymCardinal, SymSize};

/// Deliberate defects used to confirm the lemma checks can fail.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Mutations {
    /// Drop `u ∩ v = Λ` from the addition comprehension.
    pub add_no_disjoint: bool,
    /// Close ℱ under successor without requiring the successor inhabited.
    pub frege_no_inhabited_guard: bool,
}

/// Sets of at most this many elements per level get add/succ lookup tables.
const TABLE_LIMIT: usize = 1024;

pub struct Arith<'u> {
    u: &'u Universe,
    mutations: Mutations,
    // indexed by cardinal level
    by_size: Vec<OnceLock<Vec<Vec<usize>>>>,
    frege: Vec<OnceLock<Vec<SetVal>>>,
    semifinite: Vec<OnceLock<Vec<SetVal>>>,
    graphs: Vec<OnceLock<MulGraph>>,
    add_tables: Vec<OnceLock<Option<Vec<u32>>>>,
    succ_tables: Vec<OnceLock<Option<Vec<u32>>>>,
}

fn locks<T>(n: usize) -> Vec<OnceLock<T>> {
    (0..n).map(|_| OnceLock::new()).collect()
}

impl<'u> Arith<'u> {
    pub fn new(u: &'u Universe) -> Arith<'u> {
        Arith::with_mutations(u, Mutations::default())
    }

    pub fn with_mutations(u: &'u Universe, mutations: Mutations) -> Arith<'u> {
        let levels = u.max_set_level() + 1;
        Arith {
            u,
            mutations,
            by_size: locks(levels),
            frege: locks(levels),
            semifinite: locks(levels),
            graphs: locks(levels),
            add_tables: locks(levels),
            succ_tables: locks(levels),
        }
    }

    pub fn universe(&self) -> &'u Universe {
        self.u
    }

    pub fn mutations(&self) -> Mutations {
        self.mutations
    }

    /// Fails unless cardinals at level `c` are representable.
    pub fn check_level(&self, c: usize, ctx: &str) -> Result<()> {
        if c < 2 || c > self.u.max_set_level() {
            return Err(Error::LevelOverflow {
                needed: c,
                max: self.u.max_set_level(),
                context: ctx.to_string(),
            });
        }
        Ok(())
    }

    /// Largest member size at level `c`: |U_{c−2}|.
    pub fn cap(&self, c: usize) -> usize {
        self.u.size(c - 2)
    }

    fn expect_level(&self, x: &SetVal, ctx: &str) -> Result<usize> {
        self.check_level(x.level(), ctx)?;
        Ok(x.level())
    }

    fn same_level(&self, x: &SetVal, y: &SetVal, ctx: &str) -> Result<usize> {
        let c = self.expect_level(x, ctx)?;
        if y.level() != c {
            return Err(Error::LevelMismatch {
                left: c,
                right: y.level(),
                context: ctx.to_string(),
            });
        }
        Ok(c)
    }

    /// Member indices of level-`c` cardinals grouped by member size.
    fn members_by_size(&self, c: usize) -> &[Vec<usize>] {
        self.by_size[c].get_or_init(|| {
            let mut groups = vec![Vec::new(); self.cap(c) + 1];
            for k in 0..self.u.size(c - 1) {
                groups[k.count_ones() as usize].push(k);
            }
            groups
        })
    }

    /// The cardinal whose members are all level-(c−1) sets of size `k`,
    /// or Λ when `k` exceeds the level's capacity.
    pub fn from_size(&self, c: usize, size: SymSize) -> Result<SetVal> {
        self.check_level(c, "from_size")?;
        match size {
            SymSize::Finite(k) if (k as usize) <= self.cap(c) => self
                .u
                .set_of(c, self.members_by_size(c)[k as usize].iter().copied()),
            _ => self.u.empty(c),
        }
    }

    /// Reads a cardinal's common member size, or OVERFLOW for Λ. Fails if
    /// the set is not a full similarity class.
    pub fn sym_size(&self, k: &SetVal) -> Result<SymCardinal> {
        let c = self.expect_level(k, "sym_size")?;
        let Some(first) = k.members().next() else {
            return Ok(SymCardinal {
                level: c,
                size: SymSize::Overflow,
            });
        };
        let size = first.count_ones() as usize;
        let class = &self.members_by_size(c)[size];
        if k.len() != class.len() || !class.iter().all(|&m| k.contains(m)) {
            return Err(Error::NotCardinal(format!(
                "level-{c} set with {} members is not a similarity class",
                k.len()
            )));
        }
        Ok(SymCardinal {
            level: c,
            size: SymSize::Finite(size as u64),
        })
    }

    /// Λ, or the set of all level-(c−1) sets of one fixed size.
    pub fn is_cardinal(&self, k: &SetVal) -> bool {
        self.sym_size(k).is_ok()
    }

    /// `Nc(x) = { u : u ∼ x }`, one level above `x`.
    pub fn nc(&self, x: &SetVal) -> Result<SetVal> {
        let c = x.level() + 1;
        self.check_level(c, "nc")?;
        self.from_size(c, SymSize::Finite(x.len() as u64))
    }

    /// `zero = {Λ}`.
    pub fn zero(&self, c: usize) -> Result<SetVal> {
        self.check_level(c, "zero")?;
        self.u.set_of(c, [0])
    }

    /// zero, one, two, ... by iterated successor; Λ past the last
    /// inhabited value.
    pub fn numeral(&self, c: usize, k: usize) -> Result<SetVal> {
        let sf = self.semifinite(c)?;
        Ok(sf.get(k).unwrap_or(&sf[sf.len() - 1]).clone())
    }

    /// `κ⁺ = { x : ∃z,a (z ∈ κ ∧ a ∉ z ∧ x = z ∪ {a}) }`, on any set.
    pub fn succ(&self, k: &SetVal) -> Result<SetVal> {
        let c = self.expect_level(k, "succ")?;
        let width = self.cap(c);
        let mut out = self.u.empty(c)?;
        for z in k.members() {
            for a in 0..width {
                if z >> a & 1 == 0 {
                    out.insert(z | 1 << a);
                }
            }
        }
        Ok(out)
    }

    /// `x + y = { z : ∃u,v (u ∈ x ∧ v ∈ y ∧ u ∩ v = Λ ∧ z = u ∪ v) }`.
    pub fn add(&self, x: &SetVal, y: &SetVal) -> Result<SetVal> {
        let c = self.same_level(x, y, "add")?;
        let mut out = self.u.empty(c)?;
        let vs: Vec<usize> = y.members().collect();
        for u in x.members() {
            for &v in &vs {
                if self.mutations.add_no_disjoint || u & v == 0 {
                    out.insert(u | v);
                }
            }
        }
        Ok(out)
    }

    /// Order: `∃a,b (a ∈ κ ∧ b ∈ μ ∧ a ⊆ b ∧ b = a ∪ (b − a))`.
    pub fn le(&self, k: &SetVal, m: &SetVal) -> Result<bool> {
        self.same_level(k, m, "le")?;
        let bs: Vec<usize> = m.members().collect();
        Ok(k.members().any(|a| {
            bs.iter()
                .any(|&b| a & !b == 0 && b == a | (b & !a))
        }))
    }

    /// `κ < μ ↔ κ ≤ μ ∧ κ ≠ μ`.
    pub fn lt(&self, k: &SetVal, m: &SetVal) -> Result<bool> {
        Ok(self.le(k, m)? && k != m)
    }

    /// ℱ at level `c`: the least class containing zero and closed under
    /// inhabited successor, in order of construction.
    pub fn frege(&self, c: usize) -> Result<&[SetVal]> {
        self.check_level(c, "frege")?;
        Ok(self.frege[c].get_or_init(|| {
            let guard = !self.mutations.frege_no_inhabited_guard;
            self.closure(c, guard)
        }))
    }

    /// SF at level `c`: the least class containing zero and closed under
    /// successor.
    pub fn semifinite(&self, c: usize) -> Result<&[SetVal]> {
        self.check_level(c, "semifinite")?;
        Ok(self.semifinite[c].get_or_init(|| self.closure(c, false)))
    }

    fn closure(&self, c: usize, inhabited_only: bool) -> Vec<SetVal> {
        // level was checked by the caller
        let mut out = vec![self.zero(c).expect("level checked")];
        loop {
            let next = self.succ(out.last().expect("nonempty")).expect("level checked");
            if (inhabited_only && next.is_empty()) || out.contains(&next) {
                return out;
            }
            out.push(next);
        }
    }

    pub fn in_frege(&self, k: &SetVal) -> bool {
        self.frege(k.level()).is_ok_and(|f| f.contains(k))
    }

    pub fn in_semifinite(&self, k: &SetVal) -> bool {
        self.semifinite(k.level()).is_ok_and(|f| f.contains(k))
    }

    /// The multiplication graph 𝔾 at level `c`, built once.
    pub fn mul_graph(&self, c: usize) -> Result<&MulGraph> {
        self.check_level(c, "mul_graph")?;
        let sf = self.semifinite(c)?;
        Ok(self.graphs[c].get_or_init(|| MulGraph::build(self, c, sf)))
    }

    /// `x · y = { u : ∃z (<x,y,z> ∈ 𝔾 ∧ u ∈ z) }`.
    pub fn mul(&self, x: &SetVal, y: &SetVal) -> Result<SetVal> {
        let c = self.same_level(x, y, "mul")?;
        let g = self.mul_graph(c)?;
        let mut out = self.u.empty(c)?;
        for z in g.results(x, y) {
            out = out.union(z)?;
        }
        Ok(out)
    }

    /// `2^m = { u : ∃a (USC(a) ∈ m ∧ u ∼ SSC(a)) }`. Needs level ≥ 3.
    pub fn exp2(&self, m: &SetVal) -> Result<SetVal> {
        let c = self.expect_level(m, "exp2")?;
        if c < 3 {
            return Err(Error::Eval("exp2 needs a cardinal at level 3 or above".into()));
        }
        let mut out = self.u.empty(c)?;
        let groups = self.members_by_size(c);
        let mut done = vec![false; groups.len()];
        for w in m.members() {
            // USC(a) ∈ m: every member of w is a singleton
            if !bits_of(w).all(|s| s.count_ones() == 1) {
                continue;
            }
            // |SSC(a)| = 2^|a|
            let size = 1usize.checked_shl(w.count_ones()).unwrap_or(usize::MAX);
            if size < groups.len() && !done[size] {
                done[size] = true;
                for &k in &groups[size] {
                    out.insert(k);
                }
            }
        }
        Ok(out)
    }

    /// `T(κ) = { u : ∃x (x ∈ κ ∧ u ∼ USC(x)) }`, one level up.
    pub fn t_op(&self, k: &SetVal) -> Result<SetVal> {
        let c = self.expect_level(k, "T")?;
        self.check_level(c + 1, "T")?;
        let mut out = self.u.empty(c + 1)?;
        let groups = self.members_by_size(c + 1);
        let mut done = vec![false; groups.len()];
        for x in k.members() {
            let size = x.count_ones() as usize;
            if !done[size] {
                done[size] = true;
                for &m in &groups[size] {
                    out.insert(m);
                }
            }
        }
        Ok(out)
    }

    fn segment(&self, m: &SetVal, strict: bool) -> Result<SetVal> {
        let c = self.expect_level(m, "J")?;
        self.check_level(c + 1, "J")?;
        let mut out = self.u.empty(c + 1)?;
        for x in self.frege(c)? {
            let keep = if strict { self.lt(x, m)? } else { self.le(x, m)? };
            if keep {
                out.insert(self.u.index_of(&x.clone().into())?);
            }
        }
        Ok(out)
    }

    /// `J(k) = { x ∈ ℱ : x < k }`.
    pub fn j_set(&self, m: &SetVal) -> Result<SetVal> {
        self.segment(m, true)
    }

    /// `J̄(k) = { x ∈ ℱ : x ≤ k }`.
    pub fn j_bar(&self, m: &SetVal) -> Result<SetVal> {
        self.segment(m, false)
    }

    fn table_size(&self, c: usize) -> Option<usize> {
        (c <= self.u.max_enum_level() && self.u.size(c) <= TABLE_LIMIT).then(|| self.u.size(c))
    }

    fn add_table(&self, c: usize) -> Option<&[u32]> {
        self.add_tables[c]
            .get_or_init(|| {
                let n = self.table_size(c)?;
                let mut t = Vec::with_capacity(n * n);
                for x in 0..n {
                    let xs = self.u.elem(c, x);
                    for y in 0..n {
                        let s = self.add(&xs, &self.u.elem(c, y)).ok()?;
                        t.push(s.index()? as u32);
                    }
                }
                Some(t)
            })
            .as_deref()
    }

    fn succ_table(&self, c: usize) -> Option<&[u32]> {
        self.succ_tables[c]
            .get_or_init(|| {
                let n = self.table_size(c)?;
                (0..n)
                    .map(|x| Some(self.succ(&self.u.elem(c, x)).ok()?.index()? as u32))
                    .collect()
            })
            .as_deref()
    }

    /// `add` on element indices of an enumerated level, via a lookup table
    /// when the level is small.
    pub fn add_idx(&self, c: usize, x: usize, y: usize) -> Result<usize> {
        if let Some(t) = self.add_table(c) {
            return Ok(t[x * self.u.size(c) + y] as usize);
        }
        let s = self.add(&self.u.elem(c, x), &self.u.elem(c, y))?;
        self.u.index_of(&s.into())
    }

    /// `succ` on element indices of an enumerated level.
    pub fn succ_idx(&self, c: usize, x: usize) -> Result<usize> {
        if let Some(t) = self.succ_table(c) {
            return Ok(t[x] as usize);
        }
        let s = self.succ(&self.u.elem(c, x))?;
        self.u.index_of(&s.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::DEFAULT_BUDGET;

    fn u3() -> Universe {
        Universe::new(3, 2, DEFAULT_BUDGET).unwrap()
    }

    fn sizes(a: &Arith, ks: &[SetVal]) -> Vec<SymSize> {
        ks.iter().map(|k| a.sym_size(k).unwrap().size).collect()
    }

    #[test]
    fn frege_and_semifinite_at_level_two() {
        let u = u3();
        let a = Arith::new(&u);
        let f = a.frege(2).unwrap();
        assert_eq!(
            sizes(&a, f),
            (0..4).map(SymSize::Finite).collect::<Vec<_>>()
        );
        let sf = a.semifinite(2).unwrap();
        assert_eq!(sf.len(), 5);
        assert!(sf[4].is_empty());
        let u0 = Universe::new(0, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(Arith::new(&u0).frege(2).unwrap().len(), 1);
    }

    #[test]
    fn successor_and_addition_overflow() {
        let u = u3();
        let a = Arith::new(&u);
        let c = |k| a.numeral(2, k).unwrap();
        assert!(a.succ(&c(3)).unwrap().is_empty());
        assert!(a.succ(&u.empty(2).unwrap()).unwrap().is_empty());
        assert!(a.add(&c(2), &c(2)).unwrap().is_empty());
        assert_eq!(a.add(&c(1), &c(2)).unwrap(), c(3));
        // one is the set of all singletons
        assert_eq!(c(1).members().collect::<Vec<_>>(), vec![1, 2, 4]);
    }

    #[test]
    fn nc_and_sym_size_round_trip() {
        let u = u3();
        let a = Arith::new(&u);
        assert_eq!(a.nc(&u.empty(1).unwrap()).unwrap(), a.zero(2).unwrap());
        for k in 0..=3 {
            let v = a.from_size(2, SymSize::Finite(k)).unwrap();
            assert_eq!(a.sym_size(&v).unwrap().size, SymSize::Finite(k));
        }
        assert!(a.from_size(2, SymSize::Overflow).unwrap().is_empty());
        assert!(a.from_size(2, SymSize::Finite(4)).unwrap().is_empty());
        let partial = u.set_of(2, [1, 2]).unwrap();
        assert!(matches!(a.sym_size(&partial), Err(Error::NotCardinal(_))));
    }

    #[test]
    fn multiplication_overflows_and_zero_laws() {
        let u = u3();
        let a = Arith::new(&u);
        let c = |k| a.numeral(2, k).unwrap();
        assert!(a.mul(&c(2), &c(2)).unwrap().is_empty());
        assert_eq!(a.mul(&c(1), &c(3)).unwrap(), c(3));
        for x in a.semifinite(2).unwrap() {
            assert_eq!(a.mul(x, &c(0)).unwrap(), c(0));
        }
    }

    #[test]
    fn exponent_and_t_operator() {
        let u = u3();
        let a = Arith::new(&u);
        let c3 = |k| a.numeral(3, k).unwrap();
        assert_eq!(a.exp2(&c3(0)).unwrap(), c3(1));
        assert_eq!(a.exp2(&c3(1)).unwrap(), c3(2));
        assert_eq!(a.exp2(&c3(2)).unwrap(), c3(4));
        assert!(a.exp2(&c3(4)).unwrap().is_empty());
        assert!(a.exp2(&a.numeral(2, 1).unwrap()).is_err());
        assert_eq!(a.t_op(&a.numeral(2, 0).unwrap()).unwrap(), c3(0));
        assert_eq!(a.t_op(&a.numeral(2, 2).unwrap()).unwrap(), c3(2));
    }

    #[test]
    fn j_segments() {
        let u = u3();
        let a = Arith::new(&u);
        let c = |k| a.numeral(2, k).unwrap();
        assert!(a.j_set(&c(0)).unwrap().is_empty());
        let j2 = a.j_set(&c(2)).unwrap();
        let want = u.set_of_objs(3, [&c(0).into(), &c(1).into()]).unwrap();
        assert_eq!(j2, want);
        assert_eq!(a.j_bar(&c(0)).unwrap().len(), 1);
    }

    #[test]
    fn tables_agree_with_direct_evaluation() {
        let u = u3();
        let a = Arith::new(&u);
        for x in (0..256).step_by(17) {
            for y in (0..256).step_by(13) {
                let direct = a.add(&u.elem(2, x), &u.elem(2, y)).unwrap();
                assert_eq!(a.add_idx(2, x, y).unwrap(), direct.index().unwrap());
            }
            let s = a.succ(&u.elem(2, x)).unwrap();
            assert_eq!(a.succ_idx(2, x).unwrap(), s.index().unwrap());
        }
    }
}
