//! Set-level constructions: pairing, unit and separable subclasses,
//! products, images, and the finiteness predicates.

use super::func::FuncView;
use super::{Obj, SetVal, Universe};
use crate::error::{Error, Result};

/// Index in U_{p+2} of the ordered pair of level-p elements `x`, `y`.
pub fn opair_index(x: usize, y: usize) -> usize {
    let s = 1usize << x;
    let t = s | (1usize << y);
    (1usize << s) | (1usize << t)
}

/// Inverse of [`opair_index`]; `None` when `k` is not an ordered pair.
pub fn decode_opair_index(k: usize) -> Option<(usize, usize)> {
    let (a, b) = match k.count_ones() {
        1 => {
            let m = k.trailing_zeros() as usize;
            return (m.count_ones() == 1).then(|| {
                let x = m.trailing_zeros() as usize;
                (x, x)
            });
        }
        2 => {
            let a = k.trailing_zeros() as usize;
            let b = (k & (k - 1)).trailing_zeros() as usize;
            (a, b)
        }
        _ => return None,
    };
    let pick = |s: usize, t: usize| {
        (s.count_ones() == 1 && t.count_ones() == 2 && t & s != 0)
            .then(|| (s.trailing_zeros() as usize, (t & !s).trailing_zeros() as usize))
    };
    pick(a, b).or_else(|| pick(b, a))
}

impl Universe {
    fn obj_index_at(&self, x: &Obj, needed: usize, ctx: &str) -> Result<usize> {
        self.check_set_level(needed, ctx)?;
        self.index_of(x)
    }

    fn same(&self, a: &Obj, b: &Obj, ctx: &str) -> Result<usize> {
        if a.level() != b.level() {
            return Err(Error::LevelMismatch {
                left: a.level(),
                right: b.level(),
                context: ctx.to_string(),
            });
        }
        Ok(a.level())
    }

    pub fn mk_empty(&self, level: usize) -> Result<SetVal> {
        self.empty(level)
    }

    pub fn mk_singleton(&self, x: &Obj) -> Result<SetVal> {
        let level = x.level() + 1;
        let k = self.obj_index_at(x, level, "singleton")?;
        self.set_of(level, [k])
    }

    pub fn mk_upair(&self, x: &Obj, y: &Obj) -> Result<SetVal> {
        let level = self.same(x, y, "unordered pair")? + 1;
        let a = self.obj_index_at(x, level, "unordered pair")?;
        let b = self.obj_index_at(y, level, "unordered pair")?;
        self.set_of(level, [a, b])
    }

    /// `<x,y> = {{x},{x,y}}`.
    pub fn mk_opair(&self, x: &Obj, y: &Obj) -> Result<SetVal> {
        let s = self.mk_singleton(x)?;
        let t = self.mk_upair(x, y)?;
        self.mk_upair(&Obj::Set(s), &Obj::Set(t))
    }

    /// `<x,y,z> = <<x,y>, {{z}}>`.
    pub fn mk_otriple(&self, x: &Obj, y: &Obj, z: &Obj) -> Result<SetVal> {
        self.same(x, y, "ordered triple")?;
        self.same(y, z, "ordered triple")?;
        let p = self.mk_opair(x, y)?;
        let zz = self.mk_singleton(&Obj::Set(self.mk_singleton(z)?))?;
        self.mk_opair(&Obj::Set(p), &Obj::Set(zz))
    }

    /// Decodes a set as an ordered pair of objects two levels down.
    pub fn decode_opair(&self, p: &SetVal) -> Option<(Obj, Obj)> {
        if p.level() < 2 || p.level() - 2 > self.max_enum_level() {
            return None;
        }
        let (x, y) = decode_opair_index(p.index()?)?;
        let lv = p.level() - 2;
        Some((self.obj(lv, x), self.obj(lv, y)))
    }

    /// Unit subclass: the set of singletons of members of `a`.
    pub fn usc(&self, a: &SetVal) -> Result<SetVal> {
        let level = a.level() + 1;
        self.check_set_level(level, "usc")?;
        self.set_of(level, a.members().map(|m| 1usize << m))
    }

    /// Separable subclasses. Classically every subset is separable, so
    /// this is the full powerset of `a`.
    pub fn ssc(&self, a: &SetVal) -> Result<SetVal> {
        let level = a.level() + 1;
        self.check_set_level(level, "ssc")?;
        let mask = a.index().ok_or_else(|| Error::LevelOverflow {
            needed: level,
            max: self.max_set_level(),
            context: "ssc".into(),
        })?;
        let mut subs = Vec::with_capacity(1 << mask.count_ones());
        let mut sub = mask;
        loop {
            subs.push(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        self.set_of(level, subs)
    }

    /// Subclasses; the same as [`Universe::ssc`] in this classical model.
    pub fn sc(&self, a: &SetVal) -> Result<SetVal> {
        self.ssc(a)
    }

    /// Union of the members of `a`.
    pub fn bigunion(&self, a: &SetVal) -> Result<SetVal> {
        if a.level() < 2 {
            return Err(Error::LevelOverflow {
                needed: 0,
                max: self.max_set_level(),
                context: "bigunion of a set of atoms".into(),
            });
        }
        let level = a.level() - 1;
        let mut out = self.empty(level)?;
        for m in a.members() {
            for b in bits_of(m) {
                out.insert(b);
            }
        }
        Ok(out)
    }

    /// Cartesian product: the set of ordered pairs `<x,y>`, x ∈ a, y ∈ b.
    pub fn product(&self, a: &SetVal, b: &SetVal) -> Result<SetVal> {
        self.same(&Obj::Set(a.clone()), &Obj::Set(b.clone()), "product")?;
        let level = a.level() + 2;
        self.check_set_level(level, "product")?;
        let mut out = self.empty(level)?;
        for x in a.members() {
            for y in b.members() {
                out.insert(opair_index(x, y));
            }
        }
        Ok(out)
    }

    fn relation_pairs(&self, f: &SetVal, ctx: &str) -> Result<Vec<(usize, usize)>> {
        if f.level() < 3 {
            return Err(Error::LevelOverflow {
                needed: 0,
                max: self.max_set_level(),
                context: format!("{ctx} of a set below level 3"),
            });
        }
        Ok(f.members().filter_map(decode_opair_index).collect())
    }

    /// `f``a`: second components of pairs in `f` whose first is in `a`.
    pub fn image(&self, f: &SetVal, a: &SetVal) -> Result<SetVal> {
        if f.level() != a.level() + 2 {
            return Err(Error::LevelMismatch {
                left: f.level(),
                right: a.level() + 2,
                context: "image".into(),
            });
        }
        let pairs = self.relation_pairs(f, "image")?;
        self.set_of(
            a.level(),
            pairs.into_iter().filter(|(x, _)| a.contains(*x)).map(|(_, y)| y),
        )
    }

    pub fn dom(&self, f: &SetVal) -> Result<SetVal> {
        let pairs = self.relation_pairs(f, "dom")?;
        self.set_of(f.level() - 2, pairs.into_iter().map(|(x, _)| x))
    }

    pub fn range(&self, f: &SetVal) -> Result<SetVal> {
        let pairs = self.relation_pairs(f, "range")?;
        self.set_of(f.level() - 2, pairs.into_iter().map(|(_, y)| y))
    }

    /// `Ap(f,x) = { u : ∃y (<x,y> ∈ f ∧ u ∈ y) }`. Undefined on atoms.
    pub fn ap(&self, f: &SetVal, x: &Obj) -> Result<SetVal> {
        if f.level() != x.level() + 3 {
            return Err(Error::LevelMismatch {
                left: f.level(),
                right: x.level() + 3,
                context: "ap".into(),
            });
        }
        x.as_set().ok_or_else(|| Error::LevelOverflow {
            needed: 0,
            max: self.max_set_level(),
            context: "ap at an atom (members of atoms are undefined)".into(),
        })?;
        let xi = self.index_of(x)?;
        let mut out = self.empty(x.level())?;
        for (a, y) in self.relation_pairs(f, "ap")? {
            if a == xi {
                for b in bits_of(y) {
                    out.insert(b);
                }
            }
        }
        Ok(out)
    }

    /// Membership in the inductively generated FINITE class. Sets at the
    /// enumerated levels are looked up in the closure; sets one level above
    /// are tested by building the adjunction chain from Λ.
    pub fn is_finite(&self, a: &SetVal) -> bool {
        let level = a.level();
        if level <= self.max_enum_level() {
            if let (Ok(class), Some(k)) = (self.finite_class(level), a.index()) {
                return class.contains(k);
            }
        }
        let mut cur = match self.empty(level) {
            Ok(e) => e,
            Err(_) => return false,
        };
        for z in a.members() {
            // each step adjoins a fresh member z ∉ cur
            if cur.contains(z) {
                return false;
            }
            cur.insert(z);
        }
        cur == *a
    }

    /// `∀x,y ∈ a (x = y ∨ x ≠ y)`.
    pub fn has_dec_eq(&self, a: &SetVal) -> bool {
        let ms: Vec<usize> = a.members().collect();
        ms.iter()
            .all(|x| ms.iter().all(|y| x == y || x != y))
    }

    /// Whether `a` is similar to a proper subset of itself. Searches every
    /// proper subset, so sets with more than 24 members are refused.
    pub fn is_dedekind_infinite(&self, a: &SetVal) -> Result<bool> {
        let ms: Vec<usize> = a.members().collect();
        if ms.len() > 24 {
            return Err(Error::Eval(format!(
                "subset search over {} members is too large",
                ms.len()
            )));
        }
        // proper subsets enumerated as masks over the member list
        let count = 1u64 << ms.len();
        Ok((0..count - 1).any(|mask| {
            let mut y = a.clone();
            for (i, m) in ms.iter().enumerate() {
                if mask >> i & 1 == 0 {
                    y.remove(*m);
                }
            }
            FuncView::bijection(a, &y).is_some()
        }))
    }
}

/// Bit positions of a word.
pub fn bits_of(mut k: usize) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if k == 0 {
            return None;
        }
        let t = k.trailing_zeros() as usize;
        k &= k - 1;
        Some(t)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::DEFAULT_BUDGET;

    fn u3() -> Universe {
        Universe::new(3, 2, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn ordered_pairs_are_injective_over_atoms() {
        let u = u3();
        let mut seen = std::collections::BTreeMap::new();
        for x in 0..3 {
            for y in 0..3 {
                let p = u.mk_opair(&Obj::Atom(x), &Obj::Atom(y)).unwrap();
                assert_eq!(p.index(), Some(opair_index(x, y)));
                assert_eq!(u.decode_opair(&p), Some((Obj::Atom(x), Obj::Atom(y))));
                assert!(seen.insert(p, (x, y)).is_none());
            }
        }
    }

    #[test]
    fn upair_of_equal_is_singleton() {
        let u = u3();
        let x = Obj::Set(u.elem(1, 5));
        assert_eq!(u.mk_upair(&x, &x).unwrap(), u.mk_singleton(&x).unwrap());
    }

    #[test]
    fn triples_overflow_at_low_levels() {
        let u = u3();
        let a = Obj::Atom(0);
        assert!(matches!(u.mk_otriple(&a, &a, &a), Err(Error::LevelOverflow { .. })));
        let big = Universe::new(1, 4, DEFAULT_BUDGET).unwrap();
        assert!(big.mk_otriple(&a, &a, &a).is_ok());
    }

    #[test]
    fn usc_and_ssc_of_empty() {
        let u = u3();
        let e = u.empty(2).unwrap();
        assert!(u.usc(&e).unwrap().is_empty());
        let s = u.ssc(&e).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.contains(0));
    }

    #[test]
    fn ssc_has_powerset_size() {
        let u = u3();
        for a in u.elements(2) {
            assert_eq!(u.ssc(&a).unwrap().len(), 1 << a.len());
            assert_eq!(u.usc(&a).unwrap().len(), a.len());
        }
    }

    #[test]
    fn image_dom_range_and_ap() {
        let u = Universe::new(2, 3, DEFAULT_BUDGET).unwrap();
        let a = Obj::Set(u.elem(1, 1));
        let b = Obj::Set(u.elem(1, 2));
        let c = Obj::Set(u.elem(1, 3));
        let p = u.mk_opair(&a, &b).unwrap();
        let f = u.set_of_objs(4, [&Obj::Set(p.clone())]).unwrap();
        assert_eq!(Obj::Set(u.ap(&f, &a).unwrap()), b);
        assert!(u.ap(&f, &b).unwrap().is_empty());
        // a related to two sets: Ap is their union
        let q = u.mk_opair(&a, &Obj::Set(u.elem(1, 1))).unwrap();
        let g = u.set_of_objs(4, [&Obj::Set(p), &Obj::Set(q)]).unwrap();
        assert_eq!(Obj::Set(u.ap(&g, &a).unwrap()), c);
        let dom = u.dom(&g).unwrap();
        assert_eq!(dom.members().collect::<Vec<_>>(), vec![1]);
        assert_eq!(u.range(&g).unwrap().len(), 2);
        let only_a = u.set_of(2, [1]).unwrap();
        assert_eq!(u.image(&g, &only_a).unwrap(), u.range(&g).unwrap());
    }

    #[test]
    fn finiteness_predicates() {
        let u = u3();
        for a in u.elements(2) {
            assert!(u.is_finite(&a));
            assert!(u.has_dec_eq(&a));
            assert!(!u.is_dedekind_infinite(&a).unwrap());
        }
        assert!(u.is_finite(&u.empty(3).unwrap()));
        assert!(u.is_finite(&u.full(3).unwrap()));
    }
}
