//! Finite typed universes: U₀ is a set of `n` atoms and U_ℓ is the powerset
//! of U_{ℓ−1}. Element `k` of U_ℓ is the subset of U_{ℓ−1} with bitmask `k`.

mod bits;
pub mod func;
pub mod ops;
mod text;

use crate::error::{Error, Result};
use std::fmt;
use std::sync::OnceLock;

pub use bits::Bits;
pub use func::FuncView;

pub const DEFAULT_BUDGET: u64 = 1 << 16;

/// A set at level ℓ ≥ 1: a bitset over the enumeration of U_{ℓ−1}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetVal {
    level: usize,
    bits: Bits,
}

/// An element of some level: an atom at level 0 or a set above it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Obj {
    Atom(usize),
    Set(SetVal),
}

impl SetVal {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_zero()
    }

    /// Whether element `k` of U_{ℓ−1} is a member.
    pub fn contains(&self, k: usize) -> bool {
        self.bits.get(k)
    }

    pub fn insert(&mut self, k: usize) {
        self.bits.set(k);
    }

    pub fn remove(&mut self, k: usize) {
        self.bits.clear(k);
    }

    /// Member indices in increasing order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    fn same_level(&self, other: &SetVal, ctx: &str) -> Result<()> {
        if self.level == other.level {
            Ok(())
        } else {
            Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
                context: ctx.to_string(),
            })
        }
    }

    pub fn union(&self, other: &SetVal) -> Result<SetVal> {
        self.same_level(other, "union2")?;
        Ok(SetVal {
            level: self.level,
            bits: self.bits.or(&other.bits),
        })
    }

    pub fn inter(&self, other: &SetVal) -> Result<SetVal> {
        self.same_level(other, "inter2")?;
        Ok(SetVal {
            level: self.level,
            bits: self.bits.and(&other.bits),
        })
    }

    pub fn diff(&self, other: &SetVal) -> Result<SetVal> {
        self.same_level(other, "diff")?;
        Ok(SetVal {
            level: self.level,
            bits: self.bits.and_not(&other.bits),
        })
    }

    pub fn is_subset(&self, other: &SetVal) -> bool {
        self.level == other.level && self.bits.and_not(&other.bits).is_zero()
    }

    pub fn is_disjoint(&self, other: &SetVal) -> bool {
        self.level == other.level && self.bits.and(&other.bits).is_zero()
    }

    /// Index of this set within U_ℓ, when the bitmask fits a machine word.
    pub fn index(&self) -> Option<usize> {
        self.bits.as_usize()
    }
}

impl Obj {
    pub fn level(&self) -> usize {
        match self {
            Obj::Atom(_) => 0,
            Obj::Set(s) => s.level,
        }
    }

    pub fn as_set(&self) -> Option<&SetVal> {
        match self {
            Obj::Atom(_) => None,
            Obj::Set(s) => Some(s),
        }
    }
}

impl From<SetVal> for Obj {
    fn from(s: SetVal) -> Obj {
        Obj::Set(s)
    }
}

/// Staged typed domains U₀..U_L over `n` atoms.
#[derive(Debug)]
pub struct Universe {
    n: usize,
    max_level: usize,
    budget: u64,
    sizes: Vec<usize>,
    finite_classes: Vec<OnceLock<SetVal>>,
}

impl Universe {
    /// Builds U₀..U_L, refusing when |U_L| exceeds `budget`.
    pub fn new(n: usize, max_level: usize, budget: u64) -> Result<Universe> {
        let mut sizes = vec![n];
        for level in 1..=max_level {
            let prev = sizes[level - 1];
            let size = if prev < 127 { 1u128 << prev } else { u128::MAX };
            if size > budget as u128 {
                return Err(Error::Budget {
                    level,
                    log2_size: prev,
                    budget,
                });
            }
            sizes.push(size as usize);
        }
        Ok(Universe {
            n,
            max_level,
            budget,
            finite_classes: (0..=max_level).map(|_| OnceLock::new()).collect(),
            sizes,
        })
    }

    /// Largest L ≤ `cap` whose top level fits the budget.
    pub fn auto(n: usize, cap: usize, budget: u64) -> Result<Universe> {
        let mut best = Universe::new(n, 0, budget)?;
        for level in 1..=cap {
            match Universe::new(n, level, budget) {
                Ok(u) => best = u,
                Err(_) => break,
            }
        }
        Ok(best)
    }

    pub fn n_atoms(&self) -> usize {
        self.n
    }

    pub fn max_enum_level(&self) -> usize {
        self.max_level
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Highest level at which sets can be represented.
    pub fn max_set_level(&self) -> usize {
        self.max_level + 1
    }

    /// |U_ℓ| for ℓ ≤ L.
    pub fn size(&self, level: usize) -> usize {
        self.sizes[level]
    }

    pub fn level_sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Fails unless sets at `level` are representable.
    pub fn check_set_level(&self, level: usize, ctx: &str) -> Result<()> {
        if level == 0 || level > self.max_set_level() {
            return Err(Error::LevelOverflow {
                needed: level,
                max: self.max_set_level(),
                context: ctx.to_string(),
            });
        }
        Ok(())
    }

    /// Fails unless U_`level` is enumerated.
    pub fn check_enum_level(&self, level: usize, ctx: &str) -> Result<()> {
        if level > self.max_level {
            return Err(Error::LevelOverflow {
                needed: level + 1,
                max: self.max_set_level(),
                context: ctx.to_string(),
            });
        }
        Ok(())
    }

    /// Number of bits in a level-`level` set.
    pub fn width(&self, level: usize) -> usize {
        self.sizes[level - 1]
    }

    pub fn empty(&self, level: usize) -> Result<SetVal> {
        self.check_set_level(level, "empty")?;
        Ok(SetVal {
            level,
            bits: Bits::zeros(self.width(level)),
        })
    }

    /// The whole of U_{ℓ−1} as a level-ℓ set.
    pub fn full(&self, level: usize) -> Result<SetVal> {
        self.check_set_level(level, "full")?;
        Ok(SetVal {
            level,
            bits: Bits::ones_up_to(self.width(level)),
        })
    }

    /// Element `k` of U_ℓ (ℓ ≥ 1) as a set.
    pub fn elem(&self, level: usize, k: usize) -> SetVal {
        debug_assert!(level >= 1 && level <= self.max_level && k < self.sizes[level]);
        SetVal {
            level,
            bits: Bits::from_u64(self.width(level), k as u64),
        }
    }

    /// Element `k` of U_ℓ as an object.
    pub fn obj(&self, level: usize, k: usize) -> Obj {
        if level == 0 {
            Obj::Atom(k)
        } else {
            Obj::Set(self.elem(level, k))
        }
    }

    /// Index of an object within its level's enumeration.
    pub fn index_of(&self, x: &Obj) -> Result<usize> {
        match x {
            Obj::Atom(a) => Ok(*a),
            Obj::Set(s) => {
                self.check_enum_level(s.level, "element index")?;
                s.index().ok_or_else(|| Error::BadSetVal("index out of range".into()))
            }
        }
    }

    /// All sets at an enumerated level, in index order.
    pub fn elements(&self, level: usize) -> impl Iterator<Item = SetVal> + '_ {
        (0..self.sizes[level]).map(move |k| self.elem(level, k))
    }

    /// Builds a level-ℓ set from member indices.
    pub fn set_of(&self, level: usize, members: impl IntoIterator<Item = usize>) -> Result<SetVal> {
        let mut s = self.empty(level)?;
        let w = self.width(level);
        for k in members {
            if k >= w {
                return Err(Error::BadSetVal(format!(
                    "member index {k} out of range for level {level}"
                )));
            }
            s.insert(k);
        }
        Ok(s)
    }

    /// Builds a set from member objects, all at one level.
    pub fn set_of_objs<'a>(&self, level: usize, members: impl IntoIterator<Item = &'a Obj>) -> Result<SetVal> {
        let mut idx = Vec::new();
        for m in members {
            if m.level() + 1 != level {
                return Err(Error::LevelMismatch {
                    left: m.level() + 1,
                    right: level,
                    context: "set members".into(),
                });
            }
            idx.push(self.index_of(m)?);
        }
        self.set_of(level, idx)
    }

    /// Member objects of a set.
    pub fn member_objs(&self, s: &SetVal) -> Vec<Obj> {
        s.members().map(|k| self.obj(s.level - 1, k)).collect()
    }

    /// The FINITE class over U_ℓ, as a level-(ℓ+1) set, computed by the
    /// inductive closure: start from Λ and adjoin one new member at a time.
    pub fn finite_class(&self, level: usize) -> Result<&SetVal> {
        self.check_enum_level(level, "finite class")?;
        if level == 0 {
            return Err(Error::LevelOverflow {
                needed: 0,
                max: self.max_set_level(),
                context: "atoms carry no finiteness".into(),
            });
        }
        Ok(self.finite_classes[level].get_or_init(|| {
            let mut class = Bits::zeros(self.sizes[level]);
            let width = self.width(level);
            class.set(0);
            let mut frontier = vec![0usize];
            while let Some(u) = frontier.pop() {
                for z in 0..width {
                    let bit = 1usize << z;
                    if u & bit == 0 && !class.get(u | bit) {
                        class.set(u | bit);
                        frontier.push(u | bit);
                    }
                }
            }
            SetVal {
                level: level + 1,
                bits: class,
            }
        }))
    }
}

impl fmt::Debug for SetVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetVal({}:{:?})", self.level, self.bits)
    }
}

pub use text::{parse_obj, parse_setval, render_obj, render_setval};
