//! Cardinals one level above the largest materializable set level. Such a
//! cardinal is the similarity class of a level-(L+1) set, so it is stored as
//! one representative; Λ has none. Equality is checked with an explicit
//! bijection between representatives.

use super::oracle::SymSize;
use super::Arith;
use crate::error::{Error, Result};
use crate::universe::{FuncView, SetVal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedCard {
    pub level: usize,
    pub rep: Option<SetVal>,
}

impl RedCard {
    pub fn size(&self) -> SymSize {
        match &self.rep {
            Some(r) => SymSize::Finite(r.len() as u64),
            None => SymSize::Overflow,
        }
    }
}

/// Outcome of comparing two reduced cardinals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RedEq {
    /// Both are Λ.
    BothEmpty,
    /// The representatives are similar by this bijection.
    Similar(FuncView),
    Different,
}

impl RedEq {
    pub fn holds(&self) -> bool {
        !matches!(self, RedEq::Different)
    }
}

impl Arith<'_> {
    /// Level of the reduced cardinals: one above the largest set level.
    pub fn reduced_level(&self) -> usize {
        self.universe().max_set_level() + 1
    }

    fn rep_of_size(&self, k: usize) -> Result<Option<SetVal>> {
        let u = self.universe();
        let top = u.max_set_level();
        let pool = u.size(top - 1);
        if k > pool {
            return Ok(None);
        }
        u.set_of(top, 0..k).map(Some)
    }

    pub fn red_from_size(&self, size: SymSize) -> Result<RedCard> {
        let rep = match size {
            SymSize::Finite(k) => self.rep_of_size(k as usize)?,
            SymSize::Overflow => None,
        };
        Ok(RedCard {
            level: self.reduced_level(),
            rep,
        })
    }

    /// `Nc(x)` for a set at the top level.
    pub fn nc_red(&self, x: &SetVal) -> Result<RedCard> {
        let top = self.universe().max_set_level();
        if x.level() != top {
            return Err(Error::LevelMismatch {
                left: x.level(),
                right: top,
                context: "reduced Nc".into(),
            });
        }
        Ok(RedCard {
            level: top + 1,
            rep: Some(x.clone()),
        })
    }

    /// `T(κ)` for a cardinal at the top level: the class of `USC(x)` for
    /// any `x ∈ κ`.
    pub fn t_red(&self, k: &SetVal) -> Result<RedCard> {
        let u = self.universe();
        let top = u.max_set_level();
        if k.level() != top {
            return Err(Error::LevelMismatch {
                left: k.level(),
                right: top,
                context: "reduced T".into(),
            });
        }
        let rep = match k.members().next() {
            Some(x) => Some(u.usc(&u.elem(top - 1, x))?),
            None => None,
        };
        Ok(RedCard {
            level: top + 1,
            rep,
        })
    }

    /// `2^m` for a reduced cardinal: the class of `SSC(a)` for some `a`
    /// with `USC(a) ∈ m`, or Λ when no such `a` exists.
    pub fn exp2_red(&self, m: &RedCard) -> Result<RedCard> {
        let u = self.universe();
        let top = u.max_set_level();
        let rep = match &m.rep {
            Some(r) if r.len() <= u.size(top - 2) => {
                let a = u.set_of(top - 1, 0..r.len())?;
                Some(u.ssc(&a)?)
            }
            _ => None,
        };
        Ok(RedCard {
            level: m.level,
            rep,
        })
    }

    /// Product of reduced cardinals via member sizes; the result's
    /// representative is a canonical set of the product size.
    pub fn mul_red(&self, x: &RedCard, y: &RedCard) -> Result<RedCard> {
        let size = match (x.size(), y.size()) {
            (SymSize::Finite(0), _) | (_, SymSize::Finite(0)) => SymSize::Finite(0),
            (SymSize::Finite(a), SymSize::Finite(b)) => SymSize::Finite(a.saturating_mul(b)),
            _ => SymSize::Overflow,
        };
        self.red_from_size(size)
    }

    /// Compares two reduced cardinals, producing a bijection when they are
    /// the same class.
    pub fn red_eq(&self, x: &RedCard, y: &RedCard) -> RedEq {
        match (&x.rep, &y.rep) {
            (None, None) => RedEq::BothEmpty,
            (Some(a), Some(b)) => match FuncView::bijection(a, b) {
                Some(f) => RedEq::Similar(f),
                None => RedEq::Different,
            },
            _ => RedEq::Different,
        }
    }
}
