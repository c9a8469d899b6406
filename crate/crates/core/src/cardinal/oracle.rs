//! Closed-form cardinal arithmetic on member sizes. The extensional engine
//! is tested against these rules.

use serde::Serialize;
use std::fmt;

/// The common member size of a cardinal, or `Overflow` for Λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SymSize {
    Finite(u64),
    Overflow,
}

/// A cardinal described by its level and member size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SymCardinal {
    pub level: usize,
    pub size: SymSize,
}

impl fmt::Display for SymCardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.size {
            SymSize::Finite(k) => write!(f, "C(level={}, size={k})", self.level),
            SymSize::Overflow => write!(f, "C(level={}, OVERFLOW)", self.level),
        }
    }
}

/// Size rules for a universe with the given level sizes |U_0|, |U_1|, ...
/// A cardinal at level `c` has members drawn from the subsets of U_{c−2}.
#[derive(Debug, Clone)]
pub struct Oracle {
    sizes: Vec<u64>,
}

impl Oracle {
    pub fn new(level_sizes: &[usize]) -> Oracle {
        Oracle {
            sizes: level_sizes.iter().map(|&s| s as u64).collect(),
        }
    }

    /// Largest member size at level `c`.
    pub fn cap(&self, c: usize) -> u64 {
        self.sizes[c - 2]
    }

    fn clamp(&self, c: usize, k: u64) -> SymSize {
        if k <= self.cap(c) {
            SymSize::Finite(k)
        } else {
            SymSize::Overflow
        }
    }

    pub fn succ(&self, c: usize, x: SymSize) -> SymSize {
        match x {
            SymSize::Finite(k) => self.clamp(c, k + 1),
            SymSize::Overflow => SymSize::Overflow,
        }
    }

    pub fn add(&self, c: usize, x: SymSize, y: SymSize) -> SymSize {
        match (x, y) {
            (SymSize::Finite(a), SymSize::Finite(b)) => self.clamp(c, a + b),
            _ => SymSize::Overflow,
        }
    }

    pub fn mul(&self, c: usize, x: SymSize, y: SymSize) -> SymSize {
        match (x, y) {
            (SymSize::Finite(0), _) | (_, SymSize::Finite(0)) => SymSize::Finite(0),
            (SymSize::Finite(a), SymSize::Finite(b)) => self.clamp(c, a.saturating_mul(b)),
            _ => SymSize::Overflow,
        }
    }

    /// `2^m` at level `c ≥ 3`: members of `m` must be unit subclasses of
    /// sets in U_{c−3}.
    pub fn exp2(&self, c: usize, m: SymSize) -> SymSize {
        match m {
            SymSize::Finite(k) if k <= self.sizes[c - 3] => {
                self.clamp(c, 1u64.checked_shl(k as u32).unwrap_or(u64::MAX))
            }
            _ => SymSize::Overflow,
        }
    }

    /// `T` raises the level and keeps the size.
    pub fn t_op(&self, c: usize, x: SymSize) -> SymSize {
        match x {
            SymSize::Finite(k) => self.clamp(c + 1, k),
            SymSize::Overflow => SymSize::Overflow,
        }
    }

    pub fn le(&self, x: SymSize, y: SymSize) -> bool {
        matches!((x, y), (SymSize::Finite(a), SymSize::Finite(b)) if a <= b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SymSize::*;

    #[test]
    fn saturating_rules() {
        let o = Oracle::new(&[3, 8, 256]);
        assert_eq!(o.cap(2), 3);
        assert_eq!(o.succ(2, Finite(3)), Overflow);
        assert_eq!(o.add(2, Finite(1), Finite(2)), Finite(3));
        assert_eq!(o.mul(2, Finite(2), Finite(2)), Overflow);
        assert_eq!(o.mul(2, Overflow, Finite(0)), Finite(0));
        assert_eq!(o.exp2(3, Finite(3)), Finite(8));
        assert_eq!(o.exp2(3, Finite(4)), Overflow);
        assert_eq!(o.t_op(2, Finite(3)), Finite(3));
        assert!(!o.le(Overflow, Overflow));
    }

    #[test]
    fn display_form() {
        let c = SymCardinal {
            level: 2,
            size: Finite(3),
        };
        assert_eq!(c.to_string(), "C(level=2, size=3)");
        let o = SymCardinal {
            level: 2,
            size: Overflow,
        };
        assert_eq!(o.to_string(), "C(level=2, OVERFLOW)");
    }
}
