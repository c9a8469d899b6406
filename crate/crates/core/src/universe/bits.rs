use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// Fixed-width bitset ordered as an unsigned integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    width: usize,
    words: SmallVec<[u64; 4]>,
}

fn word_count(width: usize) -> usize {
    width.div_ceil(64)
}

impl Bits {
    pub fn zeros(width: usize) -> Bits {
        Bits {
            width,
            words: SmallVec::from_elem(0, word_count(width)),
        }
    }

    pub fn ones_up_to(width: usize) -> Bits {
        let mut b = Bits::zeros(width);
        for w in b.words.iter_mut() {
            *w = u64::MAX;
        }
        b.trim();
        b
    }

    pub fn from_u64(width: usize, v: u64) -> Bits {
        let mut b = Bits::zeros(width);
        if let Some(w) = b.words.first_mut() {
            *w = v;
        }
        b.trim();
        b
    }

    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.width;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, k: usize) -> bool {
        k < self.width && self.words[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn set(&mut self, k: usize) {
        assert!(k < self.width, "bit {k} out of width {}", self.width);
        self.words[k / 64] |= 1 << (k % 64);
    }

    pub fn clear(&mut self, k: usize) {
        if k < self.width {
            self.words[k / 64] &= !(1 << (k % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn zip(&self, other: &Bits, f: impl Fn(u64, u64) -> u64) -> Bits {
        debug_assert_eq!(self.width, other.width);
        Bits {
            width: self.width,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn or(&self, other: &Bits) -> Bits {
        self.zip(other, |a, b| a | b)
    }

    pub fn and(&self, other: &Bits) -> Bits {
        self.zip(other, |a, b| a & b)
    }

    pub fn and_not(&self, other: &Bits) -> Bits {
        self.zip(other, |a, b| a & !b)
    }

    /// The value as a machine word, if it fits.
    pub fn as_usize(&self) -> Option<usize> {
        if self.words.iter().skip(1).any(|&w| w != 0) {
            return None;
        }
        let v = self.words.first().copied().unwrap_or(0);
        usize::try_from(v).ok()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let t = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + t)
            })
        })
    }
}

impl Ord for Bits {
    fn cmp(&self, other: &Bits) -> Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Bits) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ones: Vec<usize> = self.ones().collect();
        write!(f, "{ones:?}/{}", self.width)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_numeric() {
        let mut a = Bits::zeros(130);
        let mut b = Bits::zeros(130);
        a.set(0);
        a.set(1);
        b.set(129);
        assert!(a < b);
        assert_eq!(a.ones().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(b.as_usize(), None);
        assert_eq!(a.as_usize(), Some(3));
    }

    #[test]
    fn full_trims_past_width() {
        let b = Bits::ones_up_to(70);
        assert_eq!(b.count(), 70);
        assert_eq!(Bits::ones_up_to(0).count(), 0);
    }
}
