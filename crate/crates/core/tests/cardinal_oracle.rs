use nf_forge::cardinal::{Arith, SymSize};
use nf_forge::universe::{Universe, DEFAULT_BUDGET};
use std::collections::BTreeSet;

/// |U_ℓ| for n atoms.
fn level_size(n: u32, l: usize) -> u64 {
    (0..l).fold(n as u64, |s, _| if s >= 64 { u64::MAX } else { 1 << s })
}

/// Closed-form sizes: a level-c cardinal has members of size at most
/// |U_{c−2}|; anything larger is the empty class.
struct Sizes {
    n: u32,
}

impl Sizes {
    fn clamp(&self, c: usize, k: u64) -> SymSize {
        if k <= level_size(self.n, c - 2) {
            SymSize::Finite(k)
        } else {
            SymSize::Overflow
        }
    }
    fn lift2(&self, c: usize, x: SymSize, y: SymSize, f: fn(u64, u64) -> u64) -> SymSize {
        match (x, y) {
            (SymSize::Finite(a), SymSize::Finite(b)) => self.clamp(c, f(a, b)),
            _ => SymSize::Overflow,
        }
    }
}

fn frege_sizes(a: &Arith, c: usize) -> Vec<(nf_forge::universe::SetVal, SymSize)> {
    a.frege(c)
        .unwrap()
        .iter()
        .map(|k| (k.clone(), a.sym_size(k).unwrap().size))
        .collect()
}

#[test]
fn engine_matches_closed_form_sizes() {
    for n in 0..=3u32 {
        let u = Universe::new(n as usize, 2, DEFAULT_BUDGET).unwrap();
        let a = Arith::new(&u);
        let o = Sizes { n };
        for c in 2..=3 {
            let f = frege_sizes(&a, c);
            // ℱ is exactly the sizes 0..=cap
            let want: Vec<SymSize> = (0..=level_size(n, c - 2)).map(SymSize::Finite).collect();
            assert_eq!(f.iter().map(|p| p.1).collect::<Vec<_>>(), want, "n={n} c={c}");
            for (x, sx) in &f {
                let got = a.sym_size(&a.succ(x).unwrap()).unwrap().size;
                assert_eq!(got, o.lift2(c, *sx, SymSize::Finite(1), |p, q| p + q));
                for (y, sy) in &f {
                    let sum = a.sym_size(&a.add(x, y).unwrap()).unwrap().size;
                    assert_eq!(sum, o.lift2(c, *sx, *sy, |p, q| p + q), "n={n} c={c} {sx:?}+{sy:?}");
                    let prod = a.sym_size(&a.mul(x, y).unwrap()).unwrap().size;
                    let want = match (sx, sy) {
                        (SymSize::Finite(0), _) | (_, SymSize::Finite(0)) => SymSize::Finite(0),
                        _ => o.lift2(c, *sx, *sy, |p, q| p * q),
                    };
                    assert_eq!(prod, want, "n={n} c={c} {sx:?}*{sy:?}");
                }
                if c == 3 {
                    let e = a.sym_size(&a.exp2(x).unwrap()).unwrap().size;
                    let want = match sx {
                        SymSize::Finite(k) if *k <= level_size(n, 0) => o.clamp(3, 1 << k),
                        _ => SymSize::Overflow,
                    };
                    assert_eq!(e, want, "n={n} 2^{sx:?}");
                }
                if c == 2 {
                    let t = a.sym_size(&a.t_op(x).unwrap()).unwrap();
                    assert_eq!((t.level, t.size), (3, *sx));
                }
            }
        }
    }
}

/// Level-2 cardinals are sets of atom masks, so the defining comprehensions
/// of successor and sum can be evaluated directly on bitmasks.
#[test]
fn level_two_sum_and_successor_follow_their_definitions() {
    for n in 0..=3usize {
        let u = Universe::new(n, 2, DEFAULT_BUDGET).unwrap();
        let a = Arith::new(&u);
        let sets: Vec<(nf_forge::universe::SetVal, BTreeSet<usize>)> = a
            .semifinite(2)
            .unwrap()
            .iter()
            .map(|k| (k.clone(), k.members().collect()))
            .collect();
        for (k, km) in &sets {
            let succ: BTreeSet<usize> = km
                .iter()
                .flat_map(|&z| (0..n).filter(move |&x| z >> x & 1 == 0).map(move |x| z | 1 << x))
                .collect();
            assert_eq!(a.succ(k).unwrap().members().collect::<BTreeSet<_>>(), succ);
            for (m, mm) in &sets {
                let sum: BTreeSet<usize> = km
                    .iter()
                    .flat_map(|&p| mm.iter().filter(move |&&q| p & q == 0).map(move |&q| p | q))
                    .collect();
                assert_eq!(a.add(k, m).unwrap().members().collect::<BTreeSet<_>>(), sum);
            }
        }
    }
}

#[test]
fn documented_overflows_at_three_atoms() {
    let u = Universe::new(3, 2, DEFAULT_BUDGET).unwrap();
    let a = Arith::new(&u);
    let two = a.numeral(2, 2).unwrap();
    let three = a.numeral(2, 3).unwrap();
    let lambda = u.empty(2).unwrap();
    assert_eq!(a.add(&two, &two).unwrap(), lambda);
    assert_eq!(a.succ(&three).unwrap(), lambda);
    assert_eq!(a.mul(&two, &two).unwrap(), lambda);
    // both sides Λ: the equation 2 + 2 = 3 + 3 holds at this level
    assert_eq!(a.add(&three, &three).unwrap(), a.add(&two, &two).unwrap());
}
