//! Closed-term evaluation: constants and operators, no free variables.
//! Every constant is level-polymorphic, so a term is evaluated at the
//! requested level or the lowest level it fits, whichever is higher.

use crate::cardinal::{Arith, SymSize};
use crate::error::{Error, Result};
use crate::formula::{Const, FSym, Term};
use crate::universe::{render_setval, Obj, SetVal, Universe};

/// Level offsets of each argument relative to the result level.
fn arg_offsets(f: FSym) -> &'static [i64] {
    match f {
        FSym::Singleton | FSym::Usc | FSym::Ssc | FSym::Sc | FSym::Nc | FSym::TOp => &[-1],
        FSym::J | FSym::JBar => &[-1],
        FSym::UPair => &[-1, -1],
        FSym::OPair | FSym::Prod => &[-2, -2],
        FSym::OTriple => &[-4, -4, -4],
        FSym::Union2 | FSym::Inter2 | FSym::Diff | FSym::Plus | FSym::Times => &[0, 0],
        FSym::Succ | FSym::Exp2 => &[0],
        FSym::BigUnion => &[1],
        FSym::Image => &[2, 0],
        FSym::Ap => &[3, 0],
        FSym::Dom | FSym::Range => &[2],
    }
}

/// Lowest result level an operator accepts without a pinned argument.
fn min_level(f: FSym) -> usize {
    match f {
        FSym::Exp2 => 3,
        FSym::Nc | FSym::Succ | FSym::Plus | FSym::Times | FSym::TOp | FSym::J | FSym::JBar => 2,
        _ => 1,
    }
}

/// Lowest result level at which every subterm sits at a level its
/// operator accepts.
fn min_result(t: &Term) -> Result<i64> {
    match t {
        Term::Var(v) => Err(Error::Eval(format!("free variable `{v}` in a closed term"))),
        Term::Compr(..) => Err(Error::Eval("comprehension terms are not evaluable".into())),
        Term::Const(Const::Ffin | Const::Sf) => Ok(3),
        Term::Const(c) if c.is_class() || matches!(c, Const::Lambda | Const::V) => Ok(1),
        Term::Const(_) => Ok(2),
        Term::App(f, args) => {
            let mut l = min_level(*f) as i64;
            for (a, off) in args.iter().zip(arg_offsets(*f)) {
                l = l.max(min_result(a)? - off);
            }
            Ok(l)
        }
    }
}

pub struct Evaluator<'u> {
    a: Arith<'u>,
}

/// A value together with how to show it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Value {
    pub set: SetVal,
    /// Present when the value is a cardinal (a full size class or Λ at a
    /// cardinal level).
    pub size: Option<SymSize>,
}

impl Evaluator<'_> {
    pub fn new(u: &Universe) -> Evaluator<'_> {
        Evaluator { a: Arith::new(u) }
    }

    /// Evaluates a closed term at `level`, raised to the lowest level the
    /// term can live at.
    pub fn eval(&self, t: &Term, level: usize) -> Result<Value> {
        let l = min_result(t)?.max(level as i64);
        let set = self.at(t, l)?;
        let size = if set.level() >= 2 {
            self.a.sym_size(&set).ok().map(|c| c.size)
        } else {
            None
        };
        Ok(Value { set, size })
    }

    fn at(&self, t: &Term, l: i64) -> Result<SetVal> {
        let u = self.a.universe();
        if l < 1 {
            return Err(Error::Eval(format!("term needs level {l}, below the first set level")));
        }
        let lu = l as usize;
        match t {
            Term::Const(c) => self.constant(*c, lu),
            Term::App(f, args) => {
                let vals = args
                    .iter()
                    .zip(arg_offsets(*f))
                    .map(|(a, off)| self.at(a, l + off))
                    .collect::<Result<Vec<_>>>()?;
                let o = |i: usize| Obj::Set(vals[i].clone());
                match f {
                    FSym::Singleton => u.mk_singleton(&o(0)),
                    FSym::UPair => u.mk_upair(&o(0), &o(1)),
                    FSym::OPair => u.mk_opair(&o(0), &o(1)),
                    FSym::OTriple => u.mk_otriple(&o(0), &o(1), &o(2)),
                    FSym::Union2 => vals[0].union(&vals[1]),
                    FSym::Inter2 => vals[0].inter(&vals[1]),
                    FSym::Diff => vals[0].diff(&vals[1]),
                    FSym::BigUnion => u.bigunion(&vals[0]),
                    FSym::Usc => u.usc(&vals[0]),
                    FSym::Ssc => u.ssc(&vals[0]),
                    FSym::Sc => u.sc(&vals[0]),
                    FSym::Nc => self.a.nc(&vals[0]),
                    FSym::Succ => self.a.succ(&vals[0]),
                    FSym::Plus => self.a.add(&vals[0], &vals[1]),
                    FSym::Times => self.a.mul(&vals[0], &vals[1]),
                    FSym::Exp2 => self.a.exp2(&vals[0]),
                    FSym::TOp => self.a.t_op(&vals[0]),
                    FSym::J => self.a.j_set(&vals[0]),
                    FSym::JBar => self.a.j_bar(&vals[0]),
                    FSym::Prod => u.product(&vals[0], &vals[1]),
                    FSym::Image => u.image(&vals[0], &vals[1]),
                    FSym::Ap => u.ap(&vals[0], &o(1)),
                    FSym::Dom => u.dom(&vals[0]),
                    FSym::Range => u.range(&vals[0]),
                }
            }
            Term::Var(_) | Term::Compr(..) => unreachable!("rejected by min_result"),
        }
    }

    fn constant(&self, c: Const, l: usize) -> Result<SetVal> {
        let u = self.a.universe();
        let numeral = |k: usize| self.a.from_size(l, SymSize::Finite(k as u64));
        match c {
            Const::Lambda => u.empty(l),
            Const::V => u.full(l),
            Const::Zero => numeral(0),
            Const::One => numeral(1),
            Const::Two => numeral(2),
            Const::Three => numeral(3),
            Const::Four => numeral(4),
            Const::Fin => u.finite_class(l).cloned(),
            Const::Dec => {
                u.check_enum_level(l - 1, "DECIDABLE")?;
                let members: Vec<usize> =
                    u.elements(l - 1).filter(|s| u.has_dec_eq(s)).filter_map(|s| s.index()).collect();
                u.set_of(l, members)
            }
            Const::Ffin => self.cardinal_class(l, false),
            Const::Sf => self.cardinal_class(l, true),
            Const::Ggraph => Err(Error::Eval("the multiplication graph is not evaluable as a term".into())),
        }
    }

    fn cardinal_class(&self, l: usize, semi: bool) -> Result<SetVal> {
        let u = self.a.universe();
        let c = l.checked_sub(1).filter(|&c| c >= 2).ok_or_else(|| {
            Error::Eval("cardinal classes need level 3 or above".into())
        })?;
        let list = if semi { self.a.semifinite(c)? } else { self.a.frege(c)? };
        let objs: Vec<Obj> = list.iter().cloned().map(Obj::Set).collect();
        u.set_of_objs(l, &objs)
    }
}

const NAMES: [&str; 5] = ["zero", "one", "two", "three", "four"];

impl Value {
    /// `C(level=3, size=4) = four`, `C(level=2, OVERFLOW)`, or the set.
    pub fn render(&self) -> String {
        match self.size {
            Some(size) => {
                let c = crate::cardinal::SymCardinal {
                    level: self.set.level(),
                    size,
                };
                match size {
                    SymSize::Finite(k) if (k as usize) < NAMES.len() => {
                        format!("{c} = {}", NAMES[k as usize])
                    }
                    _ => c.to_string(),
                }
            }
            None => render_setval(&self.set),
        }
    }
}
