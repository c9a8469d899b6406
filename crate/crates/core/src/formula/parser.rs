//! Lexer and recursive-descent parser.
//!
//! Connectives from loosest to tightest: `<->`, `->` (both right
//! associative), `|`, `&`, then `not` and the quantifiers. A quantifier body
//! extends as far right as possible.

use super::{Const, FSym, Formula, Term};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: expected {}, found {found}", .expected.join(" | "))]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    LAngle,
    RAngle,
    Comma,
    Colon,
    Dot,
    Equals,
    Amp,
    Bar,
    Arrow,
    DArrow,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LAngle => "`<`".into(),
            Tok::RAngle => "`>`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::DArrow => "`<->`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

const KEYWORDS: [&str; 6] = ["in", "not", "forall", "exists", "true", "false"];
const MACROS: [&str; 4] = ["sub", "sim", "le", "lt"];

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let (start_line, start_col) = (line, col);
        let (tok, len) = if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len()
                && (chars[j].is_ascii_alphanumeric() || chars[j] == '_' || chars[j] == '\'')
            {
                j += 1;
            }
            (Tok::Ident(chars[i..j].iter().collect()), j - i)
        } else {
            let next = chars.get(i + 1).copied();
            let next2 = chars.get(i + 2).copied();
            match c {
                '(' => (Tok::LParen, 1),
                ')' => (Tok::RParen, 1),
                '{' => (Tok::LBrace, 1),
                '}' => (Tok::RBrace, 1),
                '<' if next == Some('-') && next2 == Some('>') => (Tok::DArrow, 3),
                '<' => (Tok::LAngle, 1),
                '>' => (Tok::RAngle, 1),
                ',' => (Tok::Comma, 1),
                ':' => (Tok::Colon, 1),
                '.' => (Tok::Dot, 1),
                '=' => (Tok::Equals, 1),
                '&' => (Tok::Amp, 1),
                '|' => (Tok::Bar, 1),
                '-' if next == Some('>') => (Tok::Arrow, 2),
                _ => {
                    return Err(ParseError {
                        line,
                        col,
                        expected: vec!["a token".into()],
                        found: format!("character `{c}`"),
                    })
                }
            }
        };
        out.push(Spanned {
            tok,
            line: start_line,
            col: start_col,
        });
        i += len;
        col += len;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    fresh: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Parser, ParseError> {
        let toks = lex(src)?;
        // fresh macro variables are `_N`; start past any already in the input
        let fresh = toks
            .iter()
            .filter_map(|t| match &t.tok {
                Tok::Ident(s) => s.strip_prefix('_')?.parse::<usize>().ok(),
                _ => None,
            })
            .max()
            .map_or(0, |m| m + 1);
        Ok(Parser { toks, pos: 0, fresh })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn err<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        let s = &self.toks[self.pos];
        Err(ParseError {
            line: s.line,
            col: s.col,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.describe(),
        })
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.err(&[name])
        }
    }

    fn fresh_var(&mut self) -> String {
        let v = format!("_{}", self.fresh);
        self.fresh += 1;
        v
    }

    fn binder(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) && Const::from_name(&s).is_none() => {
                self.bump();
                Ok(s)
            }
            _ => self.err(&["variable"]),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.implication()?;
        if *self.peek() == Tok::DArrow {
            self.bump();
            let rhs = self.formula()?;
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.is_kw("not") {
            self.bump();
            return Ok(Formula::not(self.unary()?));
        }
        if self.is_kw("forall") || self.is_kw("exists") {
            let universal = self.is_kw("forall");
            self.bump();
            let v = self.binder()?;
            let bound = if self.is_kw("in") {
                self.bump();
                Some(self.term()?)
            } else {
                None
            };
            self.expect(Tok::Dot, "`.`")?;
            let body = self.formula()?;
            let body = match bound {
                None => body,
                Some(t) => {
                    let guard = Formula::Mem(Term::Var(v.clone()), t);
                    if universal {
                        Formula::implies(guard, body)
                    } else {
                        Formula::and(guard, body)
                    }
                }
            };
            return Ok(if universal {
                Formula::Forall(v, Box::new(body))
            } else {
                Formula::Exists(v, Box::new(body))
            });
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Ident(s) if s == "true" => {
                self.bump();
                Ok(Formula::Truth)
            }
            Tok::Ident(s) if s == "false" => {
                self.bump();
                Ok(Formula::Falsity)
            }
            Tok::Ident(s) if MACROS.contains(&s.as_str()) && *self.peek_at(1) == Tok::LParen => {
                self.bump();
                let args = self.call_args()?;
                self.expand_macro(&s, args)
            }
            _ => {
                let lhs = self.term()?;
                if self.is_kw("in") {
                    self.bump();
                    Ok(Formula::Mem(lhs, self.term()?))
                } else if *self.peek() == Tok::Equals {
                    self.bump();
                    Ok(Formula::Eq(lhs, self.term()?))
                } else {
                    self.err(&["`in`", "`=`"])
                }
            }
        }
    }

    fn call_args(&mut self) -> Result<Vec<Term>, ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut args = vec![self.term()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            args.push(self.term()?);
        }
        self.expect(Tok::RParen, "`)`")?;
        Ok(args)
    }

    fn expand_macro(&mut self, name: &str, args: Vec<Term>) -> Result<Formula, ParseError> {
        if args.len() != 2 {
            self.pos -= 1;
            return self.err(&["two arguments"]);
        }
        let (a, b) = (args[0].clone(), args[1].clone());
        Ok(match name {
            "sub" => self.subset(a, b),
            "sim" => self.similar(a, b),
            "le" => self.card_le(a, b),
            _ => {
                let le = self.card_le(a.clone(), b.clone());
                Formula::and(le, Formula::not(Formula::Eq(a, b)))
            }
        })
    }

    fn subset(&mut self, a: Term, b: Term) -> Formula {
        let w = self.fresh_var();
        let wv = Term::Var(w.clone());
        Formula::Forall(
            w,
            Box::new(Formula::implies(
                Formula::Mem(wv.clone(), a),
                Formula::Mem(wv, b),
            )),
        )
    }

    fn similar(&mut self, a: Term, b: Term) -> Formula {
        let f = self.fresh_var();
        let fv = Term::Var(f.clone());
        let pair = |x: &Term, y: &Term| Term::App(FSym::OPair, vec![x.clone(), y.clone()]);

        // maps: every x in a has exactly one partner y in b
        let (x, y, y2) = (self.fresh_var(), self.fresh_var(), self.fresh_var());
        let (xv, yv, y2v) = (Term::Var(x.clone()), Term::Var(y.clone()), Term::Var(y2.clone()));
        let unique = Formula::forall(
            &y2,
            Formula::implies(
                Formula::and(
                    Formula::Mem(y2v.clone(), b.clone()),
                    Formula::Mem(pair(&xv, &y2v), fv.clone()),
                ),
                Formula::Eq(y2v, yv.clone()),
            ),
        );
        let maps = Formula::forall(
            &x,
            Formula::implies(
                Formula::Mem(xv.clone(), a.clone()),
                Formula::exists(
                    &y,
                    Formula::and(
                        Formula::and(
                            Formula::Mem(yv.clone(), b.clone()),
                            Formula::Mem(pair(&xv, &yv), fv.clone()),
                        ),
                        unique,
                    ),
                ),
            ),
        );

        // one-to-one: pairs with second member in b start in a, and ap is injective on a
        let (p, q) = (self.fresh_var(), self.fresh_var());
        let (pv, qv) = (Term::Var(p.clone()), Term::Var(q.clone()));
        let closed = Formula::forall(
            &p,
            Formula::forall(
                &q,
                Formula::implies(
                    Formula::and(
                        Formula::Mem(qv.clone(), b.clone()),
                        Formula::Mem(pair(&pv, &qv), fv.clone()),
                    ),
                    Formula::Mem(pv.clone(), a.clone()),
                ),
            ),
        );
        let (s, t) = (self.fresh_var(), self.fresh_var());
        let (sv, tv) = (Term::Var(s.clone()), Term::Var(t.clone()));
        let ap = |arg: &Term| Term::App(FSym::Ap, vec![fv.clone(), arg.clone()]);
        let injective = Formula::forall(
            &s,
            Formula::forall(
                &t,
                Formula::implies(
                    Formula::and(
                        Formula::and(
                            Formula::Mem(sv.clone(), a.clone()),
                            Formula::Mem(tv.clone(), a.clone()),
                        ),
                        Formula::Eq(ap(&sv), ap(&tv)),
                    ),
                    Formula::Eq(sv.clone(), tv.clone()),
                ),
            ),
        );

        // onto: every member of b is hit
        let (u, v) = (self.fresh_var(), self.fresh_var());
        let (uv, vv) = (Term::Var(u.clone()), Term::Var(v.clone()));
        let onto = Formula::forall(
            &u,
            Formula::implies(
                Formula::Mem(uv.clone(), b),
                Formula::exists(
                    &v,
                    Formula::and(Formula::Mem(vv.clone(), a), Formula::Mem(pair(&vv, &uv), fv)),
                ),
            ),
        );

        Formula::Exists(
            f,
            Box::new(Formula::and(
                Formula::and(maps, Formula::and(closed, injective)),
                onto,
            )),
        )
    }

    fn card_le(&mut self, k: Term, m: Term) -> Formula {
        let (a, b) = (self.fresh_var(), self.fresh_var());
        let (av, bv) = (Term::Var(a.clone()), Term::Var(b.clone()));
        let sub = self.subset(av.clone(), bv.clone());
        let body = Formula::and(
            Formula::and(Formula::Mem(av.clone(), k), Formula::Mem(bv.clone(), m)),
            sub,
        );
        Formula::exists(&a, Formula::exists(&b, body))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                if KEYWORDS.contains(&s.as_str()) {
                    return self.err(&["term"]);
                }
                if *self.peek_at(1) == Tok::LParen {
                    let Some(sym) = FSym::from_call_name(&s) else {
                        return self.err(&["function name"]);
                    };
                    self.bump();
                    let args = self.call_args()?;
                    if args.len() != sym.arity() {
                        self.pos -= 1;
                        return self.err(&[match sym.arity() {
                            1 => "one argument",
                            2 => "two arguments",
                            _ => "three arguments",
                        }]);
                    }
                    return Ok(Term::App(sym, args));
                }
                self.bump();
                Ok(match Const::from_name(&s) {
                    Some(c) => Term::Const(c),
                    None => Term::Var(s),
                })
            }
            Tok::LBrace => {
                self.bump();
                let binder_ahead = matches!(self.peek(), Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()));
                if binder_ahead && *self.peek_at(1) == Tok::Colon {
                    let v = self.binder()?;
                    self.bump();
                    let body = self.formula()?;
                    self.expect(Tok::RBrace, "`}`")?;
                    return Ok(Term::Compr(v, Box::new(body)));
                }
                if binder_ahead && matches!(self.peek_at(1), Tok::Ident(s) if s == "in") {
                    let v = self.binder()?;
                    self.bump();
                    let bound = self.term()?;
                    self.expect(Tok::Colon, "`:`")?;
                    let body = self.formula()?;
                    self.expect(Tok::RBrace, "`}`")?;
                    let guarded = Formula::and(Formula::Mem(Term::Var(v.clone()), bound), body);
                    return Ok(Term::Compr(v, Box::new(guarded)));
                }
                let first = self.term()?;
                let t = if *self.peek() == Tok::Comma {
                    self.bump();
                    let second = self.term()?;
                    Term::App(FSym::UPair, vec![first, second])
                } else {
                    Term::App(FSym::Singleton, vec![first])
                };
                self.expect(Tok::RBrace, "`}`")?;
                Ok(t)
            }
            Tok::LAngle => {
                self.bump();
                let a = self.term()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.term()?;
                let t = if *self.peek() == Tok::Comma {
                    self.bump();
                    let c = self.term()?;
                    Term::App(FSym::OTriple, vec![a, b, c])
                } else {
                    Term::App(FSym::OPair, vec![a, b])
                };
                self.expect(Tok::RAngle, "`>`")?;
                Ok(t)
            }
            _ => self.err(&["term"]),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.err(&["end of input", "`&`", "`|`", "`->`", "`<->`"])
        }
    }
}

pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(src)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(src)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_associativity() {
        let f = parse_formula("a in b & c in d | e in f -> g in h -> i in j").unwrap();
        assert_eq!(
            f.to_string(),
            "a in b & c in d | e in f -> g in h -> i in j"
        );
        match f {
            Formula::Implies(l, r) => {
                assert!(matches!(*l, Formula::Or(..)));
                assert!(matches!(*r, Formula::Implies(..)));
            }
            _ => panic!("expected implication at the top"),
        }
    }

    #[test]
    fn quantifier_body_extends_right() {
        let f = parse_formula("forall x. x in y & y in x").unwrap();
        assert!(matches!(f, Formula::Forall(_, ref b) if matches!(**b, Formula::And(..))));
    }

    #[test]
    fn bounded_quantifiers_desugar() {
        let a = parse_formula("forall u in w. u = u").unwrap();
        let b = parse_formula("forall u. (u in w -> u = u)").unwrap();
        assert_eq!(a, b);
        let a = parse_formula("exists u in w. u = u").unwrap();
        let b = parse_formula("exists u. (u in w & u = u)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn brackets_and_calls() {
        let t = parse_term("<x, {y}, {x, y}>").unwrap();
        assert!(matches!(t, Term::App(FSym::OTriple, _)));
        let t = parse_term("ap(f, usc(x))").unwrap();
        assert_eq!(t.to_string(), "ap(f, usc(x))");
        assert!(parse_term("t_op(x)").is_ok());
        let t = parse_term("{u in x : u = u}").unwrap();
        assert!(matches!(t, Term::Compr(..)));
    }

    #[test]
    fn errors_report_position_and_expectation() {
        let e = parse_formula("x in\n  y &").unwrap_err();
        assert_eq!((e.line, e.col), (2, 6));
        assert!(e.expected.iter().any(|s| s == "term"));
        let e = parse_formula("x y").unwrap_err();
        assert_eq!((e.line, e.col), (1, 3));
        assert_eq!(e.expected, vec!["`in`", "`=`"]);
        assert!(parse_formula("x in unknown(y)").is_err());
        assert!(parse_formula("x in usc(y, z)").is_err());
        assert!(parse_formula("x # y").is_err());
    }

    #[test]
    fn macros_use_fresh_names_past_input() {
        let f = parse_formula("sub(_4, y)").unwrap();
        assert!(f.to_string().contains("forall _5."));
        assert!(parse_formula("sim(a, b)").is_ok());
        assert!(parse_formula("lt(k, m)").is_ok());
    }
}
