//! Level-tagged brace notation: `2:{ {0,1}, {} }`. Members print in
//! enumeration-index order; the parser accepts any order.

use super::{Obj, SetVal, Universe};
use crate::error::{Error, Result};

fn render_member(level: usize, k: usize, out: &mut String) {
    if level == 0 {
        out.push_str(&k.to_string());
        return;
    }
    out.push('{');
    let mut first = true;
    for bit in 0..usize::BITS as usize {
        if k >> bit & 1 == 1 {
            if !first {
                out.push(',');
            }
            first = false;
            render_member(level - 1, bit, out);
        }
    }
    out.push('}');
}

pub fn render_setval(s: &SetVal) -> String {
    let mut out = format!("{}:{{", s.level());
    let mut first = true;
    for k in s.members() {
        out.push_str(if first { " " } else { ", " });
        first = false;
        render_member(s.level() - 1, k, &mut out);
    }
    out.push_str(if first { "}" } else { " }" });
    out
}

pub fn render_obj(x: &Obj) -> String {
    match x {
        Obj::Atom(a) => format!("0:{a}"),
        Obj::Set(s) => render_setval(s),
    }
}

enum Node {
    Atom(usize),
    Set(Vec<Node>),
}

struct Reader<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn bad<T>(&self, what: &str) -> Result<T> {
        Err(Error::BadSetVal(format!("{what} at offset {}", self.pos)))
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.bad("expected a number");
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .map_or_else(|| self.bad("number out of range"), Ok)
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn node(&mut self) -> Result<Node> {
        if !self.eat(b'{') {
            return Ok(Node::Atom(self.number()?));
        }
        let mut kids = Vec::new();
        if self.eat(b'}') {
            return Ok(Node::Set(kids));
        }
        loop {
            kids.push(self.node()?);
            if self.eat(b'}') {
                return Ok(Node::Set(kids));
            }
            if !self.eat(b',') {
                return self.bad("expected `,` or `}`");
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.s.len() {
            Ok(())
        } else {
            self.bad("trailing input")
        }
    }
}

fn build(u: &Universe, level: usize, node: &Node) -> Result<SetVal> {
    let Node::Set(kids) = node else {
        return Err(Error::BadSetVal(format!("expected a set at level {level}")));
    };
    let mut idx = Vec::with_capacity(kids.len());
    for kid in kids {
        let k = match kid {
            Node::Atom(a) if level == 1 => {
                if *a >= u.n_atoms() {
                    return Err(Error::BadSetVal(format!("atom {a} out of range")));
                }
                *a
            }
            Node::Atom(_) => {
                return Err(Error::BadSetVal(format!("atom inside a level-{level} set")))
            }
            Node::Set(_) if level == 1 => {
                return Err(Error::BadSetVal("set inside a level-1 set".into()))
            }
            Node::Set(_) => u.index_of(&Obj::Set(build(u, level - 1, kid)?))?,
        };
        idx.push(k);
    }
    u.set_of(level, idx)
}

fn split_level(text: &str) -> Result<(usize, &str)> {
    let (lv, rest) = text
        .trim()
        .split_once(':')
        .ok_or_else(|| Error::BadSetVal("missing `level:` prefix".into()))?;
    let level = lv
        .trim()
        .parse()
        .map_err(|_| Error::BadSetVal(format!("bad level `{lv}`")))?;
    Ok((level, rest))
}

pub fn parse_setval(u: &Universe, text: &str) -> Result<SetVal> {
    let (level, rest) = split_level(text)?;
    u.check_set_level(level, "set literal")?;
    let mut r = Reader {
        s: rest.as_bytes(),
        pos: 0,
    };
    let node = r.node()?;
    r.finish()?;
    build(u, level, &node)
}

pub fn parse_obj(u: &Universe, text: &str) -> Result<Obj> {
    let (level, rest) = split_level(text)?;
    if level > 0 {
        return parse_setval(u, text).map(Obj::Set);
    }
    let mut r = Reader {
        s: rest.as_bytes(),
        pos: 0,
    };
    let a = r.number()?;
    r.finish()?;
    if a >= u.n_atoms() {
        return Err(Error::BadSetVal(format!("atom {a} out of range")));
    }
    Ok(Obj::Atom(a))
}
