//! Tokenizer and recursive-descent helpers shared by the text formats.

use crate::qscalar::{QScalar, Rat};
use num::bigint::BigInt;
use num::traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

pub fn lex(s: &str) -> Result<Vec<Tok>, String> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = cs[st..i].iter().collect();
            out.push(Tok::Num(txt.parse().map_err(|_| format!("bad number {txt}"))?));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()[],.".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

pub struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(toks: &'a [Tok]) -> Self {
        Parser { toks, pos: 0 }
    }

    pub fn done(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    pub fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k)
    }

    pub fn is_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, c: char) -> Result<(), String> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(format!("expected {c:?} at token {}, found {:?}", self.pos, self.peek()))
        }
    }

    pub fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    pub fn usize(&mut self) -> Result<usize, String> {
        match self.next() {
            Some(Tok::Num(n)) => n.try_into().map_err(|_| "index out of range".to_string()),
            t => Err(format!("expected an index, found {t:?}")),
        }
    }

    pub fn scalar_expr(&mut self, root: u32) -> Result<QScalar, String> {
        let mut acc = QScalar::zero();
        let mut sign = if self.eat_sym('-') {
            -1
        } else {
            self.eat_sym('+');
            1
        };
        loop {
            let t = self.scalar_term(root)?;
            acc = if sign < 0 { acc - t } else { acc + t };
            if self.eat_sym('+') {
                sign = 1;
            } else if self.eat_sym('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn scalar_term(&mut self, root: u32) -> Result<QScalar, String> {
        let mut acc = self.scalar_factor(root)?;
        loop {
            if self.eat_sym('*') {
                acc = acc * self.scalar_factor(root)?;
            } else if self.eat_sym('/') {
                let d = self.scalar_factor(root)?;
                acc = acc.try_div(&d).map_err(|e| e.to_string())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn scalar_factor(&mut self, root: u32) -> Result<QScalar, String> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(QScalar::from_rat(Rat::from_integer(n))),
            Some(Tok::Sym('-')) => Ok(-self.scalar_factor(root)?),
            Some(Tok::Sym('(')) => {
                let v = self.scalar_expr(root)?;
                self.expect_sym(')')?;
                Ok(v)
            }
            Some(Tok::Ident(id)) if id == "q" => {
                let ex = if self.eat_sym('^') { self.exponent()? } else { Rat::one() };
                let k = ex * Rat::from_integer(BigInt::from(root));
                if !k.is_integer() || root == 0 {
                    return Err(format!("exponent is not a multiple of 1/{root}"));
                }
                let k: i32 = k.to_integer().try_into().map_err(|_| "exponent too large".to_string())?;
                if k == 0 {
                    Ok(QScalar::one())
                } else {
                    Ok(QScalar::t_pow(k, root))
                }
            }
            t => Err(format!("unexpected token {t:?} in scalar")),
        }
    }

    fn exponent(&mut self) -> Result<Rat, String> {
        let paren = self.eat_sym('(');
        let neg = self.eat_sym('-');
        let n = match self.next() {
            Some(Tok::Num(n)) => n,
            t => return Err(format!("expected exponent, found {t:?}")),
        };
        let mut v = Rat::from_integer(n);
        if paren && self.eat_sym('/') {
            let d = match self.next() {
                Some(Tok::Num(d)) if !d.is_zero() => d,
                t => return Err(format!("bad exponent denominator {t:?}")),
            };
            v /= Rat::from_integer(d);
        }
        if paren {
            self.expect_sym(')')?;
        }
        Ok(if neg { -v } else { v })
    }

    /// Optional `(scalar)*` prefix of a term; returns `1` when absent.
    pub fn coefficient_prefix(&mut self, root: u32) -> Result<QScalar, String> {
        if self.is_sym('(') {
            self.pos += 1;
            let c = self.scalar_expr(root)?;
            self.expect_sym(')')?;
            self.expect_sym('*')?;
            Ok(c)
        } else {
            Ok(QScalar::one())
        }
    }
}
