//! Tokenizer and recursive-descent parser for integer polynomial expressions.
//!
//! Grammar: sums of products of powers; `*` may be omitted between factors
//! (`2c3`, `3 zeta`). Identifiers may contain letters, digits, `_` and `'`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{ChowError, Result};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

pub fn tokenize(s: &str) -> Result<Vec<Token>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Token::Plus),
            '-' | '−' => Some(Token::Minus),
            '*' | '·' => Some(Token::Star),
            '^' => Some(Token::Caret),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push(t);
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = cs[st..i].iter().collect();
            out.push(Token::Int(txt.parse().unwrap()));
        } else if is_ident_start(c) {
            let st = i;
            while i < cs.len() && is_ident_char(cs[i]) {
                i += 1;
            }
            out.push(Token::Ident(cs[st..i].iter().collect()));
        } else {
            return Err(ChowError::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a, F: Fn(&str) -> Option<usize>> {
    toks: &'a [Token],
    pos: usize,
    nvars: usize,
    lookup: F,
}

impl<F: Fn(&str) -> Option<usize>> Parser<'_, F> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.nvars);
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Token::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(Token::Plus) => sign = 1,
                Some(Token::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Token::Int(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let e = match self.peek() {
                Some(Token::Int(n)) => {
                    let n = n.clone();
                    self.pos += 1;
                    n
                }
                Some(Token::LParen) => {
                    self.pos += 1;
                    let e = self.expr()?;
                    self.expect_rparen()?;
                    e.as_constant().ok_or_else(|| ChowError::Parse("exponent must be a constant".into()))?
                }
                _ => return Err(ChowError::Parse("expected exponent after ^".into())),
            };
            if e.is_negative() {
                return Err(ChowError::Parse("negative exponent".into()));
            }
            let e = e.to_u32().ok_or_else(|| ChowError::Parse("exponent too large".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn expect_rparen(&mut self) -> Result<()> {
        if self.peek() == Some(&Token::RParen) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ChowError::Parse("expected )".into()))
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(Poly::constant(self.nvars, n))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let i = (self.lookup)(&name).ok_or(ChowError::UnknownGenerator(name))?;
                Ok(Poly::var(self.nvars, i))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_rparen()?;
                Ok(e)
            }
            other => Err(ChowError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a token stream completely.
pub fn parse_tokens(toks: &[Token], nvars: usize, lookup: impl Fn(&str) -> Option<usize>) -> Result<Poly> {
    if toks.is_empty() {
        return Err(ChowError::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, nvars, lookup };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(ChowError::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

/// Parses `lhs` or `lhs = rhs` (meaning lhs − rhs).
pub fn parse_relation(s: &str, nvars: usize, lookup: impl Fn(&str) -> Option<usize> + Copy) -> Result<Poly> {
    match s.split_once('=') {
        Some((l, r)) => {
            let a = parse_tokens(&tokenize(l)?, nvars, lookup)?;
            let b = parse_tokens(&tokenize(r)?, nvars, lookup)?;
            Ok(a.sub(&b))
        }
        None => parse_tokens(&tokenize(s)?, nvars, lookup),
    }
}
