//! Elements of B = k[x,y,z]/(xy,yz,xz).
//!
//! A degree-`d` piece of B has basis `{1}` for `d = 0` and
//! `{x^d, y^d, z^d}` for `d >= 1`; every mixed monomial is zero.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];
}

/// A surviving monomial of B: `1` or a pure power `v^e` with `e >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mono {
    One,
    Pow(Var, u32),
}

impl Mono {
    pub fn degree(&self) -> u32 {
        match self {
            Mono::One => 0,
            Mono::Pow(_, e) => *e,
        }
    }

    /// Product in B; `None` when it vanishes.
    pub fn mul(&self, other: &Mono) -> Option<Mono> {
        match (self, other) {
            (Mono::One, m) | (m, Mono::One) => Some(*m),
            (Mono::Pow(a, e), Mono::Pow(b, f)) if a == b => Some(Mono::Pow(*a, e + f)),
            _ => None,
        }
    }

    /// Basis of `B_d` in the fixed order `1` / `x^d, y^d, z^d`.
    pub fn basis(d: u32) -> Vec<Mono> {
        if d == 0 {
            vec![Mono::One]
        } else {
            Var::ALL.iter().map(|&v| Mono::Pow(v, d)).collect()
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mono::One => f.write_str("1"),
            Mono::Pow(v, e) => {
                let c = match v {
                    Var::X => 'x',
                    Var::Y => 'y',
                    Var::Z => 'z',
                };
                if *e == 1 {
                    write!(f, "{c}")
                } else {
                    write!(f, "{c}^{e}")
                }
            }
        }
    }
}

/// A polynomial in B with rational coefficients, stored reduced.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BPoly {
    terms: BTreeMap<Mono, BigRational>,
}

impl BPoly {
    pub fn zero() -> Self {
        BPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(Mono::One, c)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Mono::Pow(v, 1), BigRational::one())
    }

    pub fn monomial(m: Mono, c: BigRational) -> Self {
        let mut p = BPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    /// The common degree of all terms, or `None` for zero or inhomogeneous
    /// polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Mono::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Mono::One).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Mono, c: BigRational) {
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &BPoly) -> BPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> BPoly {
        BPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &BPoly) -> BPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &BPoly) -> BPoly {
        let mut out = BPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                if let Some(mn) = m.mul(n) {
                    out.add_term(mn, c.clone() * d.clone());
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> BPoly {
        let mut base = self.clone();
        let mut acc = BPoly::constant(BigRational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> BPoly {
        let mut out = BPoly::zero();
        for (m, d) in &self.terms {
            out.add_term(*m, c.clone() * d.clone());
        }
        out
    }

    /// Coefficients mapped into `field`.
    pub fn to_field<F: Field>(&self, field: &F) -> Result<Vec<(Mono, F::Elem)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = field.embed(c)?;
            if !field.is_zero(&e) {
                out.push((*m, e));
            }
        }
        Ok(out)
    }

    /// Parses `x^2 - 1/2*y^2`, `(x+y+z)^3`, `2x`, ... and reduces in B.
    pub fn parse(s: &str) -> Result<BPoly> {
        let tokens = tokenize(s)?;
        let mut p = Parser { tokens, pos: 0 };
        let out = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(parse_err(format!("unexpected trailing input in `{s}`")));
        }
        Ok(out)
    }
}

impl fmt::Display for BPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (m, a.is_one()) {
                (Mono::One, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "{m}")?,
                (_, false) => write!(f, "{a}*{m}")?,
            }
        }
        Ok(())
    }
}

fn parse_err(msg: String) -> Error {
    Error::Parse { line: 0, msg }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(num_bigint::BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        i += 1;
        let tok = match c {
            ' ' | '\t' => continue,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            'x' => Token::Var(Var::X),
            'y' => Token::Var(Var::Y),
            'z' => Token::Var(Var::Z),
            d if d.is_ascii_digit() => {
                let start = i - 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                Token::Num(digits.parse().expect("ascii digits"))
            }
            other => return Err(parse_err(format!("unexpected character `{other}`"))),
        };
        out.push(tok);
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<BPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := unary (('*' | '/') unary | unary)*, juxtaposition multiplies
    fn term(&mut self) -> Result<BPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let c = d
                        .as_constant()
                        .filter(|c| !c.is_zero())
                        .ok_or_else(|| parse_err("division by a non-constant or zero".into()))?;
                    acc = acc.scale(&c.recip());
                }
                Some(Token::Num(_) | Token::Var(_) | Token::Open) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<BPoly> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if self.peek() == Some(&Token::Plus) {
            self.pos += 1;
        }
        self.power()
    }

    fn power(&mut self) -> Result<BPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Token::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| parse_err("exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(parse_err("expected a nonnegative integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BPoly> {
        match self.next() {
            Some(Token::Num(n)) => Ok(BPoly::constant(BigRational::from_integer(n))),
            Some(Token::Var(v)) => Ok(BPoly::var(v)),
            Some(Token::Open) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(e),
                    _ => Err(parse_err("missing `)`".into())),
                }
            }
            Some(t) => Err(parse_err(format!("unexpected token {t:?}"))),
            None => Err(parse_err("unexpected end of polynomial".into())),
        }
    }
}
