//! Reduced fractions of integer polynomials, with a parser and a compact
//! display form such as `(x^3+y+1)/(xy)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::{Monomial, MultiPoly};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` having positive leading
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = num.nvars();
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: MultiPoly::one(n),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).ok_or_else(|| Error::Internal("gcd".into()))?;
        let mut den = den.div_exact(&g).ok_or_else(|| Error::Internal("gcd".into()))?;
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> RationalFunction {
        let n = p.nvars();
        RationalFunction {
            num: p,
            den: MultiPoly::one(n),
        }
    }

    pub fn var(nvars: usize, i: usize) -> RationalFunction {
        RationalFunction::from_poly(MultiPoly::var(nvars, i))
    }

    pub fn constant(nvars: usize, c: i64) -> RationalFunction {
        RationalFunction::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        RationalFunction::new(num, self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &RationalFunction) -> RationalFunction {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn div(&self, o: &RationalFunction) -> Result<RationalFunction> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn pow(&self, e: u32) -> RationalFunction {
        RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Whether the denominator is a monomial with coefficient 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monic_monomial()
    }

    /// Whether every numerator coefficient is positive.
    pub fn has_positive_numerator(&self) -> bool {
        self.num.terms().values().all(BigInt::is_positive)
    }

    pub fn parse(s: &str, names: &[&str]) -> Result<RationalFunction> {
        let mut p = Parser {
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            names,
        };
        let r = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("unexpected '{}' in '{s}'", p.chars[p.pos])));
        }
        Ok(r)
    }

    pub fn display(&self, names: &[&str]) -> String {
        let num = format_poly(&self.num, names);
        if self.den.is_one() {
            return num;
        }
        let den = format_poly(&self.den, names);
        let num = if self.num.terms().len() > 1 {
            format!("({num})")
        } else {
            num
        };
        let single_power = self.den.is_monic_monomial()
            && self
                .den
                .leading()
                .is_some_and(|(m, _)| m.0.iter().filter(|&&e| e > 0).count() == 1);
        if single_power {
            format!("{num}/{den}")
        } else {
            format!("{num}/({den})")
        }
    }
}

/// Default variable names: `x, y` for two variables, else `x1, x2, ...`.
pub fn default_names(n: usize) -> Vec<String> {
    if n == 2 {
        vec!["x".into(), "y".into()]
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars());
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.display(&refs))
    }
}

fn format_monomial(m: &Monomial, names: &[&str]) -> String {
    let single_letter = names.iter().all(|n| n.chars().count() == 1);
    let parts: Vec<String> =
        m.0.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].to_string()
                } else {
                    format!("{}^{e}", names[i])
                }
            })
            .collect();
    parts.join(if single_letter { "" } else { "*" })
}

/// Terms in decreasing graded-lex order, e.g. `x^6+3x^3y+2x^3+1`.
pub fn format_poly(p: &MultiPoly, names: &[&str]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let single_letter = names.iter().all(|n| n.chars().count() == 1);
    let mut s = String::new();
    for (k, (m, c)) in p.terms().iter().rev().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        let mono = format_monomial(m, names);
        if mono.is_empty() {
            s.push_str(&a.to_string());
        } else if a.is_one() {
            s.push_str(&mono);
        } else if single_letter {
            s.push_str(&format!("{a}{mono}"));
        } else {
            s.push_str(&format!("{a}*{mono}"));
        }
    }
    s
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [&'a str],
}

fn superscript(c: char) -> Option<u32> {
    "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|s| s == c).map(|k| k as u32)
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {}", self.pos))
    }

    fn n(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = if self.peek() == Some('-') {
            self.pos += 1;
            self.term()?.neg()
        } else {
            self.term()?
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn starts_primary(&self) -> bool {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '(' => true,
            Some(_) => self.names.iter().any(|n| self.rest_starts_with(n)),
            None => false,
        }
    }

    fn rest_starts_with(&self, w: &str) -> bool {
        let wc: Vec<char> = w.chars().collect();
        self.chars[self.pos..].starts_with(&wc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some('/') => {
                    self.pos += 1;
                    acc = acc.div(&self.power()?)?;
                }
                _ if self.starts_primary() => acc = acc.mul(&self.power()?),
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.primary()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let e: String = self.chars[start..self.pos].iter().collect();
            let e: u32 = e.parse().map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        let mut e: Option<u32> = None;
        while let Some(d) = self.peek().and_then(superscript) {
            e = Some(e.unwrap_or(0) * 10 + d);
            self.pos += 1;
        }
        Ok(match e {
            Some(e) => base.pow(e),
            None => base,
        })
    }

    fn primary(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let r = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(r)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let k: BigInt = s.parse().map_err(|_| self.err("bad integer"))?;
                Ok(RationalFunction::from_poly(MultiPoly::constant(self.n(), k)))
            }
            Some(_) => {
                let mut best: Option<(usize, usize)> = None;
                for (i, name) in self.names.iter().enumerate() {
                    let len = name.chars().count();
                    if self.rest_starts_with(name) && best.is_none_or(|(_, l)| len > l) {
                        best = Some((i, len));
                    }
                }
                let (i, len) = best.ok_or_else(|| self.err("unknown symbol"))?;
                self.pos += len;
                Ok(RationalFunction::var(self.n(), i))
            }
            None => Err(self.err("unexpected end")),
        }
    }
}
