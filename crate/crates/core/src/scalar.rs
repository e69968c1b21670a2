//! Exact coefficient fields: the rationals and prime fields GF(p).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// GF(p); rejects non-primes and moduli that do not fit in 32 bits.
    pub fn prime(p: u64) -> Result<Field> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::from_i64(*self, 0)
    }

    pub fn one(&self) -> Scalar {
        Scalar::from_i64(*self, 1)
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        Scalar::from_i64(*self, n)
    }

    /// Parses a scalar such as `"3"`, `"-2"` or `"3/2"` into this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::BadScalar(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(_) => {
                let n = Scalar::from_bigint(*self, &num);
                let d = Scalar::from_bigint(*self, &den);
                n.try_div(&d)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `GF(p)` and `GF:p`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(Field::Rational);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("GF:"))
            .ok_or_else(|| Error::Parse(format!("unknown field '{s}'")))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("unknown field '{s}'")))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. GF(p) residues are kept in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn from_i64(field: Field, n: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(field: Field, n: &BigInt) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Scalar::Prime {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    pub fn rational(num: i64, den: i64) -> Scalar {
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: (a + b) % modulus,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&-other.clone())
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        let inv = other.inverse().ok_or(Error::DivisionByZero)?;
        self.try_mul(&inv)
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m as u128;
        }
        base = base * base % m as u128;
        e >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator forms panic on mixed fields; the `try_*` forms report the mismatch.
impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("mixed-field arithmetic")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("mixed-field arithmetic")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("mixed-field arithmetic")
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.try_div(rhs).expect("mixed-field arithmetic or division by zero")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus,
            },
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

/// Sign of a rational scalar; prime-field scalars report `None`.
pub fn rational_sign(s: &Scalar) -> Option<i8> {
    match s {
        Scalar::Rational(r) => Some(if r.is_zero() {
            0
        } else if r.is_positive() {
            1
        } else {
            -1
        }),
        Scalar::Prime { .. } => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_normalizes() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.scalar(-1), f.scalar(4));
        assert_eq!(f.scalar(7).to_string(), "2");
        assert!(f.scalar(10).is_zero());
    }

    #[test]
    fn rejects_non_primes() {
        assert_eq!(Field::prime(4), Err(Error::NotPrime(4)));
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Field::Rational.one();
        let b = Field::prime(3).unwrap().one();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn inverses() {
        let f = Field::prime(7).unwrap();
        for n in 1..7 {
            let x = f.scalar(n);
            assert!((&x * &x.inverse().unwrap()).is_one());
        }
        let q = Field::Rational.scalar(4);
        assert_eq!(q.inverse().unwrap(), Scalar::rational(1, 4));
        assert!(f.zero().inverse().is_none());
    }

    #[test]
    fn parse_and_display() {
        let q = Field::Rational;
        assert_eq!(q.parse_scalar("3/2").unwrap().to_string(), "3/2");
        assert_eq!(q.parse_scalar("-4/2").unwrap().to_string(), "-2");
        let f = Field::prime(5).unwrap();
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.scalar(3));
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("x").is_err());
    }

    #[test]
    fn field_strings() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("GF:2".parse::<Field>().unwrap(), Field::Prime(2));
        assert_eq!("GF(3)".parse::<Field>().unwrap(), Field::Prime(3));
        assert!("GF(6)".parse::<Field>().is_err());
        assert_eq!(Field::Prime(3).to_string(), "GF(3)");
    }

    #[test]
    fn powers() {
        let f = Field::prime(2).unwrap();
        assert!(f.scalar(2).pow(3).is_zero());
        assert_eq!(Field::Rational.scalar(2).pow(10), Field::Rational.scalar(1024));
        assert!(Field::Rational.scalar(5).pow(0).is_one());
    }
}
