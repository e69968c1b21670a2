//! Sparse multivariate polynomials over the integers, with exact division
//! and gcd.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> MultiPoly {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> MultiPoly {
        MultiPoly::term(nvars, Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> MultiPoly {
        MultiPoly::constant(nvars, 1)
    }

    pub fn var(nvars: usize, i: usize) -> MultiPoly {
        MultiPoly::term(nvars, Monomial::var(nvars, i), 1)
    }

    pub fn term(nvars: usize, m: Monomial, c: impl Into<BigInt>) -> MultiPoly {
        assert_eq!(m.0.len(), nvars);
        let mut p = MultiPoly::zero(nvars);
        p.add_term(m, c.into());
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.degree() == 0 && c.is_one())
    }

    /// A single term with coefficient 1.
    pub fn is_monic_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().is_some_and(BigInt::is_one)
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `self / d` when the division is exact.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = d.leading()?;
        let mut r = self.clone();
        let mut q = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = r.leading() {
            let qm = m.div(lm)?;
            let (qc, rem) = c.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            let t = MultiPoly::term(self.nvars, qm, qc);
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    /// gcd of the coefficients, nonnegative.
    pub fn integer_content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Coefficients as a polynomial in variable `v`: entry `k` holds the
    /// coefficient of `v^k`.
    fn coefficients_in(&self, v: usize) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(self.nvars); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let k = m.0[v] as usize;
            let mut m2 = m.clone();
            m2.0[v] = 0;
            out[k].add_term(m2, c.clone());
        }
        out
    }

    fn from_coefficients(nvars: usize, v: usize, cs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero(nvars);
        for (k, c) in cs.iter().enumerate() {
            for (m, x) in &c.terms {
                let mut m2 = m.clone();
                m2.0[v] += k as u32;
                out.add_term(m2, x.clone());
            }
        }
        out
    }

    /// Normalizes the sign so the leading coefficient is positive.
    pub fn normalize_sign(&self) -> MultiPoly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &MultiPoly) -> MultiPoly {
        gcd_rec(self, other).normalize_sign()
    }
}

fn main_variable(a: &MultiPoly, b: &MultiPoly) -> Option<usize> {
    (0..a.nvars).find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
}

fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let n = a.nvars;
    let Some(v) = main_variable(a, b) else {
        let g = a.integer_content().gcd(&b.integer_content());
        return MultiPoly::constant(n, g);
    };
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd_rec(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() && q.degree_in(v) > 0 {
        let r = pseudo_remainder(&p, &q, v);
        p = q;
        q = if r.is_zero() {
            r
        } else {
            let cr = content_in(&r, v);
            r.div_exact(&cr).expect("content divides")
        };
    }
    // a nonzero remainder of degree 0 means the primitive parts are coprime
    let g = if q.is_zero() {
        let cp = content_in(&p, v);
        p.div_exact(&cp).expect("content divides")
    } else {
        MultiPoly::one(n)
    };
    c.mul(&g).normalize_sign()
}

/// gcd of the coefficients of `a` viewed as a polynomial in `v`.
fn content_in(a: &MultiPoly, v: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(a.nvars);
    for c in a.coefficients_in(v) {
        g = gcd_rec(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g.normalize_sign()
}

fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let n = a.nvars;
    let bc = b.coefficients_in(v);
    let db = bc.len() - 1;
    let lb = bc[db].clone();
    let mut r = a.coefficients_in(v);
    while r.len() > db && !r.iter().all(MultiPoly::is_zero) {
        let dr = r.len() - 1;
        if r[dr].is_zero() {
            r.pop();
            continue;
        }
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        for (k, c) in bc.iter().enumerate() {
            let idx = dr - db + k;
            r[idx] = r[idx].sub(&lr.mul(c));
        }
        r.pop();
    }
    MultiPoly::from_coefficients(n, v, &r)
}
