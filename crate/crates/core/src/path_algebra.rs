//! The completed path algebra modulo `m^N`, where `m` is the arrow ideal,
//! and its noncommutative calculus.
//!
//! Every element carries its truncation order `N`: it is a representative
//! of a class in `A / m^N` and stores no path of length `>= N`. Binary
//! operations take the smaller order. Operations that lose a degree
//! (cyclic derivatives, double derivations) lower the order by one.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::quiver::{Path, Quiver};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    quiver: Arc<Quiver>,
    field: Field,
    trunc: usize,
    terms: BTreeMap<Path, Scalar>,
}

fn add_term(terms: &mut BTreeMap<Path, Scalar>, p: Path, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&p) {
        Some(old) => {
            let s = &*old + &c;
            if s.is_zero() {
                terms.remove(&p);
            } else {
                *old = s;
            }
        }
        None => {
            terms.insert(p, c);
        }
    }
}

impl AlgebraElement {
    pub fn zero(quiver: Arc<Quiver>, field: Field, trunc: usize) -> Self {
        AlgebraElement {
            quiver,
            field,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `sum_i e_i`.
    pub fn one(quiver: Arc<Quiver>, field: Field, trunc: usize) -> Self {
        let mut x = Self::zero(quiver.clone(), field, trunc);
        for v in 0..quiver.vertex_count() {
            x.push(Path::trivial(v), field.one());
        }
        x
    }

    pub fn vertex(quiver: Arc<Quiver>, field: Field, trunc: usize, v: usize) -> Self {
        Self::monomial(quiver, field, trunc, Path::trivial(v), field.one())
    }

    pub fn arrow(quiver: Arc<Quiver>, field: Field, trunc: usize, a: usize) -> Self {
        let p = quiver.arrow_path(a);
        Self::monomial(quiver, field, trunc, p, field.one())
    }

    pub fn monomial(quiver: Arc<Quiver>, field: Field, trunc: usize, p: Path, c: Scalar) -> Self {
        let mut x = Self::zero(quiver, field, trunc);
        x.push(p, c);
        x
    }

    /// `c * (a1 a2 ...)` from arrow ids; the walk starts at `start`.
    pub fn from_ids<S: AsRef<str>>(
        quiver: Arc<Quiver>,
        field: Field,
        trunc: usize,
        c: i64,
        start: &str,
        ids: &[S],
    ) -> Result<Self> {
        let p = quiver.path(start, ids)?;
        Ok(Self::monomial(quiver, field, trunc, p, field.scalar(c)))
    }

    /// Builds an element from `(path, coefficient)` pairs, dropping long paths.
    pub fn from_terms<I: IntoIterator<Item = (Path, Scalar)>>(
        quiver: Arc<Quiver>,
        field: Field,
        trunc: usize,
        terms: I,
    ) -> Self {
        let mut x = Self::zero(quiver, field, trunc);
        for (p, c) in terms {
            x.push(p, c);
        }
        x
    }

    /// Adds `c * p` in place; ignored when `p` is at or beyond the truncation.
    pub fn push(&mut self, p: Path, c: Scalar) {
        assert_eq!(c.field(), self.field, "coefficient from another field");
        if p.len() < self.trunc {
            add_term(&mut self.terms, p, c);
        }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn terms(&self) -> &BTreeMap<Path, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, p: &Path) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest path length present, `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).min()
    }

    /// Largest path length present, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Path::len).max()
    }

    /// Reduces to a lower truncation order; raising the order is refused.
    pub fn truncate(&self, n: usize) -> Self {
        assert!(n <= self.trunc, "cannot raise truncation order");
        self.with_terms(n, self.terms.iter().map(|(p, c)| (p.clone(), c.clone())))
    }

    fn with_terms<I: IntoIterator<Item = (Path, Scalar)>>(&self, trunc: usize, terms: I) -> Self {
        Self::from_terms(self.quiver.clone(), self.field, trunc, terms)
    }

    /// Terms of path length exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        self.with_terms(
            self.trunc,
            self.terms
                .iter()
                .filter(|(p, _)| p.len() == d)
                .map(|(p, c)| (p.clone(), c.clone())),
        )
    }

    /// `e_i x e_j` in walk terms: terms starting at `i` and ending at `j`.
    pub fn block(&self, i: usize, j: usize) -> Self {
        self.with_terms(
            self.trunc,
            self.terms
                .iter()
                .filter(|(p, _)| p.start() == i && p.end() == j)
                .map(|(p, c)| (p.clone(), c.clone())),
        )
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        if !Arc::ptr_eq(&self.quiver, &other.quiver) && self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let n = self.trunc.min(other.trunc);
        let mut out = self.truncate(n);
        for (p, c) in &other.terms {
            out.push(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let n = self.trunc.min(other.trunc);
        let mut by_start: Vec<Vec<(&Path, &Scalar)>> = vec![Vec::new(); self.quiver.vertex_count()];
        for (q, d) in &other.terms {
            by_start[q.start()].push((q, d));
        }
        let mut terms = BTreeMap::new();
        for (p, c) in &self.terms {
            for &(q, d) in &by_start[p.end()] {
                if p.len() + q.len() < n {
                    let pq = p.compose(q).expect("walks meet");
                    add_term(&mut terms, pq, c * d);
                }
            }
        }
        Ok(AlgebraElement {
            quiver: self.quiver.clone(),
            field: self.field,
            trunc: n,
            terms,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.with_terms(self.trunc, self.terms.iter().map(|(p, d)| (p.clone(), c * d)))
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&self.field.scalar(c))
    }

    fn neg_ref(&self) -> Self {
        self.with_terms(self.trunc, self.terms.iter().map(|(p, c)| (p.clone(), -c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.quiver.clone(), self.field, self.trunc);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// `sum_a [a, D_a(self) <> y]`.
    pub fn commutator_expansion(&self, y: &Self) -> Result<Self> {
        self.compatible(y)?;
        let n = self.trunc.min(y.trunc);
        let mut acc = self.with_terms(n, std::iter::empty());
        for a in 0..self.quiver.arrow_count() {
            let inner = self.double_derivation(a).diamond(y)?;
            let arrow = Self::arrow(self.quiver.clone(), self.field, n, a);
            acc = acc.try_add(&arrow.commutator(&inner)?)?;
        }
        Ok(acc)
    }

    /// `sum_(i,j) [e_i x e_j, e_j y e_i]`. For `x` without constant term this
    /// equals `commutator_expansion`; it agrees with `[x, y]` when every
    /// term of `y` meeting a term of `x` closes it into a cycle.
    pub fn block_commutator(&self, y: &Self) -> Result<Self> {
        self.compatible(y)?;
        let n = self.trunc.min(y.trunc);
        let mut acc = self.with_terms(n, std::iter::empty());
        let v = self.quiver.vertex_count();
        for i in 0..v {
            for j in 0..v {
                acc = acc.try_add(&self.block(i, j).commutator(&y.block(j, i))?)?;
            }
        }
        Ok(acc)
    }

    /// Linear extension of the rotation `a1...an -> an a1...a(n-1)`. It fixes
    /// trivial paths and vanishes on paths that are not cycles.
    pub fn sigma(&self) -> Self {
        self.with_terms(
            self.trunc,
            self.terms
                .iter()
                .filter_map(|(p, c)| self.quiver.sigma(p).map(|q| (q, c.clone()))),
        )
    }

    /// `N(a1...an) = sum_k sigma^k(a1...an)`, `k < n`; `N(e_i) = 0`.
    pub fn norm_map(&self) -> Self {
        let mut out = self.with_terms(self.trunc, std::iter::empty());
        for (p, c) in &self.terms {
            let mut cur = p.clone();
            for _ in 0..p.len() {
                out.push(cur.clone(), c.clone());
                match self.quiver.sigma(&cur) {
                    Some(next) => cur = next,
                    None => break,
                }
            }
        }
        out
    }

    /// `d_a(a1...an) = sum_{j: aj = a} a(j+1)...an a1...a(j-1)`.
    ///
    /// Errors on terms that are not cycles. The result is known modulo
    /// `m^(N-1)`.
    pub fn cyclic_derivative(&self, a: usize) -> Result<Self> {
        let mut out = self.with_terms(self.trunc.saturating_sub(1), std::iter::empty());
        for (p, c) in &self.terms {
            if !p.is_cycle() {
                return Err(Error::PotentialExpected(self.quiver.format_path(p)));
            }
            let arrows = p.arrows();
            for (j, &b) in arrows.iter().enumerate() {
                if b == a {
                    let mut rot = arrows[j + 1..].to_vec();
                    rot.extend_from_slice(&arrows[..j]);
                    let q = self
                        .quiver
                        .path_from_arrows(self.quiver.target(a), &rot)
                        .expect("rotation of a cycle");
                    out.push(q, c.clone());
                }
            }
        }
        Ok(out)
    }

    /// `D_a(a1...an) = sum_{j: aj = a} a1...a(j-1) (x) a(j+1)...an`.
    pub fn double_derivation(&self, a: usize) -> Tensor {
        let mut t = Tensor::zero(self.quiver.clone(), self.field, self.trunc.saturating_sub(1));
        for (p, c) in &self.terms {
            for (j, &b) in p.arrows().iter().enumerate() {
                if b == a {
                    let left = p.slice(&self.quiver, 0, j);
                    let right = p.slice(&self.quiver, j + 1, p.len());
                    t.push(left, right, c.clone());
                }
            }
        }
        t
    }

    /// Renders as `2*a1*a2 - e_1 + 1/2*b`; zero renders as `0`.
    pub fn format(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(&self.quiver.format_path(p));
        }
        out
    }

    pub fn to_doc(&self) -> ElementDoc {
        ElementDoc {
            field: self.field.to_string(),
            trunc: self.trunc,
            terms: self.term_docs(),
        }
    }

    pub fn term_docs(&self) -> Vec<TermDoc> {
        self.terms
            .iter()
            .map(|(p, c)| TermDoc {
                coeff: c.to_string(),
                start: self.quiver.vertices()[p.start()].clone(),
                path: self.quiver.path_ids(p),
            })
            .collect()
    }

    pub fn from_doc(quiver: Arc<Quiver>, doc: &ElementDoc) -> Result<Self> {
        let field: Field = doc.field.parse()?;
        Self::from_term_docs(quiver, field, doc.trunc, &doc.terms)
    }

    pub fn from_term_docs(quiver: Arc<Quiver>, field: Field, trunc: usize, terms: &[TermDoc]) -> Result<Self> {
        let mut x = Self::zero(quiver.clone(), field, trunc);
        for t in terms {
            let p = quiver.path(&t.start, &t.path)?;
            x.push(p, field.parse_scalar(&t.coeff)?);
        }
        Ok(x)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("serializable")
    }

    pub fn parse_json(quiver: Arc<Quiver>, text: &str) -> Result<Self> {
        let doc: ElementDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        Self::from_doc(quiver, &doc)
    }

    /// Coordinates in the given path basis; `None` if a term lies outside it.
    pub fn coordinates(&self, basis: &[Path]) -> Option<linalg::Vector> {
        let mut v = linalg::zero_vector(self.field, basis.len());
        for (p, c) in &self.terms {
            let i = basis.binary_search(p).ok()?;
            v[i] = c.clone();
        }
        Some(v)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

// Operator forms panic on mismatched operands; use the `try_*` methods to
// handle mismatches as errors.
impl<'a> Add<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("compatible operands")
    }
}

impl<'a> Sub<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("compatible operands")
    }
}

impl<'a> Mul<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("compatible operands")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: String,
    pub start: String,
    pub path: Vec<String>,
}

/// JSON form `{"field": "Q", "trunc": N, "terms": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub field: String,
    pub trunc: usize,
    pub terms: Vec<TermDoc>,
}

/// Finite sums of `c * (a (x) b)`, as produced by double derivations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    quiver: Arc<Quiver>,
    field: Field,
    trunc: usize,
    terms: BTreeMap<(Path, Path), Scalar>,
}

impl Tensor {
    pub fn zero(quiver: Arc<Quiver>, field: Field, trunc: usize) -> Self {
        Tensor {
            quiver,
            field,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn terms(&self) -> &BTreeMap<(Path, Path), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * (a (x) b)`; dropped when `|a| + |b|` reaches the truncation.
    pub fn push(&mut self, a: Path, b: Path, c: Scalar) {
        if c.is_zero() || a.len() + b.len() >= self.trunc {
            return;
        }
        let key = (a, b);
        match self.terms.get_mut(&key) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn try_add(&self, other: &Tensor) -> Result<Tensor> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        let mut out = Tensor::zero(self.quiver.clone(), self.field, self.trunc.min(other.trunc));
        for ((a, b), c) in self.terms.iter().chain(other.terms.iter()) {
            out.push(a.clone(), b.clone(), c.clone());
        }
        Ok(out)
    }

    /// `(a (x) b) <> y = b y a`, extended bilinearly.
    pub fn diamond(&self, y: &AlgebraElement) -> Result<AlgebraElement> {
        if self.field != y.field {
            return Err(Error::FieldMismatch(self.field.to_string(), y.field.to_string()));
        }
        let n = self.trunc.min(y.trunc);
        let mut out = AlgebraElement::zero(y.quiver.clone(), self.field, n);
        for ((a, b), c) in &self.terms {
            for (p, d) in &y.terms {
                if a.len() + b.len() + p.len() >= n {
                    continue;
                }
                if let Some(bp) = b.compose(p) {
                    if let Some(bpa) = bp.compose(a) {
                        out.push(bpa, c * d);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn format(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|((a, b), c)| format!("{c}*{}(x){}", self.quiver.format_path(a), self.quiver.format_path(b)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A continuous homomorphism `phi` from the completed path algebra of
/// `source` to that of `target` with `phi(e_i) = e_i`, given by arrow images.
///
/// The quivers share their vertex list. Each image `phi(a)` walks from
/// `s(a)` to `t(a)` and has no constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    source: Arc<Quiver>,
    target: Arc<Quiver>,
    field: Field,
    trunc: usize,
    images: Vec<AlgebraElement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubstitutionDoc {
    pub source: crate::quiver::QuiverDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<crate::quiver::QuiverDoc>,
    pub field: String,
    pub trunc: usize,
    pub images: BTreeMap<String, Vec<TermDoc>>,
}

impl Substitution {
    pub fn new(source: Arc<Quiver>, target: Arc<Quiver>, images: Vec<AlgebraElement>) -> Result<Self> {
        if source.vertices() != target.vertices() {
            return Err(Error::QuiverMismatch);
        }
        if images.len() != source.arrow_count() {
            return Err(Error::Malformed(format!(
                "expected {} arrow images, got {}",
                source.arrow_count(),
                images.len()
            )));
        }
        let field = images.first().map(AlgebraElement::field).unwrap_or(Field::Rational);
        let mut trunc = usize::MAX;
        for (a, img) in images.iter().enumerate() {
            if img.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), img.field().to_string()));
            }
            if **img.quiver() != *target {
                return Err(Error::QuiverMismatch);
            }
            let (s, t) = (source.source(a), source.target(a));
            for p in img.terms().keys() {
                if p.start() != s || p.end() != t {
                    return Err(Error::BlockViolation {
                        arrow: source.arrow(a).id.clone(),
                        term: target.format_path(p),
                        expected: format!("{} -> {}", source.vertices()[s], source.vertices()[t]),
                    });
                }
                if p.is_trivial() {
                    return Err(Error::Malformed(format!(
                        "image of '{}' has a constant term",
                        source.arrow(a).id
                    )));
                }
            }
            trunc = trunc.min(img.trunc());
        }
        if images.is_empty() {
            trunc = 0;
        }
        Ok(Substitution {
            source,
            target,
            field,
            trunc,
            images,
        })
    }

    pub fn identity(quiver: Arc<Quiver>, field: Field, trunc: usize) -> Self {
        let images = (0..quiver.arrow_count())
            .map(|a| AlgebraElement::arrow(quiver.clone(), field, trunc, a))
            .collect();
        Substitution {
            source: quiver.clone(),
            target: quiver,
            field,
            trunc,
            images,
        }
    }

    pub fn source(&self) -> &Arc<Quiver> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Quiver> {
        &self.target
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn image(&self, a: usize) -> &AlgebraElement {
        &self.images[a]
    }

    /// Image of a single path, at truncation `n`.
    fn apply_path(&self, p: &Path, n: usize) -> AlgebraElement {
        let mut acc = AlgebraElement::vertex(self.target.clone(), self.field, n, p.start());
        for &a in p.arrows() {
            acc = &acc * &self.images[a].truncate(n.min(self.images[a].trunc()));
            if acc.is_zero() {
                break;
            }
        }
        acc.truncate(n)
    }

    /// `phi(x)`, known modulo `m^min(N_x, N_phi)`.
    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if x.field() != self.field {
            return Err(Error::FieldMismatch(self.field.to_string(), x.field().to_string()));
        }
        if **x.quiver() != *self.source {
            return Err(Error::QuiverMismatch);
        }
        let n = x.trunc().min(self.trunc);
        let mut out = AlgebraElement::zero(self.target.clone(), self.field, n);
        for (p, c) in x.terms() {
            if p.len() >= n {
                continue;
            }
            let img = self.apply_path(p, n).scale(c);
            out = &out + &img;
        }
        Ok(out)
    }

    /// `self o inner`: apply `inner` first, then `self`.
    pub fn compose(&self, inner: &Substitution) -> Result<Substitution> {
        if *inner.target != *self.source {
            return Err(Error::QuiverMismatch);
        }
        let images = inner
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>>>()?;
        let mut s = Substitution::new(inner.source.clone(), self.target.clone(), images)?;
        if inner.images.is_empty() {
            s.field = self.field;
        }
        Ok(s)
    }

    /// Matrix of the linear part: entry `(b, a)` is the coefficient of the
    /// arrow `b` in `phi(a)`.
    pub fn linear_part(&self) -> Vec<linalg::Vector> {
        let n = self.target.arrow_count();
        self.images
            .iter()
            .map(|img| {
                let mut col = linalg::zero_vector(self.field, n);
                for (p, c) in img.terms() {
                    if p.len() == 1 {
                        col[p.arrows()[0]] = c.clone();
                    }
                }
                col
            })
            .collect()
    }

    /// Invertible iff the linear part is an invertible square matrix.
    pub fn is_invertible(&self) -> bool {
        let n = self.source.arrow_count();
        if n != self.target.arrow_count() {
            return false;
        }
        linalg::rank(self.field, n, &self.linear_part()) == n
    }

    pub fn to_doc(&self) -> SubstitutionDoc {
        SubstitutionDoc {
            source: self.source.to_doc(),
            target: if self.source == self.target {
                None
            } else {
                Some(self.target.to_doc())
            },
            field: self.field.to_string(),
            trunc: self.trunc,
            images: self
                .images
                .iter()
                .enumerate()
                .map(|(a, img)| (self.source.arrow(a).id.clone(), img.term_docs()))
                .collect(),
        }
    }

    pub fn from_doc(doc: &SubstitutionDoc) -> Result<Self> {
        let source = Arc::new(Quiver::from_doc(&doc.source)?);
        let target = match &doc.target {
            Some(t) => Arc::new(Quiver::from_doc(t)?),
            None => source.clone(),
        };
        let field: Field = doc.field.parse()?;
        for id in doc.images.keys() {
            source.arrow_by_id(id)?;
        }
        let mut images = Vec::with_capacity(source.arrow_count());
        for a in source.arrows() {
            let img = match doc.images.get(&a.id) {
                Some(terms) => AlgebraElement::from_term_docs(target.clone(), field, doc.trunc, terms)?,
                None => AlgebraElement::zero(target.clone(), field, doc.trunc),
            };
            images.push(img);
        }
        let mut s = Substitution::new(source, target, images)?;
        s.field = field;
        s.trunc = doc.trunc;
        Ok(s)
    }
}
