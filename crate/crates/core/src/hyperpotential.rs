//! Potentials and hyperpotentials.
//!
//! A hyperpotential on `Q` is a family `(rho_a)` with every `rho_a` walking
//! from `t(a)` back to `s(a)` and `sum_a [a, rho_a] = 0`. The first condition
//! is enforced on construction. The second is a verdict, checked modulo
//! `m^N` for the element's truncation order `N`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path_algebra::{AlgebraElement, Substitution, TermDoc};
use crate::quiver::{Quiver, QuiverDoc};
use crate::scalar::{Field, Scalar};

/// A linear combination of nontrivial cycles, each term stored as its
/// lex-minimal rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potential {
    element: AlgebraElement,
}

impl Potential {
    pub fn new(x: &AlgebraElement) -> Result<Potential> {
        let q = x.quiver().clone();
        let mut w = AlgebraElement::zero(q.clone(), x.field(), x.trunc());
        for (p, c) in x.terms() {
            if !p.is_cycle() || p.is_trivial() {
                return Err(Error::PotentialExpected(q.format_path(p)));
            }
            w.push(q.canonical_rotation(p), c.clone());
        }
        Ok(Potential { element: w })
    }

    pub fn element(&self) -> &AlgebraElement {
        &self.element
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        self.element.quiver()
    }

    pub fn field(&self) -> Field {
        self.element.field()
    }

    pub fn trunc(&self) -> usize {
        self.element.trunc()
    }

    pub fn to_doc(&self) -> PotentialDoc {
        PotentialDoc {
            quiver: self.quiver().to_doc(),
            field: self.field().to_string(),
            trunc: self.trunc(),
            terms: self.element.term_docs(),
        }
    }

    pub fn from_doc(doc: &PotentialDoc) -> Result<Potential> {
        let q = Arc::new(Quiver::from_doc(&doc.quiver)?);
        let field: Field = doc.field.parse()?;
        Potential::new(&AlgebraElement::from_term_docs(q, field, doc.trunc, &doc.terms)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialDoc {
    pub quiver: QuiverDoc,
    pub field: String,
    pub trunc: usize,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperpotential {
    quiver: Arc<Quiver>,
    field: Field,
    trunc: usize,
    rho: Vec<AlgebraElement>,
}

/// Verdict of condition (ii).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperpotentialCheck {
    pub ok: bool,
    /// The identity was checked for all paths of length below this bound.
    pub verified_below: usize,
    /// Nonzero terms of `sum_a [a, rho_a]`, as `(coefficient, path)`.
    pub violations: Vec<(String, String)>,
}

impl Hyperpotential {
    /// Checks the block condition; components are truncated to `trunc`.
    pub fn new(quiver: Arc<Quiver>, field: Field, trunc: usize, rho: Vec<AlgebraElement>) -> Result<Self> {
        if rho.len() != quiver.arrow_count() {
            return Err(Error::Malformed(format!(
                "expected {} components, got {}",
                quiver.arrow_count(),
                rho.len()
            )));
        }
        let mut comps = Vec::with_capacity(rho.len());
        for (a, r) in rho.into_iter().enumerate() {
            if r.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), r.field().to_string()));
            }
            if **r.quiver() != *quiver {
                return Err(Error::QuiverMismatch);
            }
            if r.trunc() < trunc {
                return Err(Error::InvalidParameters(format!(
                    "component '{}' is only known below length {}",
                    quiver.arrow(a).id,
                    r.trunc()
                )));
            }
            let (s, t) = (quiver.source(a), quiver.target(a));
            for p in r.terms().keys() {
                if p.start() != t || p.end() != s {
                    return Err(Error::BlockViolation {
                        arrow: quiver.arrow(a).id.clone(),
                        term: quiver.format_path(p),
                        expected: format!("{} -> {}", quiver.vertices()[t], quiver.vertices()[s]),
                    });
                }
            }
            comps.push(r.truncate(trunc));
        }
        Ok(Hyperpotential {
            quiver,
            field,
            trunc,
            rho: comps,
        })
    }

    pub fn zero(quiver: Arc<Quiver>, field: Field, trunc: usize) -> Self {
        let rho = (0..quiver.arrow_count())
            .map(|_| AlgebraElement::zero(quiver.clone(), field, trunc))
            .collect();
        Hyperpotential {
            quiver,
            field,
            trunc,
            rho,
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

    pub fn rho(&self) -> &[AlgebraElement] {
        &self.rho
    }

    pub fn component(&self, id: &str) -> Result<&AlgebraElement> {
        Ok(&self.rho[self.quiver.arrow_by_id(id)?])
    }

    pub fn is_zero(&self) -> bool {
        self.rho.iter().all(AlgebraElement::is_zero)
    }

    /// `sum_a [a, rho_a]` modulo `m^N`.
    pub fn commutator_sum(&self) -> AlgebraElement {
        let mut acc = AlgebraElement::zero(self.quiver.clone(), self.field, self.trunc);
        for (a, r) in self.rho.iter().enumerate() {
            let arrow = AlgebraElement::arrow(self.quiver.clone(), self.field, self.trunc, a);
            acc = &acc + &arrow.commutator(r).expect("same algebra");
        }
        acc
    }

    pub fn check(&self) -> HyperpotentialCheck {
        let s = self.commutator_sum();
        HyperpotentialCheck {
            ok: s.is_zero(),
            verified_below: self.trunc,
            violations: s
                .terms()
                .iter()
                .map(|(p, c)| (c.to_string(), self.quiver.format_path(p)))
                .collect(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.commutator_sum().is_zero()
    }

    pub fn truncate(&self, n: usize) -> Self {
        Hyperpotential {
            quiver: self.quiver.clone(),
            field: self.field,
            trunc: n,
            rho: self.rho.iter().map(|r| r.truncate(n)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Hyperpotential {
            quiver: self.quiver.clone(),
            field: self.field,
            trunc: self.trunc,
            rho: self.rho.iter().map(|r| r.scale(c)).collect(),
        }
    }

    /// Componentwise equality at the common truncation order.
    pub fn agrees_with(&self, other: &Hyperpotential) -> bool {
        if self.field != other.field || *self.quiver != *other.quiver {
            return false;
        }
        let n = self.trunc.min(other.trunc);
        self.truncate(n).rho == other.truncate(n).rho
    }

    pub fn to_doc(&self) -> HyperpotentialDoc {
        HyperpotentialDoc {
            quiver: self.quiver.to_doc(),
            field: self.field.to_string(),
            trunc: self.trunc,
            rho: self
                .rho
                .iter()
                .enumerate()
                .map(|(a, r)| (self.quiver.arrow(a).id.clone(), r.term_docs()))
                .collect(),
        }
    }

    pub fn from_doc(doc: &HyperpotentialDoc) -> Result<Self> {
        let q = Arc::new(Quiver::from_doc(&doc.quiver)?);
        let field: Field = doc.field.parse()?;
        for id in doc.rho.keys() {
            q.arrow_by_id(id)?;
        }
        let rho = q
            .arrows()
            .iter()
            .map(|a| match doc.rho.get(&a.id) {
                Some(terms) => AlgebraElement::from_term_docs(q.clone(), field, doc.trunc, terms),
                None => Ok(AlgebraElement::zero(q.clone(), field, doc.trunc)),
            })
            .collect::<Result<Vec<_>>>()?;
        Hyperpotential::new(q, field, doc.trunc, rho)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let doc: HyperpotentialDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        Self::from_doc(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("serializable")
    }
}

/// JSON form: a quiver plus `{"rho": {"a1": [terms], ...}, "trunc": N}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperpotentialDoc {
    pub quiver: QuiverDoc,
    pub field: String,
    pub trunc: usize,
    pub rho: BTreeMap<String, Vec<TermDoc>>,
}

/// `rho_a = d_a W`, known modulo `m^(N-1)`.
pub fn from_potential(w: &Potential) -> Hyperpotential {
    let q = w.quiver().clone();
    let n = w.trunc().saturating_sub(1);
    let rho = (0..q.arrow_count())
        .map(|a| w.element().cyclic_derivative(a).expect("potential"))
        .collect();
    Hyperpotential::new(q, w.field(), n, rho).expect("cyclic derivatives satisfy the block condition")
}

/// `rho'_b = sum_a D_b(phi(a)) <> phi(rho_a)`.
pub fn transport(phi: &Substitution, h: &Hyperpotential) -> Result<Hyperpotential> {
    if **phi.source() != *h.quiver {
        return Err(Error::QuiverMismatch);
    }
    if phi.field() != h.field {
        return Err(Error::FieldMismatch(phi.field().to_string(), h.field.to_string()));
    }
    let target = phi.target().clone();
    let n = h.trunc.min(phi.trunc().saturating_sub(1));
    let images: Vec<AlgebraElement> = h.rho.iter().map(|r| phi.apply(r)).collect::<Result<_>>()?;
    let mut rho = Vec::with_capacity(target.arrow_count());
    for b in 0..target.arrow_count() {
        let mut acc = AlgebraElement::zero(target.clone(), h.field, n);
        for (a, img) in images.iter().enumerate() {
            let t = phi.image(a).double_derivation(b);
            if t.is_zero() {
                continue;
            }
            acc = &acc + &t.diamond(img)?;
        }
        rho.push(acc.truncate(n));
    }
    Hyperpotential::new(target, h.field, n, rho)
}

fn require_invertible(phi: &Substitution) -> Result<()> {
    if !phi.is_invertible() {
        return Err(Error::NotInvertible("linear part is singular".to_string()));
    }
    Ok(())
}

/// Whether `transport(phi, h) = h'` modulo the common truncation order.
pub fn verify_right_equivalence(phi: &Substitution, h: &Hyperpotential, h2: &Hyperpotential) -> Result<bool> {
    require_invertible(phi)?;
    Ok(transport(phi, h)?.agrees_with(h2))
}

/// Whether `transport(phi, c h) = h'` modulo the common truncation order.
pub fn verify_weak_right_equivalence(
    phi: &Substitution,
    c: &Scalar,
    h: &Hyperpotential,
    h2: &Hyperpotential,
) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::InvalidParameters("scalar must be a unit".to_string()));
    }
    require_invertible(phi)?;
    Ok(transport(phi, &h.scale(c))?.agrees_with(h2))
}
