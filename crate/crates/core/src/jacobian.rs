//! Jacobian algebras as truncated quotients.
//!
//! For a degree budget `d` the quotient `A / (I + m^d)` is computed as the
//! span of paths of length `< d` modulo all `p rho_a q` cut below length
//! `d`. If `dim_d = dim_(d+1)` then `m^d` lies in `I + m^(d+1)`, and
//! iterating in the complete algebra puts `m^d` inside the closure of `I`:
//! the Jacobian algebra is finite dimensional of dimension `dim_d`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperpotential::{from_potential, Hyperpotential, Potential};
use crate::linalg::Echelon;
use crate::path_algebra::AlgebraElement;
use crate::quiver::{Path, Quiver};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    pub quiver: Arc<Quiver>,
    pub field: Field,
    /// The budget that was asked for.
    pub requested_trunc: usize,
    /// The budget actually used: never beyond the order to which the
    /// relations are known.
    pub trunc: usize,
    /// `dims[d] = dim A / (I + m^d)` for `d = 0..=trunc`.
    pub dims: Vec<usize>,
    /// Smallest `d` with `dims[d] = dims[d+1]`.
    pub stabilized_at: Option<usize>,
    /// Quotient basis paths at the stabilization degree, or at `trunc`.
    pub basis: Vec<Path>,
}

impl QuotientBasis {
    pub fn stabilized(&self) -> bool {
        self.stabilized_at.is_some()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.stabilized_at.map(|d| self.dims[d])
    }

    pub fn report(&self) -> JacobianReport {
        JacobianReport {
            dims: self.dims.clone(),
            stabilized: self.stabilized(),
            dimension: self.dimension(),
            basis: self.basis.iter().map(|p| self.quiver.format_path(p)).collect(),
            trunc: self.trunc,
        }
    }
}

/// JSON report `{"dims": [...], "stabilized": true, "dimension": 28, "basis": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobianReport {
    pub dims: Vec<usize>,
    pub stabilized: bool,
    pub dimension: Option<usize>,
    pub basis: Vec<String>,
    pub trunc: usize,
}

fn quotient_at(h: &Hyperpotential, d: usize) -> (usize, Vec<Path>) {
    let q = h.quiver();
    let field = h.field();
    let paths = q.all_paths(d);
    if paths.is_empty() {
        return (0, Vec::new());
    }
    let mut ech = Echelon::new(field, paths.len());
    for (a, rho) in h.rho().iter().enumerate() {
        let rho = rho.truncate(d.min(rho.trunc()));
        let Some(v) = rho.valuation() else { continue };
        let budget = d - v;
        // p ends at t(a), q starts at s(a)
        let lefts: Vec<Path> = paths
            .iter()
            .filter(|p| p.end() == q.target(a) && p.len() < budget)
            .cloned()
            .collect();
        let rights: Vec<Path> = q.paths_from(q.source(a), budget);
        for p in &lefts {
            let pl = AlgebraElement::monomial(q.clone(), field, d, p.clone(), field.one());
            let prho = &pl * &rho;
            for r in &rights {
                if p.len() + r.len() >= budget {
                    continue;
                }
                let rr = AlgebraElement::monomial(q.clone(), field, d, r.clone(), field.one());
                let rel = &prho * &rr;
                if !rel.is_zero() {
                    ech.insert(rel.coordinates(&paths).expect("short paths"));
                }
            }
        }
    }
    let basis: Vec<Path> = ech.free_columns().into_iter().map(|c| paths[c].clone()).collect();
    (basis.len(), basis)
}

/// Dimensions of `A / (I + m^d)` for `d <= min(N, h.trunc())`.
pub fn jacobian_dimensions(h: &Hyperpotential, n: usize) -> QuotientBasis {
    let trunc = n.min(h.trunc());
    let mut dims = Vec::with_capacity(trunc + 1);
    let mut bases = Vec::with_capacity(trunc + 1);
    for d in 0..=trunc {
        let (dim, basis) = quotient_at(h, d);
        dims.push(dim);
        bases.push(basis);
    }
    let stabilized_at = (0..trunc).find(|&d| dims[d] == dims[d + 1]);
    let basis = match stabilized_at {
        Some(d) => bases[d].clone(),
        None => bases[trunc].clone(),
    };
    QuotientBasis {
        quiver: h.quiver().clone(),
        field: h.field(),
        requested_trunc: n,
        trunc,
        dims,
        stabilized_at,
        basis,
    }
}

fn check_me(m: usize, e: usize) -> Result<()> {
    if m == 0 || e == 0 || m * e < 3 {
        return Err(Error::InvalidParameters(format!(
            "need m, e >= 1 and me >= 3, got m={m}, e={e}"
        )));
    }
    Ok(())
}

/// `rho_(a_i) = a_(i+1) ... a_(i-1) (a_i ... a_(i-1))^(e-1)` on the `m`-cycle,
/// a path of length `me - 1` from `i+1` back to `i`.
pub fn lambda_hyperpotential(m: usize, e: usize, field: Field, trunc: usize) -> Result<Hyperpotential> {
    check_me(m, e)?;
    let q = Arc::new(Quiver::cycle(m));
    let rho = (0..m)
        .map(|i| {
            let arrows: Vec<usize> = (0..m * e - 1).map(|k| (i + 1 + k) % m).collect();
            let p = q.path_from_arrows((i + 1) % m, &arrows).expect("walk on the cycle");
            AlgebraElement::monomial(q.clone(), field, trunc, p, field.one())
        })
        .collect();
    Hyperpotential::new(q, field, trunc, rho)
}

/// `W = (a_1 ... a_m)^e`.
pub fn lambda_potential(m: usize, e: usize, field: Field, trunc: usize) -> Result<Potential> {
    check_me(m, e)?;
    let q = Arc::new(Quiver::cycle(m));
    let arrows: Vec<usize> = (0..m * e).map(|k| k % m).collect();
    let p = q.path_from_arrows(0, &arrows).expect("walk on the cycle");
    Potential::new(&AlgebraElement::monomial(q, field, trunc, p, field.one()))
}

/// `Lambda_(m,e)`: the `m`-cycle modulo all paths of length `me - 1`,
/// built directly from the path basis.
pub fn lambda_algebra(m: usize, e: usize, field: Field) -> Result<QuotientBasis> {
    check_me(m, e)?;
    let q = Arc::new(Quiver::cycle(m));
    let top = m * e - 1;
    let trunc = top + 1;
    let dims = (0..=trunc).map(|d| m * d.min(top)).collect();
    Ok(QuotientBasis {
        quiver: q.clone(),
        field,
        requested_trunc: trunc,
        trunc,
        dims,
        stabilized_at: Some(top),
        basis: q.all_paths(top),
    })
}

/// The Jacobian algebra of `W_(m,e)` over `field`, refusing when every
/// cyclic derivative vanishes.
pub fn lambda_via_potential(m: usize, e: usize, field: Field) -> Result<QuotientBasis> {
    let n = m * e + 3;
    let h = from_potential(&lambda_potential(m, e, field, n + 1)?);
    if h.is_zero() {
        return Err(Error::PotentialVanishes(field.characteristic()));
    }
    Ok(jacobian_dimensions(&h, n))
}

pub fn lambda_via_hyperpotential(m: usize, e: usize, field: Field) -> Result<QuotientBasis> {
    let n = m * e + 3;
    Ok(jacobian_dimensions(&lambda_hyperpotential(m, e, field, n)?, n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum CycleVerdict {
    /// Every cyclic derivative vanishes: the Jacobian algebra is the whole
    /// completed path algebra.
    Infinite,
    Lambda {
        m: usize,
        d: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePotentialAnalysis {
    pub m: usize,
    /// `a_k`, the coefficient of `x^k`.
    pub coefficients: Vec<Scalar>,
    /// Coefficients of `P'`: entry `k` is the coefficient of `x^k`.
    pub derivative: Vec<Scalar>,
    pub verdict: CycleVerdict,
}

/// Analyzes `W = P(w)` with `w = a_1 ... a_m`. If `P'` has lowest term
/// `c x^(d-1)` the Jacobian algebra is `Lambda_(m,d)`; if `P' = 0` it is the
/// completed path algebra.
///
/// `known_below` marks the coefficient list as the truncation of a power
/// series known only for exponents below that bound; a vanishing `P'` is
/// then inconclusive. `None` means `P` is the exact polynomial.
pub fn analyze_cycle_potential(
    m: usize,
    coefficients: &[Scalar],
    field: Field,
    known_below: Option<usize>,
) -> Result<CyclePotentialAnalysis> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be positive".to_string()));
    }
    for c in coefficients {
        if c.field() != field {
            return Err(Error::FieldMismatch(field.to_string(), c.field().to_string()));
        }
    }
    let limit = known_below.map_or(coefficients.len(), |k| k.min(coefficients.len()));
    let derivative: Vec<Scalar> = (1..limit).map(|k| &field.scalar(k as i64) * &coefficients[k]).collect();
    let verdict = match derivative.iter().position(|c| !c.is_zero()) {
        Some(j) => CycleVerdict::Lambda { m, d: j + 1 },
        None => {
            if known_below.is_some() {
                return Err(Error::Inconclusive(format!(
                    "P' vanishes on all {} known coefficients",
                    limit
                )));
            }
            CycleVerdict::Infinite
        }
    };
    Ok(CyclePotentialAnalysis {
        m,
        coefficients: coefficients.to_vec(),
        derivative,
        verdict,
    })
}

/// Collects a potential on the `m`-cycle into `P(w)`, `w = a_1 ... a_m`:
/// entry `k` of the result is the coefficient of `w^k`. Every cycle of
/// length `km` is cyclically equivalent to `w^k`.
pub fn cycle_series(w: &Potential) -> Result<Vec<Scalar>> {
    let q = w.quiver();
    let m = q.arrow_count();
    if **q != Quiver::cycle(m) {
        return Err(Error::InvalidParameters(
            "potential must live on the oriented cycle".to_string(),
        ));
    }
    let field = w.field();
    let top = w.element().degree().unwrap_or(0) / m.max(1);
    let mut out = vec![field.zero(); top + 1];
    for (p, c) in w.element().terms() {
        out[p.len() / m] = &out[p.len() / m] + c;
    }
    Ok(out)
}

/// The quiver `1 -a-> 2` with a loop `b` at `2`.
pub fn g2_quiver() -> Quiver {
    Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "2")]).expect("valid quiver")
}

/// `rho_b = b^3`, `rho_a = 0`: a hyperpotential in every characteristic.
pub fn g2_hyperpotential(field: Field, trunc: usize) -> Hyperpotential {
    let q = Arc::new(g2_quiver());
    let b = AlgebraElement::arrow(q.clone(), field, trunc, 1);
    let rho = vec![AlgebraElement::zero(q.clone(), field, trunc), b.pow(3)];
    Hyperpotential::new(q, field, trunc, rho).expect("block condition holds")
}

/// `W = b^4`.
pub fn g2_potential(field: Field, trunc: usize) -> Potential {
    let q = Arc::new(g2_quiver());
    let b = AlgebraElement::arrow(q, field, trunc, 1);
    Potential::new(&b.pow(4)).expect("cycle")
}

/// `K(1 -> 2, loop b) / (b^3)`, of dimension 7.
pub fn g2_algebra(field: Field) -> QuotientBasis {
    jacobian_dimensions(&g2_hyperpotential(field, 8), 8)
}
