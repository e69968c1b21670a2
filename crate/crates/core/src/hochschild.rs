//! Degreewise Hochschild homology of a completed path algebra.
//!
//! In path-length degree `d`: `HH0 = coker(id - sigma)` is spanned by
//! rotation classes of cycles, `HH1 = ker(id - sigma)` on `A+` is the space
//! of sigma-invariant cycles, and Connes' map `B: HC0 -> HH1` is induced by
//! the norm map. An invariant `sum_a a rho_a` is the same datum as the
//! hyperpotential `(rho_a)`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::path_algebra::AlgebraElement;
use crate::quiver::{Path, Quiver};
use crate::scalar::Field;

/// A basis of a homogeneous piece, each vector of path length `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSubspaceBasis {
    pub degree: usize,
    pub field: Field,
    pub basis: Vec<AlgebraElement>,
}

impl GradedSubspaceBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Rank of the basis vectors in the cycle coordinates of this degree.
    pub fn rank(&self, quiver: &Quiver) -> usize {
        let cycles = quiver.cycles_of_length(self.degree);
        let rows: Vec<_> = self
            .basis
            .iter()
            .map(|x| x.coordinates(&cycles).expect("homogeneous cycle"))
            .collect();
        linalg::rank(self.field, cycles.len(), &rows)
    }
}

/// An invariant cycle together with its hyperpotential form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hh1Element {
    pub invariant: AlgebraElement,
    pub rho: Vec<AlgebraElement>,
}

/// Rotation classes of cycles of length `d`, one lex-minimal representative
/// each.
pub fn rotation_classes(q: &Quiver, d: usize) -> Vec<Path> {
    let mut reps: Vec<Path> = q.cycles_of_length(d).iter().map(|c| q.canonical_rotation(c)).collect();
    reps.sort();
    reps.dedup();
    reps
}

pub fn hh0_basis(q: &Arc<Quiver>, field: Field, d: usize) -> GradedSubspaceBasis {
    let basis = rotation_classes(q, d)
        .into_iter()
        .map(|p| AlgebraElement::monomial(q.clone(), field, d + 1, p, field.one()))
        .collect();
    GradedSubspaceBasis {
        degree: d,
        field,
        basis,
    }
}

/// Matrix rows of `id - sigma` acting on cycles of length `d`; row `j`
/// collects the coefficients of cycle `j` in the images of all cycles.
fn id_minus_sigma_rows(q: &Arc<Quiver>, field: Field, cycles: &[Path]) -> Vec<linalg::Vector> {
    let n = cycles.len();
    let mut rows = vec![linalg::zero_vector(field, n); n];
    for (i, c) in cycles.iter().enumerate() {
        rows[i][i] = &rows[i][i] + &field.one();
        let s = q.sigma(c).expect("cycle");
        let j = cycles.binary_search(&s).expect("rotation is a cycle");
        rows[j][i] = &rows[j][i] - &field.one();
    }
    rows
}

/// Splits `sum_a a rho_a` into its components `rho_a`.
pub fn hyperpotential_form(x: &AlgebraElement) -> Vec<AlgebraElement> {
    let q = x.quiver();
    let n = x.trunc().saturating_sub(1);
    let mut rho: Vec<AlgebraElement> = (0..q.arrow_count())
        .map(|_| AlgebraElement::zero(q.clone(), x.field(), n))
        .collect();
    for (p, c) in x.terms() {
        if let Some((&a, rest)) = p.arrows().split_first() {
            let tail = q.path_from_arrows(q.target(a), rest).expect("subpath of a walk");
            rho[a].push(tail, c.clone());
        }
    }
    rho
}

/// `sum_a a rho_a`.
pub fn invariant_from_rho(q: &Arc<Quiver>, field: Field, rho: &[AlgebraElement]) -> Result<AlgebraElement> {
    let n = rho.iter().map(|r| r.trunc() + 1).min().unwrap_or(1);
    let mut out = AlgebraElement::zero(q.clone(), field, n);
    for (a, r) in rho.iter().enumerate() {
        let arrow = AlgebraElement::arrow(q.clone(), field, n, a);
        out = out.try_add(&arrow.try_mul(r)?)?;
    }
    Ok(out)
}

/// Kernel of `id - sigma` on cycles of length `d >= 1`, by linear algebra.
pub fn hh1_basis(q: &Arc<Quiver>, field: Field, d: usize) -> Vec<Hh1Element> {
    if d == 0 {
        return Vec::new();
    }
    let cycles = q.cycles_of_length(d);
    let rows = id_minus_sigma_rows(q, field, &cycles);
    linalg::kernel(field, cycles.len(), &rows)
        .into_iter()
        .map(|v| {
            let x = AlgebraElement::from_terms(q.clone(), field, d + 1, cycles.iter().cloned().zip(v));
            Hh1Element {
                rho: hyperpotential_form(&x),
                invariant: x,
            }
        })
        .collect()
}

/// Orbit sums `sum of the distinct rotations of c`, one per rotation class.
/// They span the same space as [`hh1_basis`].
pub fn orbit_sums(q: &Arc<Quiver>, field: Field, d: usize) -> Vec<AlgebraElement> {
    if d == 0 {
        return Vec::new();
    }
    rotation_classes(q, d)
        .into_iter()
        .map(|c| {
            AlgebraElement::from_terms(
                q.clone(),
                field,
                d + 1,
                q.rotations(&c).into_iter().map(|r| (r, field.one())),
            )
        })
        .collect()
}

/// Connes' map on a cycle class: `(d_a w)_a`. As an invariant cycle it is
/// `sum_a a d_a w = N(w)`.
pub fn connes_b(w: &AlgebraElement) -> Result<Vec<AlgebraElement>> {
    (0..w.quiver().arrow_count()).map(|a| w.cyclic_derivative(a)).collect()
}

/// Rank of `B` in degree `d`.
pub fn b_rank(q: &Arc<Quiver>, field: Field, d: usize) -> usize {
    if d == 0 {
        return 0;
    }
    let cycles = q.cycles_of_length(d);
    let rows: Vec<_> = hh0_basis(q, field, d)
        .basis
        .iter()
        .map(|c| c.norm_map().coordinates(&cycles).expect("cycle"))
        .collect();
    linalg::rank(field, cycles.len(), &rows)
}

/// Solves `B x = h` for a homogeneous invariant `h`, returning a preimage
/// as a combination of rotation-class representatives.
pub fn in_image_of_b(h: &AlgebraElement) -> Result<Option<AlgebraElement>> {
    let q = h.quiver().clone();
    let field = h.field();
    let Some(d) = h.degree() else {
        return Ok(Some(AlgebraElement::zero(q, field, h.trunc())));
    };
    if h.valuation() != Some(d) {
        return Err(Error::InvalidParameters("element is not homogeneous".to_string()));
    }
    if h.trunc() <= d {
        return Err(Error::InvalidParameters(
            "truncation hides the given degree".to_string(),
        ));
    }
    let cycles = q.cycles_of_length(d);
    let target = h
        .coordinates(&cycles)
        .ok_or_else(|| Error::InvalidParameters("element is not a sum of cycles".to_string()))?;
    let reps = rotation_classes(&q, d);
    let columns: Vec<_> = reps
        .iter()
        .map(|c| {
            AlgebraElement::monomial(q.clone(), field, d + 1, c.clone(), field.one())
                .norm_map()
                .coordinates(&cycles)
                .expect("cycle")
        })
        .collect();
    Ok(linalg::solve_columns(field, &columns, &target)
        .map(|x| AlgebraElement::from_terms(q.clone(), field, d + 1, reps.iter().cloned().zip(x))))
}

/// One row of the dimension table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HochschildRow {
    pub degree: usize,
    pub hh0: usize,
    pub hh1: usize,
    #[serde(rename = "B_rank")]
    pub b_rank: usize,
}

pub fn dimension_row(q: &Arc<Quiver>, field: Field, d: usize) -> HochschildRow {
    HochschildRow {
        degree: d,
        hh0: hh0_basis(q, field, d).dim(),
        hh1: hh1_basis(q, field, d).len(),
        b_rank: b_rank(q, field, d),
    }
}

/// Rows for degrees `0..=max_degree`; degrees are computed in parallel.
pub fn dimension_table(q: &Arc<Quiver>, field: Field, max_degree: usize) -> Vec<HochschildRow> {
    (0..=max_degree)
        .into_par_iter()
        .map(|d| dimension_row(q, field, d))
        .collect()
}

/// Checks that the invariant cycles of degree `d` found by linear algebra
/// span exactly the orbit sums.
pub fn hh1_matches_orbit_sums(q: &Arc<Quiver>, field: Field, d: usize) -> bool {
    let cycles = q.cycles_of_length(d);
    let coords = |xs: Vec<AlgebraElement>| -> Vec<linalg::Vector> {
        xs.iter().map(|x| x.coordinates(&cycles).expect("cycle")).collect()
    };
    let a = coords(hh1_basis(q, field, d).into_iter().map(|h| h.invariant).collect());
    let b = coords(orbit_sums(q, field, d));
    let ea = Echelon::from_rows(field, cycles.len(), a.clone());
    let eb = Echelon::from_rows(field, cycles.len(), b.clone());
    ea.rank() == eb.rank() && a.iter().all(|v| eb.contains(v)) && b.iter().all(|v| ea.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn loop_q() -> Arc<Quiver> {
        Arc::new(Quiver::single_loop())
    }

    fn beta_pow(f: Field, k: u32, n: usize) -> AlgebraElement {
        AlgebraElement::arrow(loop_q(), f, n, 0).pow(k)
    }

    #[test]
    fn hh0_examples() {
        let q = Field::Rational;
        let b = hh0_basis(&loop_q(), q, 3);
        assert_eq!(b.dim(), 1);
        assert_eq!(b.basis[0], beta_pow(q, 3, 4));
        let q4 = Arc::new(Quiver::cycle(4));
        let b = hh0_basis(&q4, q, 4);
        assert_eq!(b.dim(), 1);
        assert_eq!(b.basis[0].format(), "a1*a2*a3*a4");
        assert_eq!(hh0_basis(&q4, q, 3).dim(), 0);
        assert_eq!(hh0_basis(&q4, q, 0).dim(), 4);
    }

    #[test]
    fn hh1_examples() {
        let q = Field::Rational;
        let h = hh1_basis(&loop_q(), q, 4);
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].invariant, beta_pow(q, 4, 5));
        assert_eq!(h[0].rho[0], beta_pow(q, 3, 4));
        let q2 = Arc::new(Quiver::cycle(2));
        let h = hh1_basis(&q2, q, 2);
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].invariant.format(), "a1*a2 + a2*a1");
        let q4 = Arc::new(Quiver::cycle(4));
        assert!(hh1_basis(&q4, q, 3).is_empty());
    }

    #[test]
    fn connes_examples() {
        let q = Field::Rational;
        let w = beta_pow(q, 4, 6);
        assert_eq!(connes_b(&w).unwrap()[0], beta_pow(q, 3, 5).scale_i64(4));
        let f2 = Field::prime(2).unwrap();
        assert!(connes_b(&beta_pow(f2, 4, 6)).unwrap()[0].is_zero());
        let q4 = Arc::new(Quiver::cycle(4));
        let w = AlgebraElement::from_ids(
            q4.clone(),
            q,
            10,
            1,
            "1",
            &["a1", "a2", "a3", "a4", "a1", "a2", "a3", "a4"],
        )
        .unwrap();
        let rho = connes_b(&w).unwrap();
        assert_eq!(rho[1].format(), "2*a3*a4*a1*a2*a3*a4*a1");
        // N(w) = sum_a a d_a w
        let inv = invariant_from_rho(&q4, q, &rho).unwrap();
        assert_eq!(inv, w.norm_map().truncate(inv.trunc()));
    }

    #[test]
    fn image_of_b() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(in_image_of_b(&beta_pow(f2, 4, 5)).unwrap(), None);
        let q = Field::Rational;
        let pre = in_image_of_b(&beta_pow(q, 4, 5)).unwrap().unwrap();
        assert_eq!(pre, beta_pow(q, 4, 5).scale(&Scalar::rational(1, 4)));
        let zero = AlgebraElement::zero(loop_q(), q, 5);
        assert!(in_image_of_b(&zero).unwrap().unwrap().is_zero());
    }

    #[test]
    fn rank_nullity_and_orbit_sums() {
        let q4 = Arc::new(Quiver::cycle(4));
        let two_loops = Arc::new(Quiver::new(&["1"], &[("a", "1", "1"), ("b", "1", "1")]).unwrap());
        for f in [Field::Rational, Field::prime(2).unwrap(), Field::prime(3).unwrap()] {
            for q in [&q4, &two_loops] {
                for d in 1..=6 {
                    let cycles = q.cycles_of_length(d);
                    let rank = linalg::rank(f, cycles.len(), &id_minus_sigma_rows(q, f, &cycles));
                    let row = dimension_row(q, f, d);
                    // rank-nullity for id - sigma, with HH0 computed from rotation classes
                    assert_eq!(rank + row.hh1, cycles.len(), "d={d}");
                    assert_eq!(row.hh0, cycles.len() - rank, "d={d}");
                    assert!(hh1_matches_orbit_sums(q, f, d));
                    for h in hh1_basis(q, f, d) {
                        let sum = invariant_from_rho(q, f, &h.rho).unwrap();
                        assert_eq!(sum, h.invariant.truncate(sum.trunc()));
                    }
                }
            }
        }
    }

    #[test]
    fn table_over_gf2_on_loop() {
        let f2 = Field::prime(2).unwrap();
        let rows = dimension_table(&loop_q(), f2, 4);
        let ranks: Vec<usize> = rows.iter().map(|r| r.b_rank).collect();
        assert_eq!(ranks, vec![0, 1, 0, 1, 0]);
        let json = serde_json::to_string(&rows[4]).unwrap();
        assert_eq!(json, r#"{"degree":4,"hh0":1,"hh1":1,"B_rank":0}"#);
    }
}
