//! Endomorphism algebras of basic objects `T = T_1 (+) ... (+) T_r` in an
//! orbit category: dimension, radical filtration and Gabriel quiver.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Echelon, Vector};

use super::hom::HOM_FIELD;
use super::orbit::OrbitCategory;
use super::translation::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GabrielArrow {
    pub from: usize,
    pub to: usize,
    pub count: usize,
}

#[derive(Debug, Clone)]
pub struct EndAlgebra<'a> {
    cat: &'a OrbitCategory,
    summands: Vec<Vertex>,
    hom_dims: Vec<Vec<usize>>,
    /// `radical[k][i][j]` spans `rad^{k+1}(T_i, T_j)`.
    radical: Vec<Vec<Vec<Echelon>>>,
    /// Maps `T_i -> T_j` spanning `rad / rad^2`.
    arrows: Vec<(usize, usize, Vector)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EndReport {
    pub summands: Vec<String>,
    pub dim: usize,
    pub hom_dims: Vec<Vec<usize>>,
    pub radical_dims: Vec<usize>,
    pub gabriel_quiver: Vec<GabrielArrow>,
    pub hom_field: &'static str,
}

impl<'a> EndAlgebra<'a> {
    pub fn new(cat: &'a OrbitCategory, summands: &[Vertex]) -> Result<EndAlgebra<'a>> {
        let s = cat.spec();
        let summands: Vec<Vertex> = summands.iter().map(|&v| s.canonical(v)).collect();
        for (a, u) in summands.iter().enumerate() {
            if summands[..a].contains(u) {
                return Err(Error::InvalidParameters(format!("repeated summand {u}")));
            }
        }
        let r = summands.len();
        let mut hom_dims = vec![vec![0; r]; r];
        let mut rad1 = Vec::with_capacity(r);
        for i in 0..r {
            let mut row = Vec::with_capacity(r);
            for j in 0..r {
                let coords = cat.coordinates(summands[i], summands[j])?;
                let dim: usize = coords.iter().map(|c| c.2).sum();
                hom_dims[i][j] = dim;
                let mut e = Echelon::new(HOM_FIELD, dim);
                for &(n, off, d) in &coords {
                    // the winding-0 part of End(T_i) is spanned by the identity
                    if i == j && n == 0 {
                        continue;
                    }
                    for k in 0..d {
                        let mut v = zero_vector(HOM_FIELD, dim);
                        v[off + k] = HOM_FIELD.one();
                        e.insert(v);
                    }
                }
                row.push(e);
            }
            rad1.push(row);
        }
        let mut radical = vec![rad1];
        let total: usize = hom_dims.iter().flatten().sum();
        loop {
            let last = radical.last().expect("nonempty");
            if last.iter().flatten().all(|e| e.rank() == 0) {
                break;
            }
            if radical.len() > total + 1 {
                return Err(Error::Internal("radical is not nilpotent".into()));
            }
            let mut next = Vec::with_capacity(r);
            for i in 0..r {
                let mut row = Vec::with_capacity(r);
                for l in 0..r {
                    let mut e = Echelon::new(HOM_FIELD, hom_dims[i][l]);
                    for j in 0..r {
                        for f in last[i][j].rows() {
                            for h in radical[0][j][l].rows() {
                                let v = cat.compose(summands[i], summands[j], summands[l], f, h)?;
                                e.insert(v);
                            }
                        }
                    }
                    row.push(e);
                }
                next.push(row);
            }
            radical.push(next);
        }
        let mut arrows = Vec::new();
        for i in 0..r {
            for j in 0..r {
                let mut e = radical
                    .get(1)
                    .map_or_else(|| Echelon::new(HOM_FIELD, hom_dims[i][j]), |r2| r2[i][j].clone());
                for v in radical[0][i][j].rows() {
                    if e.insert(v.clone()) {
                        arrows.push((i, j, v.clone()));
                    }
                }
            }
        }
        Ok(EndAlgebra {
            cat,
            summands,
            hom_dims,
            radical,
            arrows,
        })
    }

    pub fn summands(&self) -> &[Vertex] {
        &self.summands
    }

    pub fn dim(&self) -> usize {
        self.hom_dims.iter().flatten().sum()
    }

    pub fn hom_dims(&self) -> &[Vec<usize>] {
        &self.hom_dims
    }

    /// `dim rad^k` for `k = 0, 1, ...`, ending with the first zero.
    pub fn radical_dims(&self) -> Vec<usize> {
        let mut out = vec![self.dim()];
        for level in &self.radical {
            out.push(level.iter().flatten().map(Echelon::rank).sum());
        }
        out
    }

    pub fn gabriel_quiver(&self) -> Vec<GabrielArrow> {
        let r = self.summands.len();
        let mut out = Vec::new();
        for i in 0..r {
            for j in 0..r {
                let count = self.arrows.iter().filter(|a| a.0 == i && a.1 == j).count();
                if count > 0 {
                    out.push(GabrielArrow { from: i, to: j, count });
                }
            }
        }
        out
    }

    /// Representatives of the arrows `T_i -> T_j` of the Gabriel quiver.
    pub fn arrow_maps(&self) -> &[(usize, usize, Vector)] {
        &self.arrows
    }

    /// Composite of maps along summands `path[0] -> path[1] -> ...`.
    pub fn product(&self, path: &[usize], maps: &[&Vector]) -> Result<Vector> {
        assert_eq!(path.len(), maps.len() + 1);
        let mut cur = maps[0].clone();
        for (k, h) in maps.iter().enumerate().skip(1) {
            cur = self.cat.compose(
                self.summands[path[0]],
                self.summands[path[k]],
                self.summands[path[k + 1]],
                &cur,
                h,
            )?;
        }
        Ok(cur)
    }

    /// Certifies `End(T) = Lambda_{m,e}`: the Gabriel quiver is the oriented
    /// `m`-cycle, the dimension is `m(me-1)`, and every product of `me-1`
    /// consecutive arrows vanishes. Then `End(T)` is a quotient of
    /// `Lambda_{m,e}` of the same dimension.
    pub fn is_lambda(&self, m: usize, e: usize) -> Result<bool> {
        let r = self.summands.len();
        if r != m || self.arrows.len() != m || self.dim() != m * (m * e - 1) {
            return Ok(false);
        }
        let mut next = vec![usize::MAX; r];
        for &(i, j, _) in &self.arrows {
            if next[i] != usize::MAX {
                return Ok(false);
            }
            next[i] = j;
        }
        let mut seen = vec![false; r];
        let mut v = 0;
        for _ in 0..r {
            if next[v] == usize::MAX || seen[v] {
                return Ok(false);
            }
            seen[v] = true;
            v = next[v];
        }
        if v != 0 {
            return Ok(false);
        }
        let map_from = |i: usize| &self.arrows.iter().find(|a| a.0 == i).expect("arrow").2;
        for start in 0..r {
            let mut path = vec![start];
            let mut maps = Vec::new();
            for _ in 0..m * e - 1 {
                let i = *path.last().expect("nonempty");
                maps.push(map_from(i));
                path.push(next[i]);
            }
            if !self.product(&path, &maps)?.iter().all(|s| s.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Certifies the two-vertex algebra with one arrow between the summands,
    /// a loop `beta` at one of them with `beta^3 = 0`, and dimension 7; it
    /// is then a quotient of that path algebra mod `beta^3` of equal
    /// dimension. Returns the index of the summand carrying the loop.
    pub fn g2_loop_summand(&self) -> Result<Option<usize>> {
        if self.summands.len() != 2 || self.dim() != 7 || self.arrows.len() != 2 {
            return Ok(None);
        }
        let loops: Vec<&(usize, usize, Vector)> = self.arrows.iter().filter(|a| a.0 == a.1).collect();
        if loops.len() != 1 {
            return Ok(None);
        }
        let (y, _, beta) = loops[0];
        if self.arrows.iter().all(|a| a.0 == a.1) {
            return Ok(None);
        }
        let cube = self.product(&[*y, *y, *y, *y], &[beta, beta, beta])?;
        Ok(cube.iter().all(|s| s.is_zero()).then_some(*y))
    }

    pub fn report(&self) -> EndReport {
        EndReport {
            summands: self.summands.iter().map(|v| v.to_string()).collect(),
            dim: self.dim(),
            hom_dims: self.hom_dims.clone(),
            radical_dims: self.radical_dims(),
            gabriel_quiver: self.gabriel_quiver(),
            hom_field: "Q",
        }
    }
}

/// The summands `v, (phi tau) v, ..., (phi tau)^{m-1} v` of `C_{m,e}` for
/// `v = (0, me-2)`, a vertex moved by `phi`.
pub fn lambda_ct_object(m: usize, e: usize) -> Vec<Vertex> {
    let n = m * e;
    let mut v = Vertex::new(0, n - 2);
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push(v);
        let i = if v.i == n - 2 { n - 1 } else { n - 2 };
        v = Vertex::new(v.p - 1, i);
    }
    out
}
