//! Hom spaces `Hom(X, -)` in the mesh category of `Z Delta`.
//!
//! Columns to the right of `X` are processed in order. For `Y != X`,
//! `Hom(X, Y)` is the cokernel of `Hom(X, tau Y) -> (+)_{Z -> Y} Hom(X, Z)`,
//! the map given by composing with the arrows `tau Y -> Z`. Quotients keep
//! the free columns of a reduced echelon form, so every basis element is the
//! class of a single path.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Echelon, Vector};
use crate::scalar::{Field, Scalar};

use super::dynkin::Dynkin;
use super::translation::{column, column_vertices, predecessors, Vertex};

/// Hom spaces are computed over the rationals.
pub const HOM_FIELD: Field = Field::Rational;

/// Largest window, in slices, before giving up.
pub const WINDOW_CAP: i64 = 4096;

#[derive(Debug, Clone)]
struct Node {
    dim: usize,
    /// `reps[k]` is the path `X -> ... -> Y` representing basis element `k`.
    reps: Vec<Vec<Vertex>>,
    /// For each predecessor `Z`, the matrix of `Hom(X, Z) -> Hom(X, Y)`;
    /// row `k` is the image of basis element `k`.
    incoming: Vec<(Vertex, Vec<Vector>)>,
}

/// `Hom(X, -)` on all of `Z Delta`, stored on its (finite) support.
#[derive(Debug, Clone)]
pub struct HomFrom {
    source: Vertex,
    nodes: HashMap<Vertex, Node>,
    last_column: i64,
    window: i64,
}

impl HomFrom {
    /// Computes `Hom(source, -)`. The window starts at
    /// `3 * #positive roots / rank` slices and doubles until a whole column
    /// vanishes.
    pub fn compute(d: &Dynkin, source: Vertex) -> Result<HomFrom> {
        let mut window = (3 * d.positive_roots() / d.rank()).max(1) as i64;
        let mut nodes = HashMap::new();
        nodes.insert(
            source,
            Node {
                dim: 1,
                reps: vec![vec![source]],
                incoming: Vec::new(),
            },
        );
        let c0 = column(d, source);
        let mut c = c0 + 1;
        loop {
            if c > 2 * (source.p + window) + 1 {
                window *= 2;
                if window > WINDOW_CAP {
                    return Err(Error::WindowTooNarrow(format!(
                        "Hom from {source} does not vanish within {WINDOW_CAP} slices"
                    )));
                }
            }
            let mut any = false;
            for y in column_vertices(d, c) {
                let node = Self::knit(d, &nodes, y);
                if node.dim > 0 {
                    any = true;
                    nodes.insert(y, node);
                }
            }
            if !any {
                break;
            }
            c += 1;
        }
        Ok(HomFrom {
            source,
            nodes,
            last_column: c - 1,
            window,
        })
    }

    fn knit(d: &Dynkin, nodes: &HashMap<Vertex, Node>, y: Vertex) -> Node {
        let preds: Vec<(Vertex, &Node)> = predecessors(d, y)
            .into_iter()
            .filter_map(|z| nodes.get(&z).map(|n| (z, n)))
            .collect();
        let mut offsets = Vec::with_capacity(preds.len());
        let mut width = 0;
        for (_, n) in &preds {
            offsets.push(width);
            width += n.dim;
        }
        let mut relations = Echelon::new(HOM_FIELD, width);
        if let Some(t) = nodes.get(&y.tau()) {
            // f in Hom(X, tau Y) maps to (f * (tau Y -> Z))_Z
            for k in 0..t.dim {
                let mut row = zero_vector(HOM_FIELD, width);
                for ((_, n), &off) in preds.iter().zip(&offsets) {
                    let m = n
                        .incoming
                        .iter()
                        .find(|(src, _)| *src == y.tau())
                        .map(|(_, m)| m)
                        .expect("tau Y is a predecessor of every middle term");
                    for (j, x) in m[k].iter().enumerate() {
                        row[off + j] = x.clone();
                    }
                }
                relations.insert(row);
            }
        }
        let free = relations.free_columns();
        let mut reps = Vec::with_capacity(free.len());
        for &f in &free {
            let at = offsets.partition_point(|&o| o <= f) - 1;
            let (_, n) = &preds[at];
            let mut r = n.reps[f - offsets[at]].clone();
            r.push(y);
            reps.push(r);
        }
        let incoming = preds
            .iter()
            .zip(&offsets)
            .map(|((z, n), &off)| {
                let m = (0..n.dim)
                    .map(|k| {
                        let mut e = zero_vector(HOM_FIELD, width);
                        e[off + k] = HOM_FIELD.one();
                        relations.quotient_coordinates(&e)
                    })
                    .collect();
                (*z, m)
            })
            .collect();
        Node {
            dim: free.len(),
            reps,
            incoming,
        }
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn dim(&self, y: Vertex) -> usize {
        self.nodes.get(&y).map_or(0, |n| n.dim)
    }

    /// Path representatives of the basis of `Hom(X, y)`.
    pub fn basis(&self, y: Vertex) -> Vec<Vec<Vertex>> {
        self.nodes.get(&y).map_or_else(Vec::new, |n| n.reps.clone())
    }

    /// Vertices with nonzero Hom, sorted.
    pub fn support(&self) -> Vec<Vertex> {
        let mut s: Vec<Vertex> = self.nodes.keys().copied().collect();
        s.sort();
        s
    }

    /// Columns `[first, last]` outside which every Hom vanishes.
    pub fn column_span(&self, d: &Dynkin) -> (i64, i64) {
        (column(d, self.source), self.last_column)
    }

    /// Window (in slices) that sufficed for the computation.
    pub fn window(&self) -> i64 {
        self.window
    }

    /// Composes `f in Hom(X, z)` with the arrow `z -> w`.
    pub fn right_multiply(&self, f: &[Scalar], z: Vertex, w: Vertex) -> Vector {
        let Some(n) = self.nodes.get(&w) else {
            return Vec::new();
        };
        let mut out = zero_vector(HOM_FIELD, n.dim);
        if let Some((_, m)) = n.incoming.iter().find(|(src, _)| *src == z) {
            for (c, row) in f.iter().zip(m) {
                crate::linalg::axpy(&mut out, c, row);
            }
        }
        out
    }

    /// Composes `f in Hom(X, path[0])` with a path of arrows.
    pub fn along_path(&self, f: &[Scalar], path: &[Vertex]) -> Vector {
        let mut cur = f.to_vec();
        for w in path.windows(2) {
            if cur.is_empty() {
                break;
            }
            cur = self.right_multiply(&cur, w[0], w[1]);
        }
        match path.last() {
            Some(&y) if cur.is_empty() => zero_vector(HOM_FIELD, self.dim(y)),
            _ => cur,
        }
    }
}

pub fn hom_dim_universal(d: &Dynkin, x: Vertex, y: Vertex) -> Result<usize> {
    Ok(HomFrom::compute(d, x)?.dim(y))
}

/// `dim Hom(x, -)` by additive knitting:
/// `h(Y) = max(0, sum_{Z -> Y} h(Z) - h(tau Y))` for `Y != x`.
pub fn knitting_dims(d: &Dynkin, x: Vertex) -> HashMap<Vertex, usize> {
    let mut h: HashMap<Vertex, usize> = HashMap::from([(x, 1)]);
    let mut c = column(d, x) + 1;
    loop {
        let mut any = false;
        for y in column_vertices(d, c) {
            let s: i64 = predecessors(d, y)
                .into_iter()
                .map(|z| *h.get(&z).unwrap_or(&0) as i64)
                .sum();
            let v = s - *h.get(&y.tau()).unwrap_or(&0) as i64;
            if v > 0 {
                h.insert(y, v as usize);
                any = true;
            }
        }
        if !any {
            return h;
        }
        c += 1;
    }
}

pub fn knitting_hom_dim(d: &Dynkin, x: Vertex, y: Vertex) -> usize {
    *knitting_dims(d, x).get(&y).unwrap_or(&0)
}

/// Compares both methods on every vertex of the slices `p_min ..= p_max`
/// as sources; returns the number of pairs checked.
pub fn cross_check(d: &Dynkin, p_min: i64, p_max: i64) -> Result<usize> {
    let mut checked = 0;
    for p in p_min..=p_max {
        for i in 0..d.rank() {
            let x = Vertex::new(p, i);
            let exact = HomFrom::compute(d, x)?;
            let knit = knitting_dims(d, x);
            for q in p_min..=p_max {
                for j in 0..d.rank() {
                    let y = Vertex::new(q, j);
                    let (a, b) = (exact.dim(y), *knit.get(&y).unwrap_or(&0));
                    if a != b {
                        return Err(Error::Internal(format!("Hom({x},{y}): elimination {a}, knitting {b}")));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

#[derive(Debug, Clone, Serialize)]
pub struct HammockEntry {
    pub vertex: Vertex,
    pub dim: usize,
}

/// Nonzero `dim Hom(x, -)`, sorted by vertex.
pub fn hammock(d: &Dynkin, x: Vertex) -> Result<Vec<HammockEntry>> {
    let h = HomFrom::compute(d, x)?;
    Ok(h.support()
        .into_iter()
        .map(|v| HammockEntry {
            vertex: v,
            dim: h.dim(v),
        })
        .collect())
}
