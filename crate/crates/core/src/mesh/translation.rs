//! The stable translation quiver `Z Delta` and finite slice windows of it.
//!
//! Vertex `(p, i)` sits in column `2p + color(i)`. For an edge `i - j` with
//! `color(i) = 0` there are arrows `(p, i) -> (p, j)` and `(p, j) -> (p+1, i)`,
//! so every arrow raises the column by one and `tau(p, i) = (p-1, i)`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::dynkin::Dynkin;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Vertex {
    pub p: i64,
    pub i: usize,
}

impl Vertex {
    pub fn new(p: i64, i: usize) -> Vertex {
        Vertex { p, i }
    }

    pub fn tau(self) -> Vertex {
        Vertex::new(self.p - 1, self.i)
    }

    pub fn tau_inv(self) -> Vertex {
        Vertex::new(self.p + 1, self.i)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.i)
    }
}

/// Adjacency of `Z Delta`, independent of any window.
pub fn column(d: &Dynkin, v: Vertex) -> i64 {
    2 * v.p + d.color(v.i) as i64
}

/// Vertices `Z` with an arrow `Z -> v`, ordered by Dynkin label.
pub fn predecessors(d: &Dynkin, v: Vertex) -> Vec<Vertex> {
    let p = if d.color(v.i) == 0 { v.p - 1 } else { v.p };
    d.neighbors(v.i).iter().map(|&j| Vertex::new(p, j)).collect()
}

/// Vertices `Z` with an arrow `v -> Z`, ordered by Dynkin label.
pub fn successors(d: &Dynkin, v: Vertex) -> Vec<Vertex> {
    let p = if d.color(v.i) == 0 { v.p } else { v.p + 1 };
    d.neighbors(v.i).iter().map(|&j| Vertex::new(p, j)).collect()
}

/// Vertices of `Z Delta` lying in column `c`.
pub fn column_vertices(d: &Dynkin, c: i64) -> Vec<Vertex> {
    let parity = c.rem_euclid(2) as u8;
    (0..d.rank())
        .filter(|&i| d.color(i) == parity)
        .map(|i| Vertex::new((c - parity as i64) / 2, i))
        .collect()
}

/// `Z Delta` restricted to the slices `p_min ..= p_max`.
#[derive(Debug, Clone)]
pub struct StableTranslationQuiver {
    dynkin: Arc<Dynkin>,
    p_min: i64,
    p_max: i64,
}

impl StableTranslationQuiver {
    pub fn new(dynkin: Dynkin, p_min: i64, p_max: i64) -> StableTranslationQuiver {
        assert!(p_min <= p_max, "empty window");
        StableTranslationQuiver {
            dynkin: Arc::new(dynkin),
            p_min,
            p_max,
        }
    }

    pub fn dynkin(&self) -> &Dynkin {
        &self.dynkin
    }

    pub fn window(&self) -> (i64, i64) {
        (self.p_min, self.p_max)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.i < self.dynkin.rank() && (self.p_min..=self.p_max).contains(&v.p)
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        (self.p_min..=self.p_max)
            .flat_map(|p| (0..self.dynkin.rank()).map(move |i| Vertex::new(p, i)))
            .collect()
    }

    /// Arrows with both ends in the window, sorted.
    pub fn arrows(&self) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<(Vertex, Vertex)> = self
            .vertices()
            .into_iter()
            .flat_map(|v| successors(&self.dynkin, v).into_iter().map(move |w| (v, w)))
            .filter(|&(_, w)| self.contains(w))
            .collect();
        out.sort();
        out
    }

    pub fn tau(&self, v: Vertex) -> Option<Vertex> {
        let t = v.tau();
        self.contains(t).then_some(t)
    }

    pub fn phi(&self, v: Vertex) -> Vertex {
        Vertex::new(v.p, self.dynkin.phi(v.i))
    }

    /// Whether the mesh ending at `v` lies entirely in the window.
    pub fn has_full_mesh(&self, v: Vertex) -> bool {
        self.contains(v)
            && self.contains(v.tau())
            && predecessors(&self.dynkin, v).into_iter().all(|z| self.contains(z))
    }

    /// Middle terms of the mesh ending at `v`: the vertices `z` with
    /// `tau v -> z -> v`.
    pub fn mesh(&self, v: Vertex) -> Vec<Vertex> {
        predecessors(&self.dynkin, v)
    }

    pub fn to_dot(&self) -> String {
        let d = &self.dynkin;
        let mut s = String::from("digraph ZQ {\n  node [shape=point];\n");
        for v in self.vertices() {
            s.push_str(&format!(
                "  \"{v}\" [pos=\"{},{}!\"];\n",
                column(d, v),
                -(d.display_row(v.i) as i64)
            ));
        }
        for (v, w) in self.arrows() {
            s.push_str(&format!("  \"{v}\" -> \"{w}\";\n"));
        }
        s.push_str("}\n");
        s
    }
}
