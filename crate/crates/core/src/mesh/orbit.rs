//! Orbit categories `Z Delta / <g>` for `g = tau^a phi^b`, modeled by
//! covering theory: `Hom(X, Y) = (+)_n Hom(X~, g^n Y~)`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vector, zero_vector, Vector};
use crate::scalar::Scalar;

use super::dynkin::Dynkin;
use super::hom::{HomFrom, HOM_FIELD};
use super::translation::{column, predecessors, successors, Vertex};

/// `tau^a phi^b` with `b` taken mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupElement {
    pub a: i64,
    pub b: u8,
}

impl GroupElement {
    pub fn new(a: i64, b: u8) -> GroupElement {
        GroupElement { a, b: b % 2 }
    }

    /// Parses products and powers of `tau` and `phi`, e.g. `tau^4`,
    /// `(phi*tau)^3`, `phi tau^-2`. The two generators commute.
    pub fn parse(s: &str) -> Result<GroupElement> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let g = parse_product(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("unexpected '{}' in '{s}'", chars[pos])));
        }
        Ok(g)
    }

    pub fn compose(self, other: GroupElement) -> GroupElement {
        GroupElement::new(self.a + other.a, self.b + other.b)
    }

    pub fn pow(self, n: i64) -> GroupElement {
        GroupElement::new(self.a * n, ((self.b as i64 * n).rem_euclid(2)) as u8)
    }

    /// `g^n (p, i) = (p - n a, phi^{n b} i)`.
    pub fn apply(self, d: &Dynkin, v: Vertex, n: i64) -> Vertex {
        let i = if (self.b as i64 * n).rem_euclid(2) == 1 {
            d.phi(v.i)
        } else {
            v.i
        };
        Vertex::new(v.p - n * self.a, i)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "id"),
            (0, _) => write!(f, "phi"),
            (1, 0) => write!(f, "tau"),
            (1, _) => write!(f, "tau*phi"),
            (a, 0) => write!(f, "tau^{a}"),
            (a, _) => write!(f, "tau^{a}*phi"),
        }
    }
}

fn parse_product(c: &[char], pos: &mut usize) -> Result<GroupElement> {
    let mut g = parse_power(c, pos)?;
    loop {
        match c.get(*pos) {
            Some('*') | Some('∘') | Some('.') => {
                *pos += 1;
                g = g.compose(parse_power(c, pos)?);
            }
            Some('t') | Some('p') | Some('τ') | Some('φ') | Some('(') => {
                g = g.compose(parse_power(c, pos)?);
            }
            _ => return Ok(g),
        }
    }
}

fn parse_power(c: &[char], pos: &mut usize) -> Result<GroupElement> {
    let base = parse_atom(c, pos)?;
    if c.get(*pos) != Some(&'^') {
        return Ok(base);
    }
    *pos += 1;
    let start = *pos;
    if matches!(c.get(*pos), Some('-') | Some('+')) {
        *pos += 1;
    }
    while c.get(*pos).is_some_and(|x| x.is_ascii_digit()) {
        *pos += 1;
    }
    let e: String = c[start..*pos].iter().collect();
    let n: i64 = e.parse().map_err(|_| Error::Parse(format!("bad exponent '{e}'")))?;
    Ok(base.pow(n))
}

fn parse_atom(c: &[char], pos: &mut usize) -> Result<GroupElement> {
    let rest: String = c[*pos..].iter().collect();
    for (word, g) in [
        ("tau", GroupElement::new(1, 0)),
        ("τ", GroupElement::new(1, 0)),
        ("phi", GroupElement::new(0, 1)),
        ("φ", GroupElement::new(0, 1)),
        ("id", GroupElement::new(0, 0)),
    ] {
        if rest.starts_with(word) {
            *pos += word.chars().count();
            return Ok(g);
        }
    }
    if c.get(*pos) == Some(&'(') {
        *pos += 1;
        let g = parse_product(c, pos)?;
        if c.get(*pos) != Some(&')') {
            return Err(Error::Parse("unbalanced parenthesis".into()));
        }
        *pos += 1;
        return Ok(g);
    }
    Err(Error::Parse(format!("expected tau or phi at '{rest}'")))
}

/// `Z Delta / <g>` with fundamental domain the slices `0 .. a`.
#[derive(Debug, Clone)]
pub struct OrbitSpec {
    dynkin: Arc<Dynkin>,
    g: GroupElement,
}

impl OrbitSpec {
    pub fn new(dynkin: Dynkin, g: GroupElement) -> Result<OrbitSpec> {
        let g = if g.a < 0 { GroupElement::new(-g.a, g.b) } else { g };
        if g.a == 0 {
            return Err(Error::InvalidParameters(format!(
                "g = {g} must involve a positive power of tau"
            )));
        }
        if g.b == 1 && !dynkin.phi_is_admissible() {
            return Err(Error::InvalidParameters(format!(
                "phi is not an automorphism of Z{}",
                dynkin.name()
            )));
        }
        let spec = OrbitSpec {
            dynkin: Arc::new(dynkin),
            g,
        };
        debug_assert!(spec.acts_freely());
        Ok(spec)
    }

    /// `Z D_{me} / <(tau phi)^m>`.
    pub fn c_me(m: usize, e: usize) -> Result<OrbitSpec> {
        if m == 0 || m * e < 3 {
            return Err(Error::InvalidParameters(format!(
                "need m >= 1 and me >= 3, got m={m}, e={e}"
            )));
        }
        OrbitSpec::new(Dynkin::d(m * e), GroupElement::new(1, 1).pow(m as i64))
    }

    /// `Z E_8 / <tau^4>`.
    pub fn g2() -> OrbitSpec {
        OrbitSpec::new(Dynkin::e(8), GroupElement::new(4, 0)).expect("valid spec")
    }

    pub fn dynkin(&self) -> &Dynkin {
        &self.dynkin
    }

    pub fn g(&self) -> GroupElement {
        self.g
    }

    pub fn vertex_count(&self) -> usize {
        self.g.a as usize * self.dynkin.rank()
    }

    /// Fundamental domain, sorted by `(p, i)`.
    pub fn vertices(&self) -> Vec<Vertex> {
        (0..self.g.a)
            .flat_map(|p| (0..self.dynkin.rank()).map(move |i| Vertex::new(p, i)))
            .collect()
    }

    pub fn index(&self, v: Vertex) -> usize {
        let c = self.canonical(v);
        c.p as usize * self.dynkin.rank() + c.i
    }

    /// The lift of `v`'s orbit lying in the fundamental domain.
    pub fn canonical(&self, v: Vertex) -> Vertex {
        let n = v.p.div_euclid(self.g.a);
        self.g.apply(&self.dynkin, v, n)
    }

    /// The `n` with `g^n canonical(v) = v`.
    pub fn winding(&self, v: Vertex) -> i64 {
        -v.p.div_euclid(self.g.a)
    }

    pub fn tau(&self, v: Vertex) -> Vertex {
        self.canonical(v.tau())
    }

    pub fn tau_inv(&self, v: Vertex) -> Vertex {
        self.canonical(v.tau_inv())
    }

    pub fn acts_freely(&self) -> bool {
        self.vertices()
            .iter()
            .all(|&v| (1..=2).all(|n| self.g.apply(&self.dynkin, v, n) != v))
    }

    /// Arrows of the quotient, as pairs of fundamental-domain vertices.
    pub fn arrows(&self) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<(Vertex, Vertex)> = self
            .vertices()
            .into_iter()
            .flat_map(|v| successors(&self.dynkin, v).into_iter().map(move |w| (v, w)))
            .map(|(v, w)| (v, self.canonical(w)))
            .collect();
        out.sort();
        out
    }

    pub fn name(&self) -> String {
        format!("Z{}/<{}>", self.dynkin.name(), self.g)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Winding {
    pub n: i64,
    pub target: Vertex,
    pub dim: usize,
    pub basis: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomSpace {
    pub source: Vertex,
    pub target: Vertex,
    pub windings: Vec<Winding>,
    pub dim: usize,
}

/// An orbit category with memoized `Hom(X~, -)` for every `X` in the
/// fundamental domain.
#[derive(Debug)]
pub struct OrbitCategory {
    spec: OrbitSpec,
    homs: Vec<OnceLock<Result<HomFrom>>>,
    dims: OnceLock<Result<Vec<Vec<usize>>>>,
}

impl OrbitCategory {
    pub fn new(spec: OrbitSpec) -> OrbitCategory {
        let n = spec.vertex_count();
        OrbitCategory {
            spec,
            homs: (0..n).map(|_| OnceLock::new()).collect(),
            dims: OnceLock::new(),
        }
    }

    pub fn spec(&self) -> &OrbitSpec {
        &self.spec
    }

    pub fn dynkin(&self) -> &Dynkin {
        &self.spec.dynkin
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.spec.vertices()
    }

    pub fn hom_from(&self, x: Vertex) -> Result<&HomFrom> {
        let x = self.spec.canonical(x);
        self.homs[self.spec.index(x)]
            .get_or_init(|| HomFrom::compute(&self.spec.dynkin, x))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Windings `n` with `Hom(x~, g^n y~) != 0`, with their dimensions.
    fn layout(&self, x: Vertex, y: Vertex) -> Result<Vec<(i64, usize)>> {
        let (x, y) = (self.spec.canonical(x), self.spec.canonical(y));
        let h = self.hom_from(x)?;
        let d = self.dynkin();
        let (c0, c1) = h.column_span(d);
        let cy = column(d, y);
        let a2 = 2 * self.spec.g.a;
        let lo = (cy - c1).div_euclid(a2);
        let hi = (cy - c0).div_euclid(a2) + 1;
        Ok((lo..=hi)
            .filter_map(|n| {
                let dim = h.dim(self.spec.g.apply(d, y, n));
                (dim > 0).then_some((n, dim))
            })
            .collect())
    }

    pub fn hom_space(&self, x: Vertex, y: Vertex) -> Result<HomSpace> {
        let (x, y) = (self.spec.canonical(x), self.spec.canonical(y));
        let h = self.hom_from(x)?;
        let windings: Vec<Winding> = self
            .layout(x, y)?
            .into_iter()
            .map(|(n, dim)| {
                let target = self.spec.g.apply(self.dynkin(), y, n);
                Winding {
                    n,
                    target,
                    dim,
                    basis: h.basis(target),
                }
            })
            .collect();
        let dim = windings.iter().map(|w| w.dim).sum();
        Ok(HomSpace {
            source: x,
            target: y,
            windings,
            dim,
        })
    }

    pub fn hom_dim(&self, x: Vertex, y: Vertex) -> Result<usize> {
        let table = self.dim_table()?;
        Ok(table[self.spec.index(x)][self.spec.index(y)])
    }

    /// `dim Hom(X, Y)` for arbitrary lifts, computed afresh from `x`.
    pub fn hom_dim_lifted(&self, x: Vertex, y: Vertex) -> Result<usize> {
        let d = self.dynkin();
        let h = HomFrom::compute(d, x)?;
        let (c0, c1) = h.column_span(d);
        let cy = column(d, y);
        let a2 = 2 * self.spec.g.a;
        let lo = (cy - c1).div_euclid(a2);
        let hi = (cy - c0).div_euclid(a2) + 1;
        Ok((lo..=hi).map(|n| h.dim(self.spec.g.apply(d, y, n))).sum())
    }

    /// All-pairs `dim Hom`, indexed by [`OrbitSpec::index`].
    pub fn dim_table(&self) -> Result<&Vec<Vec<usize>>> {
        self.dims
            .get_or_init(|| {
                let vs = self.vertices();
                vs.par_iter()
                    .map(|&x| {
                        vs.iter()
                            .map(|&y| Ok(self.layout(x, y)?.iter().map(|w| w.1).sum()))
                            .collect::<Result<Vec<usize>>>()
                    })
                    .collect()
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Layout of `Hom(x, y)` coordinates: `(n, offset, dim)` per winding.
    pub fn coordinates(&self, x: Vertex, y: Vertex) -> Result<Vec<(i64, usize, usize)>> {
        let mut off = 0;
        Ok(self
            .layout(x, y)?
            .into_iter()
            .map(|(n, dim)| {
                let r = (n, off, dim);
                off += dim;
                r
            })
            .collect())
    }

    /// `f` then `h`, for `f in Hom(x, y)` and `h in Hom(y, z)` in the
    /// coordinates of [`Self::coordinates`].
    pub fn compose(&self, x: Vertex, y: Vertex, z: Vertex, f: &[Scalar], h: &[Scalar]) -> Result<Vector> {
        let (x, y, z) = (self.spec.canonical(x), self.spec.canonical(y), self.spec.canonical(z));
        let d = self.dynkin();
        let g = self.spec.g;
        let hx = self.hom_from(x)?;
        let hy = self.hom_from(y)?;
        let xy = self.coordinates(x, y)?;
        let yz = self.coordinates(y, z)?;
        let xz = self.coordinates(x, z)?;
        let total: usize = xz.iter().map(|c| c.2).sum();
        let mut out = zero_vector(HOM_FIELD, total);
        for &(n, off, dim) in &xy {
            let fpart = &f[off..off + dim];
            if is_zero_vector(fpart) {
                continue;
            }
            for &(n2, off2, dim2) in &yz {
                let reps = hy.basis(g.apply(d, z, n2));
                for (k2, rep) in reps.iter().enumerate().take(dim2) {
                    let c = &h[off2 + k2];
                    if c.is_zero() {
                        continue;
                    }
                    let path: Vec<Vertex> = rep.iter().map(|&v| g.apply(d, v, n)).collect();
                    let v = hx.along_path(fpart, &path);
                    if is_zero_vector(&v) {
                        continue;
                    }
                    let Some(&(_, o, dz)) = xz.iter().find(|t| t.0 == n + n2) else {
                        return Err(Error::Internal(format!(
                            "composite lands in an empty winding {}",
                            n + n2
                        )));
                    };
                    debug_assert_eq!(dz, v.len());
                    axpy(&mut out[o..o + dz], c, &v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_rigid(&self, z: Vertex) -> Result<bool> {
        Ok(self.hom_dim(z, self.spec.tau(z))? == 0)
    }

    pub fn rigid_indecomposables(&self) -> Result<Vec<Vertex>> {
        let mut out = Vec::new();
        for z in self.vertices() {
            if self.is_rigid(z)? {
                out.push(z);
            }
        }
        Ok(out)
    }

    /// `Hom(u, tau v) = 0 = Hom(v, tau u)`.
    pub fn compatible(&self, u: Vertex, v: Vertex) -> Result<bool> {
        Ok(self.hom_dim(u, self.spec.tau(v))? == 0 && self.hom_dim(v, self.spec.tau(u))? == 0)
    }

    /// Every summand rigid, pairwise compatible, and every `Z` with
    /// `Hom(T, tau Z) = 0` already a summand.
    pub fn is_cluster_tilting(&self, t: &[Vertex]) -> Result<bool> {
        let t: BTreeSet<Vertex> = t.iter().map(|&v| self.spec.canonical(v)).collect();
        for &u in &t {
            for &v in &t {
                if !self.compatible(u, v)? {
                    return Ok(false);
                }
            }
        }
        for z in self.vertices() {
            if t.contains(&z) {
                continue;
            }
            let tz = self.spec.tau(z);
            let mut blocked = false;
            for &u in &t {
                if self.hom_dim(u, tz)? != 0 {
                    blocked = true;
                    break;
                }
            }
            if !blocked {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Maximal sets of pairwise compatible rigid vertices.
    pub fn maximal_rigid_sets(&self) -> Result<Vec<Vec<Vertex>>> {
        let rigid = self.rigid_indecomposables()?;
        let n = rigid.len();
        let mut adj = vec![vec![false; n]; n];
        for a in 0..n {
            for b in a + 1..n {
                let c = self.compatible(rigid[a], rigid[b])?;
                adj[a][b] = c;
                adj[b][a] = c;
            }
        }
        let mut cliques = Vec::new();
        bron_kerbosch(&adj, Vec::new(), (0..n).collect(), Vec::new(), &mut cliques);
        let mut out: Vec<Vec<Vertex>> = cliques
            .into_iter()
            .map(|c| {
                let mut s: Vec<Vertex> = c.into_iter().map(|k| rigid[k]).collect();
                s.sort();
                s
            })
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn cluster_tilting_objects(&self) -> Result<Vec<Vec<Vertex>>> {
        let mut out = Vec::new();
        for s in self.maximal_rigid_sets()? {
            if self.is_cluster_tilting(&s)? {
                out.push(s);
            }
        }
        Ok(out)
    }
}

fn bron_kerbosch(adj: &[Vec<bool>], r: Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() && x.is_empty() {
        if !r.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
        .expect("p or x nonempty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    let (mut p, mut x) = (p, x);
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.retain(|&u| u != v);
        x.push(v);
    }
}

/// Pairs of sets differing in exactly one element.
pub fn exchange_graph(sets: &[Vec<Vertex>]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            let (s, t) = (&sets[a], &sets[b]);
            if s.len() == t.len() && s.iter().filter(|v| t.contains(v)).count() + 1 == s.len() {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// Whether an undirected graph on `n` vertices is a single `n`-cycle.
pub fn is_cycle_graph(n: usize, edges: &[(usize, usize)]) -> bool {
    if n < 3 || edges.len() != n {
        return false;
    }
    let mut deg = vec![0; n];
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
        adj[a].push(b);
        adj[b].push(a);
    }
    if deg.iter().any(|&k| k != 2) {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        if !std::mem::replace(&mut seen[v], true) {
            stack.extend(&adj[v]);
        }
    }
    seen.into_iter().all(|s| s)
}

/// The rigid objects of `Z E_8 / <tau^4>` split into two tau-orbits. `X`
/// lies in the orbit with one-dimensional endomorphisms and is the first
/// vertex of it; `Y` is the vertex of the other orbit with `X (+) Y` and
/// `X (+) tau Y` both cluster-tilting.
pub fn g2_pair(cat: &OrbitCategory) -> Result<(Vertex, Vertex)> {
    let rigid = cat.rigid_indecomposables()?;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for &z in &rigid {
        if cat.hom_dim(z, z)? == 1 {
            xs.push(z);
        } else {
            ys.push(z);
        }
    }
    let Some(&x) = xs.first() else {
        return Err(Error::Internal("no rigid object with End = k".into()));
    };
    for &y in &ys {
        let ty = cat.spec().tau(y);
        if cat.is_cluster_tilting(&[x, y])? && cat.is_cluster_tilting(&[x, ty])? {
            return Ok((x, y));
        }
    }
    Err(Error::Internal("no partner Y for X".into()))
}

/// Vertices `z` with `Hom(x, z) = 0`, sorted.
pub fn hom_vanishing_set(cat: &OrbitCategory, x: Vertex) -> Result<Vec<Vertex>> {
    let mut out = Vec::new();
    for z in cat.vertices() {
        if cat.hom_dim(x, z)? == 0 {
            out.push(z);
        }
    }
    Ok(out)
}

/// Report of rigid and cluster-tilting objects of an orbit category.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub category: String,
    pub vertex_count: usize,
    pub hom_field: &'static str,
    pub rigid: Vec<String>,
    pub cluster_tilting: Vec<Vec<String>>,
    pub exchange_edges: Vec<(usize, usize)>,
}

pub fn orbit_report(cat: &OrbitCategory) -> Result<OrbitReport> {
    let names = |vs: &[Vertex]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>();
    let rigid = cat.rigid_indecomposables()?;
    let cts = cat.cluster_tilting_objects()?;
    Ok(OrbitReport {
        category: cat.spec().name(),
        vertex_count: cat.spec().vertex_count(),
        hom_field: "Q",
        rigid: names(&rigid),
        cluster_tilting: cts.iter().map(|s| names(s)).collect(),
        exchange_edges: exchange_graph(&cts),
    })
}

/// Checks `Hom(X, tau Y)` and `Hom(Y, tau X)` have equal dimension for all
/// pairs; returns the first failure.
pub fn two_cy_symmetry(cat: &OrbitCategory) -> Result<Option<(Vertex, Vertex)>> {
    let s = cat.spec();
    for x in cat.vertices() {
        for y in cat.vertices() {
            if cat.hom_dim(x, s.tau(y))? != cat.hom_dim(y, s.tau(x))? {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Middle terms of the mesh ending at `v`, in the quotient.
pub fn mesh_in_quotient(spec: &OrbitSpec, v: Vertex) -> Vec<Vertex> {
    predecessors(spec.dynkin(), v)
        .into_iter()
        .map(|z| spec.canonical(z))
        .collect()
}
