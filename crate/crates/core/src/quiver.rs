//! Quivers and paths.
//!
//! Paths compose LEFT TO RIGHT: in `a1 a2 ... an` the target of `a_j` is the
//! source of `a_{j+1}`. A path walks from the source of its first arrow to
//! the target of its last one, so `a * rho_a` is a cycle whenever `rho_a`
//! walks back from `t(a)` to `s(a)`.
//!
//! Arrows and vertices are kept in declaration order; "lex" order on paths
//! compares arrow positions in that order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

/// A walk in a quiver. The empty walk at `v` is the idempotent `e_v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        self.start == self.end
    }

    /// Concatenation, or `None` when the walks do not meet.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.end != other.start {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.len() + other.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            start: self.start,
            end: other.end,
            arrows,
        })
    }

    /// Subpath `arrows[from..to]`, which must be nonempty or carry a vertex.
    pub(crate) fn slice(&self, quiver: &Quiver, from: usize, to: usize) -> Path {
        if from == to {
            let v = if from == 0 {
                self.start
            } else {
                quiver.arrows[self.arrows[from - 1]].target
            };
            return Path::trivial(v);
        }
        let sub = self.arrows[from..to].to_vec();
        Path {
            start: quiver.arrows[sub[0]].source,
            end: quiver.arrows[*sub.last().unwrap()].target,
            arrows: sub,
        }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.start.cmp(&other.start))
            .then_with(|| self.end.cmp(&other.end))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub id: String,
    pub from: String,
    pub to: String,
}

/// JSON interchange form: `{"vertices": [...], "arrows": [{"id","from","to"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
}

impl Quiver {
    pub fn new<V: AsRef<str>>(vertices: &[V], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let doc = QuiverDoc {
            vertices: vertices.iter().map(|v| v.as_ref().to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|(id, from, to)| ArrowDoc {
                    id: id.to_string(),
                    from: from.to_string(),
                    to: to.to_string(),
                })
                .collect(),
        };
        Quiver::from_doc(&doc)
    }

    pub fn from_doc(doc: &QuiverDoc) -> Result<Quiver> {
        let mut vertex_index = HashMap::new();
        for (i, v) in doc.vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex {
                    id: v.clone(),
                    location: format!("vertices[{i}]"),
                });
            }
        }
        let mut arrow_index = HashMap::new();
        let mut arrows = Vec::with_capacity(doc.arrows.len());
        for (k, a) in doc.arrows.iter().enumerate() {
            if arrow_index.insert(a.id.clone(), k).is_some() {
                return Err(Error::DuplicateArrow {
                    id: a.id.clone(),
                    location: format!("arrows[{k}]"),
                });
            }
            let lookup = |v: &str| {
                vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::Malformed(format!("arrows[{k}] refers to unknown vertex '{v}'")))
            };
            arrows.push(Arrow {
                id: a.id.clone(),
                source: lookup(&a.from)?,
                target: lookup(&a.to)?,
            });
        }
        Ok(Quiver {
            vertices: doc.vertices.clone(),
            arrows,
            vertex_index,
            arrow_index,
        })
    }

    pub fn to_doc(&self) -> QuiverDoc {
        QuiverDoc {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowDoc {
                    id: a.id.clone(),
                    from: self.vertices[a.source].clone(),
                    to: self.vertices[a.target].clone(),
                })
                .collect(),
        }
    }

    pub fn parse_json(text: &str) -> Result<Quiver> {
        let doc: QuiverDoc = serde_json::from_str(text)
            .map_err(|e| Error::Malformed(format!("line {} column {}: {e}", e.line(), e.column())))?;
        Quiver::from_doc(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    /// Graphviz rendering: vertices first, then arrows, in declaration order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph Q {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for a in &self.arrows {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[a.source], self.vertices[a.target], a.id
            );
        }
        out.push_str("}\n");
        out
    }

    /// The oriented `m`-cycle with vertices `1..m` and arrows `a_i: i -> i+1`.
    pub fn cycle(m: usize) -> Quiver {
        assert!(m >= 1);
        let vs: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
        let ids: Vec<String> = (1..=m).map(|i| format!("a{i}")).collect();
        let arrows: Vec<(&str, &str, &str)> = (0..m)
            .map(|i| (ids[i].as_str(), vs[i].as_str(), vs[(i + 1) % m].as_str()))
            .collect();
        Quiver::new(&vs, &arrows).expect("valid cycle")
    }

    /// One vertex `1` with one loop `b`.
    pub fn single_loop() -> Quiver {
        Quiver::new(&["1"], &[("b", "1", "1")]).expect("valid loop quiver")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex(&self, id: &str) -> Result<usize> {
        self.vertex_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn arrow_by_id(&self, id: &str) -> Result<usize> {
        self.arrow_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(id.to_string()))
    }

    pub fn source(&self, a: usize) -> usize {
        self.arrows[a].source
    }

    pub fn target(&self, a: usize) -> usize {
        self.arrows[a].target
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        Path {
            start: self.arrows[a].source,
            end: self.arrows[a].target,
            arrows: vec![a],
        }
    }

    /// Validates a walk given by arrow ids.
    pub fn path<S: AsRef<str>>(&self, start: &str, ids: &[S]) -> Result<Path> {
        let start = self.vertex(start)?;
        let mut p = Path::trivial(start);
        for id in ids {
            let a = self.arrow_by_id(id.as_ref())?;
            p = p
                .compose(&self.arrow_path(a))
                .ok_or_else(|| Error::NotComposable(id.as_ref().to_string()))?;
        }
        Ok(p)
    }

    /// Builds a walk from arrow indices, or `None` if it is not composable.
    pub fn path_from_arrows(&self, start: usize, arrows: &[usize]) -> Option<Path> {
        let mut end = start;
        for &a in arrows {
            if self.arrows[a].source != end {
                return None;
            }
            end = self.arrows[a].target;
        }
        Some(Path {
            start,
            end,
            arrows: arrows.to_vec(),
        })
    }

    /// Like [`Path::compose`] but checks that both walks belong to this quiver.
    pub fn compose(&self, p: &Path, q: &Path) -> Result<Option<Path>> {
        self.check_path(p)?;
        self.check_path(q)?;
        Ok(p.compose(q))
    }

    fn check_path(&self, p: &Path) -> Result<()> {
        for &a in &p.arrows {
            if a >= self.arrows.len() {
                return Err(Error::UnknownArrow(format!("#{a}")));
            }
        }
        if p.start >= self.vertices.len() {
            return Err(Error::UnknownVertex(format!("#{}", p.start)));
        }
        Ok(())
    }

    /// All nontrivial-cycle-aware rotations need vertex data; this fixes up
    /// the endpoints of a rotated arrow list.
    pub(crate) fn reanchor(&self, arrows: Vec<usize>, fallback: usize) -> Path {
        match arrows.first() {
            Some(&a) => Path {
                start: self.arrows[a].source,
                end: self.arrows[*arrows.last().unwrap()].target,
                arrows,
            },
            None => Path::trivial(fallback),
        }
    }

    /// All distinct rotations of a cycle, correctly anchored.
    pub fn rotations(&self, p: &Path) -> Vec<Path> {
        if p.is_trivial() {
            return vec![p.clone()];
        }
        let n = p.len();
        let mut out: Vec<Path> = Vec::with_capacity(n);
        for k in 0..n {
            let mut arrows = p.arrows[k..].to_vec();
            arrows.extend_from_slice(&p.arrows[..k]);
            let r = self.reanchor(arrows, p.start);
            if k > 0 && r == *p {
                break;
            }
            out.push(r);
        }
        out
    }

    pub fn canonical_rotation(&self, p: &Path) -> Path {
        self.rotations(p).into_iter().min().expect("nonempty")
    }

    /// One-step rotation `sigma`; `None` for non-cycles.
    pub fn sigma(&self, p: &Path) -> Option<Path> {
        if !p.is_cycle() {
            return None;
        }
        if p.is_trivial() {
            return Some(p.clone());
        }
        let n = p.len();
        let mut arrows = vec![p.arrows[n - 1]];
        arrows.extend_from_slice(&p.arrows[..n - 1]);
        Some(self.reanchor(arrows, p.start))
    }

    /// All walks `from -> to` of length `< max_len`, length-then-lex ordered.
    pub fn enumerate_paths(&self, from: &str, to: &str, max_len: usize) -> Result<Vec<Path>> {
        let from = self.vertex(from)?;
        let to = self.vertex(to)?;
        Ok(self
            .paths_from(from, max_len)
            .into_iter()
            .filter(|p| p.end == to)
            .collect())
    }

    /// All walks starting at `from` with length `< max_len`, ordered.
    pub fn paths_from(&self, from: usize, max_len: usize) -> Vec<Path> {
        let mut out = Vec::new();
        if max_len == 0 {
            return out;
        }
        let mut layer = vec![Path::trivial(from)];
        for _ in 0..max_len {
            out.extend(layer.iter().cloned());
            let mut next = Vec::new();
            for p in &layer {
                for (a, arr) in self.arrows.iter().enumerate() {
                    if arr.source == p.end {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        next.push(Path {
                            start: p.start,
                            end: arr.target,
                            arrows,
                        });
                    }
                }
            }
            layer = next;
        }
        out
    }

    /// Every walk of length `< max_len`, sorted.
    pub fn all_paths(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertex_count())
            .flat_map(|v| self.paths_from(v, max_len))
            .collect();
        out.sort();
        out
    }

    /// Walks of exactly length `len` that are cycles, sorted.
    pub fn cycles_of_length(&self, len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertex_count())
            .flat_map(|v| {
                self.paths_from(v, len + 1)
                    .into_iter()
                    .filter(move |p| p.len() == len && p.end == v)
            })
            .collect();
        out.sort();
        out
    }

    /// `e_1` for trivial walks, `a1*a2*...` otherwise.
    pub fn format_path(&self, p: &Path) -> String {
        if p.is_trivial() {
            return format!("e_{}", self.vertices[p.start]);
        }
        p.arrows
            .iter()
            .map(|&a| self.arrows[a].id.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn path_ids(&self, p: &Path) -> Vec<String> {
        p.arrows.iter().map(|&a| self.arrows[a].id.clone()).collect()
    }
}
