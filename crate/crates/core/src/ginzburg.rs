//! Finite presentations of Ginzburg dg-algebras of hyperpotentials.
//!
//! The graded quiver adds, for every arrow `a: i -> j`, an arrow
//! `a*: j -> i` of degree -1 (id `a` followed by `*`) and, for every vertex
//! `i`, a loop `t_i` of degree -2. The differential is determined by
//!
//! ```text
//! d(a) = 0,   d(a*) = rho_a,   d(t_i) = e_i (sum_b [b, b*]) e_i
//! ```
//!
//! and the Leibniz rule `d(xy) = d(x) y + (-1)^|x| x d(y)`.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperpotential::Hyperpotential;
use crate::path_algebra::{AlgebraElement, Substitution, TermDoc};
use crate::quiver::{Path, Quiver};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Arrow(usize),
    Dual(usize),
    Loop(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedQuiver {
    base: Arc<Quiver>,
    quiver: Arc<Quiver>,
    kinds: Vec<Generator>,
}

impl GradedQuiver {
    /// Arrows are laid out as: base arrows, then their duals, then loops.
    pub fn new(base: Arc<Quiver>) -> Result<Self> {
        let v = base.vertices();
        let mut arrows: Vec<(String, String, String)> = Vec::new();
        let mut kinds = Vec::new();
        for (k, a) in base.arrows().iter().enumerate() {
            arrows.push((a.id.clone(), v[a.source].clone(), v[a.target].clone()));
            kinds.push(Generator::Arrow(k));
        }
        for (k, a) in base.arrows().iter().enumerate() {
            arrows.push((format!("{}*", a.id), v[a.target].clone(), v[a.source].clone()));
            kinds.push(Generator::Dual(k));
        }
        for (i, name) in v.iter().enumerate() {
            arrows.push((format!("t_{name}"), name.clone(), name.clone()));
            kinds.push(Generator::Loop(i));
        }
        let refs: Vec<(&str, &str, &str)> = arrows
            .iter()
            .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
            .collect();
        let quiver = Quiver::new(v, &refs).map_err(|e| match e {
            Error::DuplicateArrow { id, .. } => Error::Malformed(format!(
                "generator id '{id}' of the graded quiver collides with an arrow id"
            )),
            other => other,
        })?;
        Ok(GradedQuiver {
            base,
            quiver: Arc::new(quiver),
            kinds,
        })
    }

    pub fn base(&self) -> &Arc<Quiver> {
        &self.base
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn generator(&self, k: usize) -> &Generator {
        &self.kinds[k]
    }

    pub fn dual(&self, a: usize) -> usize {
        self.base.arrow_count() + a
    }

    pub fn loop_at(&self, i: usize) -> usize {
        2 * self.base.arrow_count() + i
    }

    pub fn degree(&self, k: usize) -> i32 {
        match self.kinds[k] {
            Generator::Arrow(_) => 0,
            Generator::Dual(_) => -1,
            Generator::Loop(_) => -2,
        }
    }

    pub fn path_degree(&self, p: &Path) -> i32 {
        p.arrows().iter().map(|&k| self.degree(k)).sum()
    }

    /// Transports an element of the base path algebra.
    pub fn embed(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_terms(
            self.quiver.clone(),
            x.field(),
            x.trunc(),
            x.terms().iter().map(|(p, c)| {
                let q = self
                    .quiver
                    .path_from_arrows(p.start(), p.arrows())
                    .expect("base arrows keep their positions");
                (q, c.clone())
            }),
        )
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in self.quiver.vertices() {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (k, a) in self.quiver.arrows().iter().enumerate() {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{} ({})\"];",
                self.quiver.vertices()[a.source],
                self.quiver.vertices()[a.target],
                a.id,
                self.degree(k)
            );
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DgPresentation {
    graded: GradedQuiver,
    field: Field,
    trunc: usize,
    differential: Vec<AlgebraElement>,
}

/// Outcome of evaluating `d^2` on the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DSquaredReport {
    pub ok: bool,
    pub verified_below: usize,
    /// Vertices `i` with `d^2(t_i) != 0`, and the offending terms.
    pub blocks: Vec<DSquaredBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DSquaredBlock {
    pub vertex: String,
    pub terms: Vec<(String, String)>,
}

/// Presentation of the Ginzburg dg-algebra; `h` need not be valid.
pub fn build_ginzburg(h: &Hyperpotential) -> Result<DgPresentation> {
    let graded = GradedQuiver::new(h.quiver().clone())?;
    let field = h.field();
    let n = h.trunc();
    let gq = graded.quiver().clone();
    let base = h.quiver();
    let mut differential = Vec::with_capacity(gq.arrow_count());
    for k in 0..gq.arrow_count() {
        let value = match graded.generator(k) {
            Generator::Arrow(_) => AlgebraElement::zero(gq.clone(), field, n),
            Generator::Dual(a) => graded.embed(&h.rho()[*a]),
            Generator::Loop(i) => {
                let mut x = AlgebraElement::zero(gq.clone(), field, n);
                for b in 0..base.arrow_count() {
                    let bb = gq.path_from_arrows(base.source(b), &[b, graded.dual(b)]).expect("walk");
                    let bsb = gq.path_from_arrows(base.target(b), &[graded.dual(b), b]).expect("walk");
                    if base.source(b) == *i {
                        x.push(bb, field.one());
                    }
                    if base.target(b) == *i {
                        x.push(bsb, -field.one());
                    }
                }
                x
            }
        };
        differential.push(value);
    }
    Ok(DgPresentation {
        graded,
        field,
        trunc: n,
        differential,
    })
}

impl DgPresentation {
    pub fn graded(&self) -> &GradedQuiver {
        &self.graded
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// `d` of the `k`-th generator of the graded quiver.
    pub fn d_generator(&self, k: usize) -> &AlgebraElement {
        &self.differential[k]
    }

    /// `d` of an arbitrary element, by the Leibniz rule.
    pub fn d(&self, x: &AlgebraElement) -> AlgebraElement {
        let gq = self.graded.quiver().clone();
        let n = self.trunc.min(x.trunc());
        let mut out = AlgebraElement::zero(gq.clone(), self.field, n);
        for (p, c) in x.terms() {
            let mut sign_degree = 0i32;
            for (j, &k) in p.arrows().iter().enumerate() {
                let dk = &self.differential[k];
                if !dk.is_zero() {
                    let left =
                        AlgebraElement::monomial(gq.clone(), self.field, n, p.slice(&gq, 0, j), self.field.one());
                    let right = AlgebraElement::monomial(
                        gq.clone(),
                        self.field,
                        n,
                        p.slice(&gq, j + 1, p.len()),
                        self.field.one(),
                    );
                    let mut term = &(&left * dk) * &right;
                    let mut coeff = c.clone();
                    if sign_degree.rem_euclid(2) == 1 {
                        coeff = -coeff;
                    }
                    term = term.scale(&coeff);
                    out = &out + &term;
                }
                sign_degree += self.graded.degree(k);
            }
        }
        out
    }

    /// Evaluates `d^2` on every generator.
    pub fn check_d_squared(&self) -> DSquaredReport {
        let gq = self.graded.quiver();
        let mut blocks = Vec::new();
        let mut ok = true;
        for k in 0..gq.arrow_count() {
            let dd = self.d(&self.differential[k]);
            if dd.is_zero() {
                continue;
            }
            ok = false;
            let vertex = match self.graded.generator(k) {
                Generator::Loop(i) => gq.vertices()[*i].clone(),
                _ => gq.arrow(k).id.clone(),
            };
            blocks.push(DSquaredBlock {
                vertex,
                terms: dd
                    .terms()
                    .iter()
                    .map(|(p, c)| (c.to_string(), gq.format_path(p)))
                    .collect(),
            });
        }
        DSquaredReport {
            ok,
            verified_below: self.trunc,
            blocks,
        }
    }

    pub fn to_doc(&self) -> DgDoc {
        let gq = self.graded.quiver();
        DgDoc {
            field: self.field.to_string(),
            trunc: self.trunc,
            generators: (0..gq.arrow_count())
                .map(|k| GeneratorDoc {
                    id: gq.arrow(k).id.clone(),
                    from: gq.vertices()[gq.source(k)].clone(),
                    to: gq.vertices()[gq.target(k)].clone(),
                    degree: self.graded.degree(k),
                    d: self.differential[k].term_docs(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorDoc {
    pub id: String,
    pub from: String,
    pub to: String,
    pub degree: i32,
    pub d: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DgDoc {
    pub field: String,
    pub trunc: usize,
    pub generators: Vec<GeneratorDoc>,
}

/// The generator map `Gamma(c rho) -> Gamma(rho)`: identity on vertices and
/// arrows, `a* -> c a*`, `t_i -> c t_i`.
#[derive(Debug, Clone)]
pub struct ScalingMorphism {
    pub map: Substitution,
    pub commutes: bool,
}

pub fn scaling_isomorphism(h: &Hyperpotential, c: &Scalar) -> Result<ScalingMorphism> {
    if c.is_zero() {
        return Err(Error::InvalidParameters("scaling factor must be a unit".to_string()));
    }
    let source = build_ginzburg(&h.scale(c))?;
    let target = build_ginzburg(h)?;
    let gq = target.graded.quiver().clone();
    let n = h.trunc() + 1;
    let images = (0..gq.arrow_count())
        .map(|k| {
            let x = AlgebraElement::arrow(gq.clone(), h.field(), n, k);
            match target.graded.generator(k) {
                Generator::Arrow(_) => x,
                _ => x.scale(c),
            }
        })
        .collect();
    let map = Substitution::new(gq.clone(), gq.clone(), images)?;
    let mut commutes = true;
    for k in 0..gq.arrow_count() {
        let gen = AlgebraElement::arrow(gq.clone(), h.field(), n, k);
        let lhs = map.apply(source.d_generator(k))?;
        let rhs = target.d(&map.apply(&gen)?);
        let m = lhs.trunc().min(rhs.trunc());
        if lhs.truncate(m) != rhs.truncate(m) {
            commutes = false;
        }
    }
    Ok(ScalingMorphism { map, commutes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_h(f: Field, n: usize, k: u32) -> Hyperpotential {
        let q = Arc::new(Quiver::single_loop());
        let rho = AlgebraElement::arrow(q.clone(), f, n, 0).pow(k);
        Hyperpotential::new(q, f, n, vec![rho]).unwrap()
    }

    fn lambda42(f: Field, n: usize) -> Hyperpotential {
        let q = Arc::new(Quiver::cycle(4));
        let rho = (0..4)
            .map(|i| {
                let ids: Vec<String> = (0..7).map(|k| format!("a{}", (i + 1 + k) % 4 + 1)).collect();
                AlgebraElement::from_ids(q.clone(), f, n, 1, &((i + 1) % 4 + 1).to_string(), &ids).unwrap()
            })
            .collect();
        Hyperpotential::new(q, f, n, rho).unwrap()
    }

    #[test]
    fn loop_presentation() {
        let f = Field::Rational;
        let g = build_ginzburg(&loop_h(f, 6, 3)).unwrap();
        let gq = g.graded().quiver();
        assert_eq!(g.d_generator(1).format(), "b*b*b");
        assert_eq!(g.d_generator(2).format(), "b*b* - b**b");
        assert_eq!(gq.arrow(1).id, "b*");
        assert_eq!(gq.arrow(2).id, "t_1");
        assert!(g.d_generator(0).is_zero());
        assert!(g.check_d_squared().ok);
        assert_eq!(g.graded().degree(2), -2);
    }

    #[test]
    fn four_cycle_presentation() {
        let f = Field::prime(2).unwrap();
        let g = build_ginzburg(&lambda42(f, 10)).unwrap();
        let t1 = g.graded().loop_at(0);
        // a1 a1* - a4* a4, and -1 = 1 in GF(2)
        assert_eq!(g.d_generator(t1).format(), "a1*a1* + a4**a4");
        assert!(g.check_d_squared().ok);
        let g = build_ginzburg(&lambda42(Field::Rational, 10)).unwrap();
        assert_eq!(g.d_generator(t1).format(), "a1*a1* - a4**a4");
        for k in 0..g.graded().quiver().arrow_count() {
            let d = g.d_generator(k);
            for p in d.terms().keys() {
                assert_eq!(g.graded().path_degree(p), g.graded().degree(k) + 1);
            }
        }
    }

    #[test]
    fn invalid_rho_gives_nonzero_square() {
        let q = Arc::new(Quiver::cycle(4));
        let f = Field::Rational;
        let mut rho: Vec<_> = (0..4).map(|_| AlgebraElement::zero(q.clone(), f, 8)).collect();
        rho[0] = AlgebraElement::from_ids(q.clone(), f, 8, 1, "2", &["a2", "a3", "a4"]).unwrap();
        let h = Hyperpotential::new(q.clone(), f, 8, rho).unwrap();
        let r = build_ginzburg(&h).unwrap().check_d_squared();
        assert!(!r.ok);
        let verts: Vec<&str> = r.blocks.iter().map(|b| b.vertex.as_str()).collect();
        assert_eq!(verts, vec!["1", "2"]);
        assert_eq!(r.blocks[0].terms, vec![("1".to_string(), "a1*a2*a3*a4".to_string())]);
        assert_eq!(r.blocks[1].terms, vec![("-1".to_string(), "a2*a3*a4*a1".to_string())]);
        let zero = build_ginzburg(&Hyperpotential::zero(q, f, 8)).unwrap();
        assert!(zero.check_d_squared().ok);
        assert!(zero.d_generator(4).is_zero());
    }

    #[test]
    fn scaling() {
        let f = Field::Rational;
        let h = loop_h(f, 6, 3);
        assert!(scaling_isomorphism(&h, &f.one()).unwrap().commutes);
        let s = scaling_isomorphism(&h, &f.scalar(2)).unwrap();
        assert!(s.commutes);
        assert_eq!(s.map.image(1).format(), "2*b*");
        let f3 = Field::prime(3).unwrap();
        assert!(scaling_isomorphism(&loop_h(f3, 6, 3), &f3.scalar(2)).unwrap().commutes);
        assert!(scaling_isomorphism(&h, &f.zero()).is_err());
        // the wrong direction does not commute for c != 1
        let wrong = {
            let g_src = build_ginzburg(&h).unwrap();
            let g_tgt = build_ginzburg(&h.scale(&f.scalar(2))).unwrap();
            let s = scaling_isomorphism(&h, &f.scalar(2)).unwrap();
            let gq = g_src.graded().quiver().clone();
            let gen = AlgebraElement::arrow(gq, f, 7, 1);
            s.map.apply(g_src.d_generator(1)).unwrap() != g_tgt.d(&s.map.apply(&gen).unwrap())
        };
        assert!(wrong);
    }

    #[test]
    fn leibniz_on_monomials() {
        let f = Field::Rational;
        let g = build_ginzburg(&lambda42(f, 12)).unwrap();
        let gq = g.graded().quiver().clone();
        for p in gq.all_paths(4) {
            if p.is_trivial() {
                continue;
            }
            let x = AlgebraElement::monomial(gq.clone(), f, 12, p, f.one());
            assert!(g.d(&g.d(&x)).is_zero());
        }
    }

    #[test]
    fn dot_lists_degrees() {
        let g = build_ginzburg(&loop_h(Field::Rational, 4, 3)).unwrap();
        let dot = g.graded().to_dot();
        assert!(dot.contains("label=\"t_1 (-2)\""));
        assert!(dot.contains("label=\"b* (-1)\""));
    }
}
