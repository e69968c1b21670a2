//! Seeded random generators shared by the integration tests.

#![allow(dead_code)]

use std::sync::Arc;

use quiverforge::hyperpotential::{from_potential, Hyperpotential, Potential};
use quiverforge::{AlgebraElement, Field, Path, Quiver, Scalar, Substitution};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q4() -> Arc<Quiver> {
    Arc::new(Quiver::cycle(4))
}

pub fn loop_quiver() -> Arc<Quiver> {
    Arc::new(Quiver::single_loop())
}

/// A nonzero scalar; small fractions over `Q`.
pub fn nonzero_scalar(f: Field, r: &mut impl Rng) -> Scalar {
    loop {
        let s = match f {
            Field::Rational => Scalar::rational(r.gen_range(-4..=4), r.gen_range(1..=3)),
            _ => f.scalar(r.gen_range(1..=6)),
        };
        if !s.is_zero() {
            return s;
        }
    }
}

/// Paths of length in `lens` from `from` to `to` (any endpoint if `None`).
fn paths(q: &Quiver, lens: std::ops::Range<usize>, ends: Option<(usize, usize)>) -> Vec<Path> {
    q.all_paths(lens.end)
        .into_iter()
        .filter(|p| lens.contains(&p.len()))
        .filter(|p| ends.is_none_or(|(s, t)| p.start() == s && p.end() == t))
        .collect()
}

fn combination(
    q: &Arc<Quiver>,
    f: Field,
    trunc: usize,
    pool: &[Path],
    terms: usize,
    r: &mut impl Rng,
) -> AlgebraElement {
    let mut x = AlgebraElement::zero(q.clone(), f, trunc);
    if pool.is_empty() {
        return x;
    }
    for _ in 0..terms {
        let p = pool.choose(r).expect("nonempty").clone();
        x.push(p, nonzero_scalar(f, r));
    }
    x
}

/// Up to `terms` random monomials with path lengths in `min_len..trunc`.
pub fn element(
    q: &Arc<Quiver>,
    f: Field,
    trunc: usize,
    min_len: usize,
    terms: usize,
    r: &mut impl Rng,
) -> AlgebraElement {
    let pool = paths(q, min_len..trunc, None);
    combination(q, f, trunc, &pool, terms, r)
}

/// A random sum of nontrivial cycles of length below `trunc`.
pub fn potential(q: &Arc<Quiver>, f: Field, trunc: usize, r: &mut impl Rng) -> Potential {
    let pool: Vec<Path> = paths(q, 1..trunc, None).into_iter().filter(Path::is_cycle).collect();
    let terms = r.gen_range(1..=4);
    Potential::new(&combination(q, f, trunc, &pool, terms, r)).expect("cycles form a potential")
}

/// `a -> c a + (higher terms in the block of a)` with `c != 0`.
pub fn invertible_substitution(q: &Arc<Quiver>, f: Field, trunc: usize, r: &mut impl Rng) -> Substitution {
    let images = (0..q.arrow_count())
        .map(|a| {
            let pool = paths(q, 2..trunc, Some((q.source(a), q.target(a))));
            let terms = r.gen_range(0..=2);
            let higher = combination(q, f, trunc, &pool, terms, r);
            &AlgebraElement::arrow(q.clone(), f, trunc, a).scale(&nonzero_scalar(f, r)) + &higher
        })
        .collect();
    Substitution::new(q.clone(), q.clone(), images).expect("block-respecting images")
}

/// A hyperpotential `d W` for a random potential `W`, valid by construction.
pub fn valid_hyperpotential(q: &Arc<Quiver>, f: Field, trunc: usize, r: &mut impl Rng) -> Hyperpotential {
    from_potential(&potential(q, f, trunc + 1, r))
}

/// A valid hyperpotential with one random monomial added to one component.
pub fn perturbed_hyperpotential(q: &Arc<Quiver>, f: Field, trunc: usize, r: &mut impl Rng) -> Hyperpotential {
    let h = valid_hyperpotential(q, f, trunc, r);
    let a = r.gen_range(0..q.arrow_count());
    let pool = paths(q, 1..trunc, Some((q.target(a), q.source(a))));
    let extra = combination(q, f, trunc, &pool, 1, r);
    let mut rho = h.rho().to_vec();
    rho[a] = &rho[a] + &extra;
    Hyperpotential::new(q.clone(), f, trunc, rho).expect("block-respecting components")
}
