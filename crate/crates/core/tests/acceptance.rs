//! Acceptance suite: fourteen end-to-end checks, one PASS/FAIL line each.
//!
//! Exits nonzero when the set of failing checks differs from `KNOWN_FAILURES`.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use quiverforge::cluster::{enumerate_variables, exchange_pattern, laurent_check, ClusterSeed, RationalFunction};
use quiverforge::cy_lattice::{cy_dimensions, hom_finite, Certified};
use quiverforge::ginzburg::build_ginzburg;
use quiverforge::hochschild::{in_image_of_b, invariant_from_rho};
use quiverforge::hyperpotential::{from_potential, transport, Potential};
use quiverforge::jacobian::{
    jacobian_dimensions, lambda_hyperpotential, lambda_potential, lambda_via_hyperpotential, lambda_via_potential,
};
use quiverforge::mesh::endo::{lambda_ct_object, EndAlgebra};
use quiverforge::mesh::hom::cross_check;
use quiverforge::mesh::orbit::{exchange_graph, g2_pair, hom_vanishing_set, is_cycle_graph};
use quiverforge::mesh::translation::column;
use quiverforge::mesh::{stmod_count, Dynkin, OrbitCategory, OrbitSpec, Vertex};
use quiverforge::{AlgebraElement, Error, Field, Quiver, Scalar};
use rand::Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

/// Checks expected to fail, with the reason printed next to them.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    6,
    "the identity fails for x in e_i A e_j and y with terms outside e_j A e_i; \
     the expansion equals the blockwise sum of commutators instead",
)];

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err(e: Error) -> String {
    e.to_string()
}

const LAMBDA_FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

/// `(m, e)` with `me >= 3`, `m <= 5`, `e <= 4`.
fn lambda_range() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 1..=5 {
        for e in 1..=4 {
            if m * e >= 3 {
                out.push((m, e));
            }
        }
    }
    out
}

fn hyperpotential_validity() -> Check {
    let mut cases = 0;
    let mut slowest = Duration::ZERO;
    for (m, e) in lambda_range() {
        for f in LAMBDA_FIELDS {
            let t = Instant::now();
            let h = lambda_hyperpotential(m, e, f, m * e + 3).map_err(err)?;
            let c = h.check();
            slowest = slowest.max(t.elapsed());
            ensure!(c.ok, "m={m} e={e} {f}: {:?}", c.violations);
            cases += 1;
        }
    }
    ensure!(slowest < Duration::from_secs(1), "slowest case took {slowest:?}");
    Ok(format!("{cases} cases valid, slowest {slowest:.0?}"))
}

/// Paths of length below `me - 1` on the `m`-cycle, counted by enumeration.
fn short_path_count(m: usize, e: usize) -> usize {
    Quiver::cycle(m).all_paths(m * e - 1).len()
}

fn jacobian_dimension() -> Check {
    let mut cases = 0;
    let mut slowest = Duration::ZERO;
    for (m, e) in lambda_range() {
        let expected = short_path_count(m, e);
        ensure!(expected == m * (m * e - 1), "path count {expected} for m={m} e={e}");
        for f in LAMBDA_FIELDS {
            let t = Instant::now();
            let q = lambda_via_hyperpotential(m, e, f).map_err(err)?;
            slowest = slowest.max(t.elapsed());
            ensure!(q.stabilized(), "m={m} e={e} {f}: no stabilization, dims {:?}", q.dims);
            ensure!(
                q.dimension() == Some(expected),
                "m={m} e={e} {f}: dim {:?}, expected {expected}",
                q.dimension()
            );
            cases += 1;
        }
    }
    let q = lambda_via_hyperpotential(4, 2, Field::Prime(2)).map_err(err)?;
    ensure!(q.dimension() == Some(28), "(4,2) over GF(2): {:?}", q.dimension());
    ensure!(slowest < Duration::from_secs(5), "slowest case took {slowest:?}");
    Ok(format!(
        "{cases} cases, (4,2) over GF(2) has dim 28, slowest {slowest:.0?}"
    ))
}

fn characteristic_obstruction() -> Check {
    let (mut vanishing, mut agreeing) = (0, 0);
    for (m, e) in lambda_range() {
        for f in LAMBDA_FIELDS {
            let p = f.characteristic();
            let n = m * e + 3;
            let hyper = lambda_via_hyperpotential(m, e, f).map_err(err)?;
            ensure!(
                hyper.dimension() == Some(m * (m * e - 1)),
                "hyperpotential route m={m} e={e} {f}"
            );
            if p != 0 && (e as u64).is_multiple_of(p) {
                let h = from_potential(&lambda_potential(m, e, f, n + 1).map_err(err)?);
                ensure!(h.is_zero(), "m={m} e={e} {f}: cyclic derivatives do not vanish");
                ensure!(
                    !jacobian_dimensions(&h, n).stabilized(),
                    "m={m} e={e} {f}: zero relations stabilized"
                );
                ensure!(
                    matches!(lambda_via_potential(m, e, f), Err(Error::PotentialVanishes(q)) if q == p),
                    "m={m} e={e} {f}: potential route not rejected"
                );
                vanishing += 1;
            } else {
                let pot = lambda_via_potential(m, e, f).map_err(err)?;
                ensure!(
                    pot.dims == hyper.dims,
                    "m={m} e={e} {f}: {:?} vs {:?}",
                    pot.dims,
                    hyper.dims
                );
                agreeing += 1;
            }
        }
    }
    ensure!(vanishing > 0 && agreeing > 0, "degenerate range");
    Ok(format!("{vanishing} cases with p | e vanish, {agreeing} cases agree"))
}

fn connes_cokernel() -> Check {
    let q = common::loop_quiver();
    let mut found = Vec::new();
    for f in [Field::Prime(2), Field::Rational] {
        let beta3 = AlgebraElement::arrow(q.clone(), f, 6, 0).pow(3);
        let h = invariant_from_rho(&q, f, std::slice::from_ref(&beta3)).map_err(err)?;
        let h4 = h.homogeneous_part(4);
        ensure!(
            h4 == AlgebraElement::arrow(q.clone(), f, h.trunc(), 0).pow(4),
            "{f}: class {}",
            h4.format()
        );
        let pre = in_image_of_b(&h4).map_err(err)?;
        found.push((f, pre));
    }
    ensure!(
        found[0].1.is_none(),
        "GF(2): unexpected preimage {}",
        found[0].1.as_ref().unwrap().format()
    );
    let pre = found[1].1.clone().ok_or("Q: no preimage")?;
    let expected = AlgebraElement::arrow(q.clone(), Field::Rational, pre.trunc(), 0)
        .pow(4)
        .scale(&Scalar::rational(1, 4));
    ensure!(pre == expected, "Q: preimage {}", pre.format());
    Ok(format!("no preimage over GF(2); preimage {} over Q", pre.format()))
}

fn d_squared_equivalence() -> Check {
    let mut r = common::rng(0x5eed_0005);
    let (mut invalid, mut total) = (0, 0);
    for k in 0..200 {
        let q = if k % 2 == 0 {
            common::q4()
        } else {
            common::loop_quiver()
        };
        let f = common::FIELDS[k % 3];
        let trunc = r.gen_range(2..=8);
        let h = if k < 100 {
            common::valid_hyperpotential(&q, f, trunc, &mut r)
        } else {
            common::perturbed_hyperpotential(&q, f, trunc, &mut r)
        };
        let valid = h.check().ok;
        let d2 = build_ginzburg(&h).map_err(err)?.check_d_squared().ok;
        ensure!(valid == d2, "family {k}: check {valid}, d^2 {d2}");
        ensure!(k >= 100 || valid, "family {k} built valid but fails the check");
        invalid += usize::from(!valid);
        total += 1;
    }
    ensure!(invalid > 0, "no perturbed family was invalid");
    Ok(format!("{total} families agree, {invalid} invalid"))
}

fn commutator_lemma() -> Check {
    let mut r = common::rng(0x5eed_0006);
    let mut literal: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    let mut blockwise = 0;
    let mut compatible = 0;
    for k in 0..500 {
        let (name, q) = if k % 2 == 0 {
            ("Q4", common::q4())
        } else {
            ("loop", common::loop_quiver())
        };
        let f = if k % 4 < 2 { Field::Rational } else { Field::Prime(2) };
        let trunc = r.gen_range(2..=8);
        let x = common::element(&q, f, trunc, 1, 4, &mut r);
        let y = common::element(&q, f, trunc, 0, 4, &mut r);
        let lhs = x.commutator_expansion(&y).map_err(err)?;
        let n = lhs.trunc();
        let entry = literal.entry(name).or_default();
        entry.1 += 1;
        if lhs == x.commutator(&y).map_err(err)?.truncate(n) {
            entry.0 += 1;
        }
        if lhs == x.block_commutator(&y).map_err(err)?.truncate(n) {
            blockwise += 1;
        }
        let (i, j) = (r.gen_range(0..q.vertex_count()), r.gen_range(0..q.vertex_count()));
        let (xb, yb) = (x.block(i, j), y.block(j, i));
        if xb.commutator_expansion(&yb).map_err(err)? == xb.commutator(&yb).map_err(err)?.truncate(n) {
            compatible += 1;
        }
    }
    let summary = literal
        .iter()
        .map(|(k, (ok, n))| format!("{k} {ok}/{n}"))
        .collect::<Vec<_>>()
        .join(", ");
    let detail = format!("literal identity: {summary}; blockwise {blockwise}/500; compatible blocks {compatible}/500");
    ensure!(literal.values().all(|(ok, n)| ok == n), "{detail}");
    Ok(detail)
}

fn transport_chain_rule() -> Check {
    let mut r = common::rng(0x5eed_0007);
    for k in 0..200 {
        let q = if k % 2 == 0 {
            common::q4()
        } else {
            common::loop_quiver()
        };
        let f = common::FIELDS[k % 3];
        let trunc = r.gen_range(3..=8);
        let w = common::potential(&q, f, trunc, &mut r);
        let phi = common::invertible_substitution(&q, f, trunc, &mut r);
        ensure!(phi.is_invertible(), "substitution {k} not invertible");
        let lhs = transport(&phi, &from_potential(&w)).map_err(err)?;
        let rhs = from_potential(&Potential::new(&phi.apply(w.element()).map_err(err)?).map_err(err)?);
        ensure!(
            lhs.agrees_with(&rhs),
            "case {k}: transport differs from the transformed potential"
        );
    }
    let q = common::loop_quiver();
    let mut pairs = 0;
    for p in [2u64, 3, 5] {
        let f = Field::Prime(p);
        for n in 2..=6u32 {
            let trunc = (p as usize).max(n as usize) + 3;
            let b = AlgebraElement::arrow(q.clone(), f, trunc, 0);
            let w = Potential::new(&b.pow(n)).map_err(err)?;
            let w2 = Potential::new(&(&b.pow(n) + &b.pow(p as u32))).map_err(err)?;
            ensure!(w != w2, "p={p} n={n}: potentials coincide");
            ensure!(
                from_potential(&w).agrees_with(&from_potential(&w2)),
                "p={p} n={n}: hyperpotentials differ"
            );
            pairs += 1;
        }
    }
    Ok(format!(
        "200 substitutions; {pairs} pairs b^n, b^n + b^p agree in char p"
    ))
}

fn cy_lattice() -> Check {
    let hf = hom_finite((6, 7), (-2, -3));
    ensure!(hf.d_prime == 4 && hf.hom_finite, "D' = {}", hf.d_prime);
    let l = cy_dimensions((6, 7), (-2, -3)).map_err(err)?;
    ensure!(
        l.certified == Certified::L,
        "(6,7),(-2,-3) certifies {}",
        l.certified.as_str()
    );
    ensure!(l.member((2, 1)).member, "(2,1) not in L((6,7),(-2,-3))");
    let l = cy_dimensions((14, 15), (4, 4)).map_err(err)?;
    let m = l.certified_member((2, 1));
    ensure!(m.member && m.coeffs == Some((-1, 4)), "(14,15),(4,4): {m:?}");
    let l = cy_dimensions((2, 2), (2, 1)).map_err(err)?;
    ensure!(l.certified_member((0, 1)).member, "(0,1) not certified for (2,2),(2,1)");
    ensure!(
        matches!(cy_dimensions((2, 2), (1, 1)), Err(Error::NotHomFinite)),
        "D' = 0 accepted"
    );
    Ok("D'=4; (2,1) = 4(4,4) - (14,15); (0,1) certified; D'=0 rejected".into())
}

fn orbit_counts() -> Check {
    let c42 = OrbitSpec::c_me(4, 2).map_err(err)?;
    let g2 = OrbitSpec::g2();
    ensure!(
        c42.vertex_count() == 4 * 4 * 2,
        "C(4,2) has {} vertices",
        c42.vertex_count()
    );
    ensure!(g2.vertex_count() == 32, "E8/tau^4 has {} vertices", g2.vertex_count());
    ensure!(
        c42.vertices().len() == 32 && g2.vertices().len() == 32,
        "vertex lists disagree with counts"
    );
    // deleting add(tau T) leaves mod of End(T); deleting T then leaves the stable part
    let t: BTreeSet<Vertex> = lambda_ct_object(4, 2).into_iter().map(|v| c42.canonical(v)).collect();
    let tau_t: BTreeSet<Vertex> = t.iter().map(|&v| c42.tau(v)).collect();
    ensure!(t.is_disjoint(&tau_t), "T and tau T overlap");
    let all: BTreeSet<Vertex> = c42.vertices().into_iter().collect();
    let module: BTreeSet<Vertex> = all.difference(&tau_t).copied().collect();
    let stable: BTreeSet<Vertex> = module.difference(&t).copied().collect();
    ensure!(stmod_count(4, 2) == 24, "stmod_count(4,2) = {}", stmod_count(4, 2));
    ensure!(
        (all.len(), module.len(), stable.len()) == (32, 28, stmod_count(4, 2)),
        "chain {} -> {} -> {}",
        all.len(),
        module.len(),
        stable.len()
    );
    Ok("32, 32; chain 32 -> 28 -> 24".into())
}

fn g2_category() -> Check {
    let cat = OrbitCategory::new(OrbitSpec::g2());
    let s = cat.spec();
    let rigid = cat.rigid_indecomposables().map_err(err)?;
    ensure!(rigid.len() == 8, "{} rigid indecomposables", rigid.len());
    let orbits: BTreeSet<BTreeSet<Vertex>> = rigid
        .iter()
        .map(|&v| (0..4).scan(v, |w, _| Some(std::mem::replace(w, s.tau(*w)))).collect())
        .collect();
    ensure!(
        orbits.len() == 2 && orbits.iter().all(|o| o.len() == 4),
        "tau-orbits {orbits:?}"
    );
    let cts = cat.cluster_tilting_objects().map_err(err)?;
    ensure!(cts.len() == 8, "{} cluster-tilting sets", cts.len());
    ensure!(
        is_cycle_graph(8, &exchange_graph(&cts)),
        "exchange graph is not an 8-cycle"
    );
    let (x, y) = g2_pair(&cat).map_err(err)?;
    let end = EndAlgebra::new(&cat, &[x, y]).map_err(err)?;
    ensure!(end.dim() == 7, "End(X+Y) has dim {}", end.dim());
    let quiver = end.gabriel_quiver();
    let loops = quiver.iter().filter(|a| a.from == a.to).map(|a| a.count).sum::<usize>();
    let arrows = quiver.iter().filter(|a| a.from != a.to).map(|a| a.count).sum::<usize>();
    ensure!((loops, arrows) == (1, 1), "Gabriel quiver {quiver:?}");
    ensure!(
        end.radical_dims() == vec![7, 5, 3, 1, 0],
        "radical dims {:?}",
        end.radical_dims()
    );
    ensure!(
        end.g2_loop_summand().map_err(err)?.is_some(),
        "loop does not satisfy beta^3 = 0"
    );
    Ok(format!(
        "8 rigid in 2 orbits, 8 cluster-tilting, octagon; End dim 7, radical {:?}",
        end.radical_dims()
    ))
}

fn c42_cluster_tilting() -> Check {
    let cat = OrbitCategory::new(OrbitSpec::c_me(4, 2).map_err(err)?);
    let t = lambda_ct_object(4, 2);
    ensure!(cat.is_cluster_tilting(&t).map_err(err)?, "{t:?} is not cluster-tilting");
    let end = EndAlgebra::new(&cat, &t).map_err(err)?;
    ensure!(end.dim() == 28, "End(T) has dim {}", end.dim());
    let q = end.gabriel_quiver();
    let mut next = [usize::MAX; 4];
    for a in &q {
        ensure!(a.count == 1 && next[a.from] == usize::MAX, "Gabriel quiver {q:?}");
        next[a.from] = a.to;
    }
    let mut v = 0;
    for _ in 0..4 {
        v = next[v];
        ensure!(v != usize::MAX, "Gabriel quiver {q:?}");
    }
    ensure!(
        q.len() == 4 && v == 0 && (1..4).all(|k| (0..k).fold(0, |w, _| next[w]) != 0),
        "Gabriel quiver {q:?} is not a 4-cycle"
    );
    ensure!(end.is_lambda(4, 2).map_err(err)?, "End(T) is not Lambda(4,2)");
    Ok("cluster-tilting; End(T) has dim 28 with Gabriel quiver a 4-cycle".into())
}

/// Marks transcribed from the two drawn panels as `(row, column)`, rows top
/// to bottom and columns left to right, with the wrap after 8 columns.
const PANEL_X: (usize, i64) = (6, 4);
const PANEL_X_CIRCLES: [(usize, i64); 5] = [(0, 6), (4, 2), (5, 1), (5, 3), (6, 2)];
const PANEL_Y: (usize, i64) = (5, 5);
const PANEL_Y_DIAMONDS: [(usize, i64); 3] = [(5, 3), (6, 2), (6, 4)];

fn relative_marks(base: (usize, i64), marks: &[(usize, i64)]) -> BTreeSet<(usize, i64)> {
    marks.iter().map(|&(r, c)| (r, (c - base.1).rem_euclid(8))).collect()
}

fn hom_pattern() -> Check {
    let cat = OrbitCategory::new(OrbitSpec::g2());
    let d = cat.dynkin();
    let (x, y) = g2_pair(&cat).map_err(err)?;
    let computed = |base: Vertex, vs: &[Vertex]| -> BTreeSet<(usize, i64)> {
        vs.iter()
            .map(|&v| (d.display_row(v.i), (column(d, v) - column(d, base)).rem_euclid(8)))
            .collect()
    };
    ensure!(d.display_row(x.i) == PANEL_X.0, "X drawn in row {}", d.display_row(x.i));
    ensure!(d.display_row(y.i) == PANEL_Y.0, "Y drawn in row {}", d.display_row(y.i));
    ensure!(
        (column(d, y) - column(d, x)).rem_euclid(8) == PANEL_Y.1 - PANEL_X.1,
        "Y is not one column right of X"
    );
    let zx = hom_vanishing_set(&cat, x).map_err(err)?;
    let zy = hom_vanishing_set(&cat, y).map_err(err)?;
    let (cx, cy) = (computed(x, &zx), computed(y, &zy));
    ensure!(cx == relative_marks(PANEL_X, &PANEL_X_CIRCLES), "Hom(X,-) zeros {cx:?}");
    ensure!(
        cy == relative_marks(PANEL_Y, &PANEL_Y_DIAMONDS),
        "Hom(Y,-) zeros {cy:?}"
    );
    let by_orbit = |zs: &[Vertex]| {
        let mut m = BTreeMap::new();
        for z in zs {
            *m.entry(z.i).or_insert(0usize) += 1;
        }
        m
    };
    let (ox, oy) = (by_orbit(&zx), by_orbit(&zy));
    ensure!(
        ox == BTreeMap::from([(3, 1), (5, 1), (6, 2), (7, 1)]),
        "Hom(X,-) zeros per tau-orbit {ox:?}"
    );
    ensure!(
        oy == BTreeMap::from([(6, 1), (7, 2)]),
        "Hom(Y,-) zeros per tau-orbit {oy:?}"
    );
    Ok(format!(
        "{} zeros of Hom(X,-) per tau-orbit {ox:?}; {} zeros of Hom(Y,-) per tau-orbit {oy:?}; \
         both match the drawn marks (the drawn circle count is 5, the stated count is 8)",
        cx.len(),
        cy.len(),
    ))
}

/// The eight expressions as drawn, left to right along the two rows.
const DRAWN_VARIABLES: [&str; 8] = [
    "y",
    "(1+x^3)/y",
    "(x^6+3x^3y+2x^3+(y+1)^3)/(x^3y^2)",
    "(x^3+(y+1)^3)/(x^3y)",
    "(y+1)/x",
    "x",
    "(x^3+y+1)/(xy)",
    "(x^3+(y+1)^2)/(x^2y)",
];

fn g2_cluster_algebra() -> Check {
    let seed = ClusterSeed::g2();
    let vars = enumerate_variables(&seed).map_err(err)?;
    let got: BTreeSet<String> = vars.iter().map(|v| v.to_string()).collect();
    let drawn: BTreeSet<String> = DRAWN_VARIABLES
        .iter()
        .map(|s| RationalFunction::parse(s, &["x", "y"]).map(|f| f.to_string()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    ensure!(got == drawn, "enumerated {got:?}, drawn {drawn:?}");
    let pattern = exchange_pattern(&seed).map_err(err)?;
    ensure!(
        pattern.clusters.len() == 8 && is_cycle_graph(8, &pattern.edges),
        "exchange pattern with {} clusters is not an octagon",
        pattern.clusters.len()
    );
    ensure!(vars.iter().all(laurent_check), "non-Laurent variable");
    Ok("8 variables match, octagon, all Laurent".into())
}

fn cross_oracle() -> Check {
    // every source in a fundamental domain of width 4 with all targets it reaches
    let mut total = 0;
    for (name, d) in [("A3", Dynkin::a(3)), ("D8", Dynkin::d(8)), ("E8", Dynkin::e(8))] {
        let span = 4 + d.coxeter_number() as i64;
        total += cross_check(&d, 0, span).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{total} pairs agree"))
}

fn run(id: usize, title: &str, check: fn() -> Check) -> bool {
    let t = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let secs = t.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => {
            println!("PASS [{id:>2}] {title} ({secs:.1}s): {detail}");
            true
        }
        Err(detail) => {
            println!("FAIL [{id:>2}] {title} ({secs:.1}s): {detail}");
            if let Some((_, why)) = KNOWN_FAILURES.iter().find(|k| k.0 == id) {
                println!("           known: {why}");
            }
            false
        }
    }
}

fn main() {
    let checks: [Criterion; 14] = [
        ("hyperpotential validity of the Lambda family", hyperpotential_validity),
        ("Jacobian dimension m(me-1)", jacobian_dimension),
        ("characteristic obstruction for potentials", characteristic_obstruction),
        ("Connes map cokernel on the loop", connes_cokernel),
        ("d^2 = 0 iff hyperpotential", d_squared_equivalence),
        ("commutator lemma on random pairs", commutator_lemma),
        ("transport chain rule", transport_chain_rule),
        ("Calabi-Yau lattice", cy_lattice),
        ("orbit category vertex counts", orbit_counts),
        ("G2 category: rigid, cluster-tilting, End", g2_category),
        ("C(4,2) cluster-tilting object", c42_cluster_tilting),
        ("Hom vanishing pattern in the G2 category", hom_pattern),
        ("G2 cluster algebra", g2_cluster_algebra),
        ("knitting agrees with exact Hom", cross_oracle),
    ];
    let failed: Vec<usize> = checks
        .iter()
        .enumerate()
        .filter(|(k, (title, check))| !run(k + 1, title, *check))
        .map(|(k, _)| k + 1)
        .collect();
    let known: Vec<usize> = KNOWN_FAILURES.iter().map(|k| k.0).collect();
    println!(
        "acceptance: {} of {} pass; failing {failed:?}, known {known:?}",
        checks.len() - failed.len(),
        checks.len()
    );
    if failed != known {
        std::process::exit(1);
    }
}
