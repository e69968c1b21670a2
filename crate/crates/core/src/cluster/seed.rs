//! Seeds and mutation.
//!
//! Exchange relations read the `k`-th row of `B`:
//! `x_k' = (prod x_i^{[b_ki]+} + prod x_i^{[-b_ki]+}) / x_k`.
//! With `B = [[0,-1],[3,0]]` this gives `(y+1)/x` and `(x^3+1)/y`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use super::rational::RationalFunction;
use crate::error::{Error, Result};

/// Largest number of clusters visited by [`exchange_pattern`].
pub const SEED_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Exponents from the `k`-th row of `B`.
    Row,
    /// Exponents from the `k`-th column of `B`.
    Column,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterSeed {
    b: Vec<Vec<i64>>,
    vars: Vec<RationalFunction>,
    convention: Convention,
}

impl ClusterSeed {
    pub fn new(b: Vec<Vec<i64>>, vars: Vec<RationalFunction>) -> Result<ClusterSeed> {
        ClusterSeed::with_convention(b, vars, Convention::Row)
    }

    pub fn with_convention(
        b: Vec<Vec<i64>>,
        vars: Vec<RationalFunction>,
        convention: Convention,
    ) -> Result<ClusterSeed> {
        let n = vars.len();
        if b.len() != n || b.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameters("B must be n x n".into()));
        }
        if skew_symmetrizer(&b).is_none() {
            return Err(Error::InvalidParameters(format!("{b:?} is not skew-symmetrizable")));
        }
        Ok(ClusterSeed { b, vars, convention })
    }

    /// Initial seed `(x_1, ..., x_n)` for `B`.
    pub fn initial(b: Vec<Vec<i64>>) -> Result<ClusterSeed> {
        let n = b.len();
        let vars = (0..n).map(|i| RationalFunction::var(n, i)).collect();
        ClusterSeed::new(b, vars)
    }

    /// The type `G_2` seed `B = [[0,-1],[3,0]]`.
    pub fn g2() -> ClusterSeed {
        ClusterSeed::initial(vec![vec![0, -1], vec![3, 0]]).expect("skew-symmetrizable")
    }

    pub fn a2() -> ClusterSeed {
        ClusterSeed::initial(vec![vec![0, 1], vec![-1, 0]]).expect("skew-symmetric")
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn vars(&self) -> &[RationalFunction] {
        &self.vars
    }

    pub fn rank(&self) -> usize {
        self.vars.len()
    }

    pub fn mutate(&self, k: usize) -> Result<ClusterSeed> {
        let n = self.rank();
        if k >= n {
            return Err(Error::InvalidParameters(format!("mutation index {k} out of range")));
        }
        let exponent = |i: usize| match self.convention {
            Convention::Row => self.b[k][i],
            Convention::Column => self.b[i][k],
        };
        let nv = self.vars[0].nvars();
        let mut plus = RationalFunction::constant(nv, 1);
        let mut minus = RationalFunction::constant(nv, 1);
        for i in 0..n {
            let e = exponent(i);
            if e > 0 {
                plus = plus.mul(&self.vars[i].pow(e as u32));
            } else if e < 0 {
                minus = minus.mul(&self.vars[i].pow((-e) as u32));
            }
        }
        let new = plus.add(&minus).div(&self.vars[k])?;
        let mut vars = self.vars.clone();
        vars[k] = new;
        Ok(ClusterSeed {
            b: mutate_matrix(&self.b, k),
            vars,
            convention: self.convention,
        })
    }

    /// The cluster as a set.
    pub fn cluster(&self) -> BTreeSet<RationalFunction> {
        self.vars.iter().cloned().collect()
    }
}

/// Matrix mutation `b'_ij = -b_ij` if `k` in `{i, j}`, else
/// `b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2`.
pub fn mutate_matrix(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == k || j == k {
                        -b[i][j]
                    } else {
                        b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
                    }
                })
                .collect()
        })
        .collect()
}

/// Positive integers `d` with `d_i b_ij = -d_j b_ji`, if any.
pub fn skew_symmetrizer(b: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = b.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].expect("visited");
            for j in 0..n {
                if i == j {
                    if b[i][i] != 0 {
                        return None;
                    }
                    continue;
                }
                match (b[i][j], b[j][i]) {
                    (0, 0) => {}
                    (x, y) if x.signum() == -y.signum() => {
                        let dj = di * Ratio::new(x, -y);
                        match d[j] {
                            None => {
                                d[j] = Some(dj);
                                queue.push_back(j);
                            }
                            Some(old) if old != dj => return None,
                            Some(_) => {}
                        }
                    }
                    _ => return None,
                }
            }
        }
    }
    let den = d
        .iter()
        .map(|x| *x.expect("all visited").denom())
        .fold(1i64, |a, b| a.lcm(&b));
    Some(d.iter().map(|x| (x.expect("visited") * den).to_integer()).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct ExchangePattern {
    /// Clusters as sorted variable lists.
    pub clusters: Vec<Vec<String>>,
    pub edges: Vec<(usize, usize)>,
    pub variables: Vec<String>,
}

/// Clusters found by [`explore`] with the mutation edges between them.
pub type Closure = (Vec<BTreeSet<RationalFunction>>, Vec<(usize, usize)>);

/// Breadth-first closure under all mutations; clusters are compared as
/// sets of variables.
pub fn explore(seed: &ClusterSeed) -> Result<Closure> {
    let mut index: BTreeMap<BTreeSet<RationalFunction>, usize> = BTreeMap::new();
    let mut clusters = vec![seed.cluster()];
    index.insert(seed.cluster(), 0);
    let mut edges = BTreeSet::new();
    let mut queue = VecDeque::from([(seed.clone(), 0usize)]);
    while let Some((s, a)) = queue.pop_front() {
        for k in 0..s.rank() {
            let t = s.mutate(k)?;
            let c = t.cluster();
            let b = match index.get(&c) {
                Some(&b) => b,
                None => {
                    if clusters.len() >= SEED_CAP {
                        return Err(Error::NonTerminating(SEED_CAP));
                    }
                    let b = clusters.len();
                    index.insert(c.clone(), b);
                    clusters.push(c);
                    queue.push_back((t, b));
                    b
                }
            };
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    Ok((clusters, edges.into_iter().collect()))
}

pub fn enumerate_variables(seed: &ClusterSeed) -> Result<BTreeSet<RationalFunction>> {
    let (clusters, _) = explore(seed)?;
    Ok(clusters.into_iter().flatten().collect())
}

pub fn exchange_pattern(seed: &ClusterSeed) -> Result<ExchangePattern> {
    let (clusters, edges) = explore(seed)?;
    let variables: BTreeSet<RationalFunction> = clusters.iter().flatten().cloned().collect();
    Ok(ExchangePattern {
        clusters: clusters
            .iter()
            .map(|c| c.iter().map(|v| v.to_string()).collect())
            .collect(),
        edges,
        variables: variables.iter().map(|v| v.to_string()).collect(),
    })
}

pub fn laurent_check(v: &RationalFunction) -> bool {
    v.is_laurent()
}
