//! Fractional Calabi-Yau dimensions of orbit categories.
//!
//! For an orbit category with `S^(e1) = Sigma^(d1)` and `F` acting like
//! `S^(e2) Sigma^(-d2)`, the pairs `(d, e)` with `S^e = Sigma^d` contain the
//! lattice `L = Z(d1, e1) + Z(d2, e2)` when two parity conditions hold, and
//! `2L` otherwise. Hom-finiteness is `e1 d2 - e2 d1 != 0`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Pair = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomFinite {
    /// `e1 d2 - e2 d1`.
    #[serde(rename = "D")]
    pub d_prime: i64,
    pub hom_finite: bool,
}

pub fn hom_finite(g1: Pair, g2: Pair) -> HomFinite {
    let d_prime = g1.1 * g2.0 - g2.1 * g1.0;
    HomFinite {
        d_prime,
        hom_finite: d_prime != 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Certified {
    L,
    #[serde(rename = "2L")]
    TwoL,
}

impl Certified {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certified::L => "L",
            Certified::TwoL => "2L",
        }
    }
}

/// A row of the Hermite normal form together with its expression in the
/// generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Row {
    v: (i128, i128),
    coeffs: (i128, i128),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyLattice {
    pub g1: Pair,
    pub g2: Pair,
    /// Hermite normal form rows (upper triangular, positive pivots).
    pub hnf: Vec<Pair>,
    /// `d1 e2 - d2 e1`.
    pub det: i64,
    /// `d2` even or `e2` odd.
    pub parity_first: bool,
    /// `d1 - d2` even or `e1 - e2` odd.
    pub parity_second: bool,
    pub certified: Certified,
    rows: Vec<Row>,
}

fn hnf_rows(g1: Pair, g2: Pair) -> Vec<Row> {
    let mut rows = vec![
        Row {
            v: (g1.0 as i128, g1.1 as i128),
            coeffs: (1, 0),
        },
        Row {
            v: (g2.0 as i128, g2.1 as i128),
            coeffs: (0, 1),
        },
    ];
    let mut out = Vec::new();
    for col in 0..2 {
        let get = |r: &Row| if col == 0 { r.v.0 } else { r.v.1 };
        // Euclid on the rows with a nonzero entry in this column.
        loop {
            let mut nz: Vec<usize> = (0..rows.len()).filter(|&i| get(&rows[i]) != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&i| get(&rows[i]).abs());
            let p = nz[0];
            let pv = get(&rows[p]);
            for &i in &nz[1..] {
                let q = Integer::div_floor(&get(&rows[i]), &pv);
                let (pr, ir) = (rows[p], rows[i]);
                rows[i] = Row {
                    v: (ir.v.0 - q * pr.v.0, ir.v.1 - q * pr.v.1),
                    coeffs: (ir.coeffs.0 - q * pr.coeffs.0, ir.coeffs.1 - q * pr.coeffs.1),
                };
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| get(&rows[i]) != 0) {
            let mut r = rows.remove(i);
            if get(&r) < 0 {
                r = Row {
                    v: (-r.v.0, -r.v.1),
                    coeffs: (-r.coeffs.0, -r.coeffs.1),
                };
            }
            out.push(r);
        }
    }
    // reduce the entry above the second pivot
    if out.len() == 2 && out[0].v.0 != 0 && out[1].v.0 == 0 {
        let c = out[1].v.1;
        let q = Integer::div_floor(&out[0].v.1, &c);
        let (a, b) = (out[0], out[1]);
        out[0] = Row {
            v: (a.v.0 - q * b.v.0, a.v.1 - q * b.v.1),
            coeffs: (a.coeffs.0 - q * b.coeffs.0, a.coeffs.1 - q * b.coeffs.1),
        };
    }
    out
}

/// Certified `(d, e)`: the lattice with its parity verdict.
pub fn cy_dimensions(g1: Pair, g2: Pair) -> Result<CyLattice> {
    if !hom_finite(g1, g2).hom_finite {
        return Err(Error::NotHomFinite);
    }
    Ok(lattice(g1, g2))
}

/// The lattice without the Hom-finiteness requirement.
pub fn lattice(g1: Pair, g2: Pair) -> CyLattice {
    let rows = hnf_rows(g1, g2);
    let parity_first = g2.0 % 2 == 0 || g2.1 % 2 != 0;
    let parity_second = (g1.0 - g2.0) % 2 == 0 || (g1.1 - g2.1) % 2 != 0;
    CyLattice {
        g1,
        g2,
        hnf: rows.iter().map(|r| (r.v.0 as i64, r.v.1 as i64)).collect(),
        det: g1.0 * g2.1 - g2.0 * g1.1,
        parity_first,
        parity_second,
        certified: if parity_first && parity_second {
            Certified::L
        } else {
            Certified::TwoL
        },
        rows,
    }
}

/// Outcome of a membership query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    /// `(a, b)` with `a (d1, e1) + b (d2, e2) = (d, e)`.
    pub coeffs: Option<Pair>,
}

impl CyLattice {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Membership in `L` via the Hermite normal form.
    pub fn member(&self, v: Pair) -> Membership {
        let mut rest = (v.0 as i128, v.1 as i128);
        let mut coeffs = (0i128, 0i128);
        for r in &self.rows {
            let (pivot_col, pv) = if r.v.0 != 0 { (0, r.v.0) } else { (1, r.v.1) };
            let x = if pivot_col == 0 { rest.0 } else { rest.1 };
            if x % pv != 0 {
                return Membership {
                    member: false,
                    coeffs: None,
                };
            }
            let k = x / pv;
            rest = (rest.0 - k * r.v.0, rest.1 - k * r.v.1);
            coeffs = (coeffs.0 + k * r.coeffs.0, coeffs.1 + k * r.coeffs.1);
        }
        if rest != (0, 0) {
            return Membership {
                member: false,
                coeffs: None,
            };
        }
        Membership {
            member: true,
            coeffs: Some((coeffs.0 as i64, coeffs.1 as i64)),
        }
    }

    /// Membership in the certified set (`L` or `2L`).
    pub fn certified_member(&self, v: Pair) -> Membership {
        match self.certified {
            Certified::L => self.member(v),
            Certified::TwoL => {
                if v.0 % 2 != 0 || v.1 % 2 != 0 {
                    return Membership {
                        member: false,
                        coeffs: None,
                    };
                }
                let m = self.member((v.0 / 2, v.1 / 2));
                Membership {
                    member: m.member,
                    coeffs: m.coeffs.map(|(a, b)| (2 * a, 2 * b)),
                }
            }
        }
    }

    /// Smallest positive `n` with `(n r, n)` certified, returned as
    /// `(n r, n)`; `r = p / q`.
    pub fn solve_ratio(&self, p: i64, q: i64) -> Result<Pair> {
        if self.rank() < 2 || self.det == 0 {
            return Err(Error::InvalidParameters("lattice has rank < 2".to_string()));
        }
        if q == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = p.gcd(&q);
        let (p, q) = if q < 0 { (-p / g, -q / g) } else { (p / g, q / g) };
        let (d1, e1) = self.g1;
        let (d2, e2) = self.g2;
        let modulus = match self.certified {
            Certified::L => self.det.abs(),
            Certified::TwoL => 2 * self.det.abs(),
        };
        // coefficients of k (p, q) are k A / D and k B / D
        let a = p * e2 - q * d2;
        let b = d1 * q - e1 * p;
        let k = (modulus / modulus.gcd(&a)).lcm(&(modulus / modulus.gcd(&b)));
        Ok((k * p, k * q))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DynkinCy {
    pub d: i64,
    pub e: i64,
    /// Values not taken from the reference data (types A, E6, E7).
    pub extension: bool,
}

/// `(d1, e1)` with `S^(e1) = Sigma^(d1)` in the derived category of a
/// Dynkin quiver.
pub fn dynkin_cy_data(diagram: &str) -> Result<DynkinCy> {
    let bad = || Error::UnsupportedDiagram(diagram.to_string());
    let t = diagram.trim();
    let (kind, n) = t.split_at(1.min(t.len()));
    let n: i64 = n.parse().map_err(|_| bad())?;
    let out = match (kind, n) {
        ("A", n) if n >= 1 => DynkinCy {
            d: n - 1,
            e: n + 1,
            extension: true,
        },
        ("D", n) if n >= 4 && n % 2 == 0 => DynkinCy {
            d: n - 2,
            e: n - 1,
            extension: false,
        },
        ("D", n) if n >= 4 => DynkinCy {
            d: 2 * n - 4,
            e: 2 * n - 2,
            extension: false,
        },
        ("E", 6) => DynkinCy {
            d: 10,
            e: 12,
            extension: true,
        },
        ("E", 7) => DynkinCy {
            d: 8,
            e: 9,
            extension: true,
        },
        ("E", 8) => DynkinCy {
            d: 14,
            e: 15,
            extension: false,
        },
        _ => return Err(bad()),
    };
    Ok(out)
}
