//! Exact dense linear algebra over [`Field`]: reduced row echelon forms,
//! kernels, and linear systems.

use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += c * x`.
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = &*yi + &(c * xi);
        }
    }
}

/// A subspace of `field^width` kept in reduced row echelon form. Pivots are
/// the leftmost nonzero coordinate of each row.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    width: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Field, width: usize) -> Self {
        Echelon {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = Vector>>(field: Field, width: usize, rows: I) -> Self {
        let mut e = Echelon::new(field, width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot, in increasing order. They index a basis of
    /// the quotient `field^width / self`.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `v` modulo the subspace; the result vanishes on every pivot.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -v[p].clone();
                axpy(&mut v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(row, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    /// Coordinates of `v` in the quotient basis given by [`Self::free_columns`].
    pub fn quotient_coordinates(&self, v: &[Scalar]) -> Vector {
        let r = self.reduce(v);
        self.free_columns().into_iter().map(|c| r[c].clone()).collect()
    }

    /// Expresses `v` (assumed to lie in the subspace) in terms of the rows.
    pub fn row_coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

pub fn rank(field: Field, width: usize, rows: &[Vector]) -> usize {
    Echelon::from_rows(field, width, rows.iter().cloned()).rank()
}

/// Basis of `{x : A x = 0}` for `A` given by rows of length `width`.
pub fn kernel(field: Field, width: usize, rows: &[Vector]) -> Vec<Vector> {
    let e = Echelon::from_rows(field, width, rows.iter().cloned());
    let mut basis = Vec::new();
    for f in e.free_columns() {
        let mut x = zero_vector(field, width);
        x[f] = field.one();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            if !row[f].is_zero() {
                x[p] = -row[f].clone();
            }
        }
        basis.push(x);
    }
    basis
}

/// Solves `sum_j x_j * columns[j] = target`, returning one solution.
pub fn solve_columns(field: Field, columns: &[Vector], target: &[Scalar]) -> Option<Vector> {
    let n = columns.len();
    let m = target.len();
    // Augmented rows [A | b]; consistent iff the pivot never lands in the last column.
    let rows: Vec<Vector> = (0..m)
        .map(|i| {
            let mut r: Vector = columns.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let e = Echelon::from_rows(field, n + 1, rows);
    if e.pivots.contains(&n) {
        return None;
    }
    let mut x = zero_vector(field, n);
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}
