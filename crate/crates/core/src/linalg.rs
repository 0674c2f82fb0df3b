//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::rational::Rational;

pub type Vector = Vec<Rational>;

/// An incrementally built reduced row-echelon basis of a subspace of ℚ^len.
///
/// Every stored row has a leading 1 at its pivot column and zeros in the
/// pivot columns of all other rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Echelon {
    len: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<'a>(len: usize, vectors: impl IntoIterator<Item = &'a Vector>) -> Self {
        let mut e = Echelon::new(len);
        for v in vectors {
            e.insert(v.clone());
        }
        e
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

    /// Residual of `v` after elimination against the stored rows.
    pub fn reduce(&self, mut v: Vector) -> Vector {
        debug_assert_eq!(v.len(), self.len);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                axpy(&mut v, &f, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v.clone()).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the stored rows, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Rational::zero(); self.len];
        for (c, row) in coords.iter().zip(&self.rows) {
            for (r, x) in rebuilt.iter_mut().zip(row) {
                *r += c * x;
            }
        }
        (&rebuilt == v).then_some(coords)
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                axpy(row, &f, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

/// `v -= f * w`
fn axpy(v: &mut [Rational], f: &Rational, w: &[Rational]) {
    for (x, y) in v.iter_mut().zip(w) {
        if !y.is_zero() {
            *x -= f * y;
        }
    }
}

/// Basis of `{ x : m x = 0 }` for a matrix given as rows of length `cols`.
pub fn nullspace(rows: &[Vector], cols: usize) -> Vec<Vector> {
    let e = Echelon::from_vectors(cols, rows);
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); cols];
            x[f] = crate::rational::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

pub fn rank(rows: &[Vector], cols: usize) -> usize {
    Echelon::from_vectors(cols, rows).rank()
}

pub fn transpose(rows: &[Vector], cols: usize) -> Vec<Vector> {
    (0..cols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect()
}

pub fn mat_vec(rows: &[Vector], v: &[Rational]) -> Vector {
    rows.iter()
        .map(|r| {
            r.iter()
                .zip(v)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}
