//! Finite-dimensional unital associative ℚ-algebras given by structure constants.
//!
//! An [`Algebra`] of dimension `d` fixes a basis `e_0 … e_{d-1}` and the
//! products `e_i e_j = Σ_k c[i][j][k] e_k`. Construction validates
//! associativity on every basis triple and both unit laws, so every
//! `Algebra` value is a genuine unital associative algebra.
//!
//! In finite dimension the spectrum of an element is the root set of its
//! minimal polynomial. An element is therefore quasinilpotent exactly when
//! its minimal polynomial is a power of `x`, i.e. when it is nilpotent. The
//! rest of the crate relies on this identification for every
//! quasinilpotency statement.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, Vector};
use crate::poly::Polynomial;
use crate::radical::RadicalBasis;
use crate::rational::{self, Rational};

/// Placement of basis elements inside a `k × k` matrix, for algebras whose
/// basis consists of matrix units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixLayout {
    pub order: usize,
    /// `(row, col)` of the matrix unit for each basis element.
    pub positions: Vec<(usize, usize)>,
}

pub struct Algebra {
    dim: usize,
    table: Vec<Rational>,
    products: Vec<Vec<(usize, Rational)>>,
    unit: Vector,
    name: Option<String>,
    layout: Option<MatrixLayout>,
    pub(crate) radical: OnceLock<RadicalBasis>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("dim", &self.dim)
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

/// Full matrix algebra `M_k(ℚ)` with the matrix units `e_{ij}` as basis
/// (row-major order).
pub fn matrix_algebra(k: usize) -> Result<Arc<Algebra>> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    let positions = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    from_matrix_units(k, positions, format!("M{k}"))
}

/// Upper-triangular matrices `T_k(ℚ)`, basis `e_{ij}` with `i <= j` in row-major order.
pub fn upper_triangular_algebra(k: usize) -> Result<Arc<Algebra>> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    let positions = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    from_matrix_units(k, positions, format!("T{k}"))
}

/// Dual numbers `ℚ[ε]/(ε²)` with basis `(1, ε)`.
pub fn dual_numbers() -> Arc<Algebra> {
    let i = rational::int;
    let table = vec![
        vec![vec![i(1), i(0)], vec![i(0), i(1)]],
        vec![vec![i(0), i(1)], vec![i(0), i(0)]],
    ];
    let alg = structure_algebra(2, table, vec![i(1), i(0)]).expect("dual numbers are valid");
    rename(alg, "dual")
}

/// Replaces the display name of a freshly built algebra.
///
/// Panics if `alg` is already shared.
pub fn rename(alg: Arc<Algebra>, name: &str) -> Arc<Algebra> {
    let mut alg = Arc::try_unwrap(alg).expect("fresh algebra is uniquely owned");
    alg.name = Some(name.to_string());
    Arc::new(alg)
}

fn from_matrix_units(
    k: usize,
    positions: Vec<(usize, usize)>,
    name: String,
) -> Result<Arc<Algebra>> {
    let d = positions.len();
    let index_of = |r: usize, c: usize| positions.iter().position(|&p| p == (r, c));
    let mut table = vec![vec![vec![rational::zero(); d]; d]; d];
    for (a, &(i, j)) in positions.iter().enumerate() {
        for (b, &(l, m)) in positions.iter().enumerate() {
            if j == l {
                let target = index_of(i, m).ok_or_else(|| {
                    Error::Shape(format!("matrix units not closed: e{i}{j} e{l}{m}"))
                })?;
                table[a][b][target] = rational::one();
            }
        }
    }
    let mut unit = vec![rational::zero(); d];
    for r in 0..k {
        let idx = index_of(r, r).ok_or_else(|| Error::Shape("missing diagonal unit".into()))?;
        unit[idx] = rational::one();
    }
    let mut alg = build(d, table, unit)?;
    alg.layout = Some(MatrixLayout {
        order: k,
        positions,
    });
    alg.name = Some(name);
    Ok(Arc::new(alg))
}

/// Algebra from an explicit structure-constant table `table[i][j][k]` and
/// unit coordinates; fails unless the table is associative and the unit is
/// a two-sided identity.
pub fn structure_algebra(
    dim: usize,
    table: Vec<Vec<Vec<Rational>>>,
    unit: Vec<Rational>,
) -> Result<Arc<Algebra>> {
    Ok(Arc::new(build(dim, table, unit)?))
}

fn build(dim: usize, table: Vec<Vec<Vec<Rational>>>, unit: Vec<Rational>) -> Result<Algebra> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if table.len() != dim {
        return Err(Error::Shape(format!(
            "table has {} rows, expected {dim}",
            table.len()
        )));
    }
    if unit.len() != dim {
        return Err(Error::Shape(format!(
            "unit has {} coordinates, expected {dim}",
            unit.len()
        )));
    }
    let mut flat = Vec::with_capacity(dim * dim * dim);
    for (i, row) in table.into_iter().enumerate() {
        if row.len() != dim {
            return Err(Error::Shape(format!(
                "table[{i}] has {} entries, expected {dim}",
                row.len()
            )));
        }
        for (j, entry) in row.into_iter().enumerate() {
            if entry.len() != dim {
                return Err(Error::Shape(format!(
                    "table[{i}][{j}] has {} entries, expected {dim}",
                    entry.len()
                )));
            }
            flat.extend(entry);
        }
    }
    let products = (0..dim * dim)
        .map(|ij| {
            flat[ij * dim..(ij + 1) * dim]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect()
        })
        .collect();
    let alg = Algebra {
        dim,
        table: flat,
        products,
        unit,
        name: None,
        layout: None,
        radical: OnceLock::new(),
    };
    alg.validate()?;
    Ok(alg)
}

impl Algebra {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn layout(&self) -> Option<&MatrixLayout> {
        self.layout.as_ref()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn unit_coords(&self) -> &[Rational] {
        &self.unit
    }

    /// Checks associativity on every basis triple and the two unit laws.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.mul_coords(&ij, &self.basis_vec(k));
                    let jk = self.basis_product(j, k);
                    let right = self.mul_coords(&self.basis_vec(i), &jk);
                    if left != right {
                        return Err(Error::Associativity(i, j, k));
                    }
                }
            }
        }
        for i in 0..d {
            let e = self.basis_vec(i);
            if self.mul_coords(&self.unit, &e) != e {
                return Err(Error::UnitLaw {
                    side: "left",
                    index: i,
                });
            }
            if self.mul_coords(&e, &self.unit) != e {
                return Err(Error::UnitLaw {
                    side: "right",
                    index: i,
                });
            }
        }
        Ok(())
    }

    fn basis_vec(&self, i: usize) -> Vector {
        let mut v = vec![rational::zero(); self.dim];
        v[i] = rational::one();
        v
    }

    fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut v = vec![rational::zero(); self.dim];
        for (k, c) in &self.products[i * self.dim + j] {
            v[*k] = c.clone();
        }
        v
    }

    pub(crate) fn mul_coords(&self, a: &[Rational], b: &[Rational]) -> Vector {
        let d = self.dim;
        let mut out = vec![rational::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let terms = &self.products[i * d + j];
                if terms.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in terms {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Rational>) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::Shape(format!(
                "element has {} coordinates, algebra has dimension {}",
                coords.len(),
                self.dim
            )));
        }
        Ok(Element {
            alg: Arc::clone(self),
            coords,
        })
    }

    pub fn element_from_ints(self: &Arc<Self>, coords: &[i64]) -> Result<Element> {
        self.element(coords.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero(self: &Arc<Self>) -> Element {
        Element {
            alg: Arc::clone(self),
            coords: vec![rational::zero(); self.dim],
        }
    }

    pub fn one(self: &Arc<Self>) -> Element {
        Element {
            alg: Arc::clone(self),
            coords: self.unit.clone(),
        }
    }

    pub fn scalar(self: &Arc<Self>, c: &Rational) -> Element {
        self.one().scale(c)
    }

    pub fn basis(self: &Arc<Self>, i: usize) -> Element {
        Element {
            alg: Arc::clone(self),
            coords: self.basis_vec(i),
        }
    }

    pub fn basis_elements(self: &Arc<Self>) -> Vec<Element> {
        (0..self.dim).map(|i| self.basis(i)).collect()
    }

    /// Element with the given matrix entries; only for matrix-unit algebras.
    /// Entries outside the layout must be zero.
    pub fn from_matrix(self: &Arc<Self>, rows: &[Vec<Rational>]) -> Result<Element> {
        let layout = self
            .layout
            .as_ref()
            .ok_or_else(|| Error::Shape("algebra has no matrix layout".into()))?;
        let k = layout.order;
        if rows.len() != k || rows.iter().any(|r| r.len() != k) {
            return Err(Error::Shape(format!("expected a {k}x{k} matrix")));
        }
        let mut coords = vec![rational::zero(); self.dim];
        for (r, row) in rows.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                match layout.positions.iter().position(|&p| p == (r, c)) {
                    Some(idx) => coords[idx] = x.clone(),
                    None if x.is_zero() => {}
                    None => {
                        return Err(Error::Shape(format!(
                            "entry ({r}, {c}) is outside the algebra's matrix pattern"
                        )))
                    }
                }
            }
        }
        self.element(coords)
    }

    pub fn from_int_matrix(self: &Arc<Self>, rows: &[&[i64]]) -> Result<Element> {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rational::int(x)).collect())
            .collect();
        self.from_matrix(&rows)
    }

    /// Matrix unit `e_{ij}` (0-based); only for matrix-unit algebras.
    pub fn matrix_unit(self: &Arc<Self>, i: usize, j: usize) -> Result<Element> {
        let layout = self
            .layout
            .as_ref()
            .ok_or_else(|| Error::Shape("algebra has no matrix layout".into()))?;
        let idx = layout
            .positions
            .iter()
            .position(|&p| p == (i, j))
            .ok_or_else(|| Error::Shape(format!("no matrix unit e{i}{j} in this algebra")))?;
        Ok(self.basis(idx))
    }

    pub fn same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
        Arc::ptr_eq(a, b)
    }
}

/// A member of an algebra, by its coordinates in the algebra's basis.
#[derive(Clone)]
pub struct Element {
    alg: Arc<Algebra>,
    coords: Vector,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) && self.coords == other.coords
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(rows) = self.to_matrix() {
            let rows: Vec<String> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                })
                .collect();
            write!(f, "[[{}]]", rows.join("], ["))
        } else {
            let cs: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", cs.join(", "))
        }
    }
}

impl Element {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vector {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords == self.alg.unit
    }

    pub fn same_algebra(&self, other: &Element) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg)
    }

    fn check(&self, other: &Element) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn with(&self, coords: Vector) -> Element {
        Element {
            alg: Arc::clone(&self.alg),
            coords,
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        Ok(self.with(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        Ok(self.with(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        Ok(self.with(self.alg.mul_coords(&self.coords, &other.coords)))
    }

    pub fn scale(&self, c: &Rational) -> Element {
        self.with(self.coords.iter().map(|x| x * c).collect())
    }

    pub fn scale_int(&self, c: i64) -> Element {
        self.scale(&rational::int(c))
    }

    /// `self^m`, with `self^0 = 1`.
    pub fn pow(&self, m: u32) -> Element {
        let mut result = self.alg.one();
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &Polynomial) -> Element {
        let one = self.alg.one();
        p.coeffs()
            .iter()
            .rev()
            .fold(self.alg.zero(), |acc, c| &(&acc * self) + &one.scale(c))
    }

    pub fn commutes_with(&self, other: &Element) -> bool {
        (self * other) == (other * self)
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    /// Matrix of `x ↦ self·x` in the algebra basis (`m[i][j]` is the `e_i`
    /// coordinate of `self·e_j`).
    pub fn left_regular(&self) -> Vec<Vector> {
        let cols: Vec<Vector> = (0..self.alg.dim)
            .map(|j| self.alg.mul_coords(&self.coords, &self.alg.basis_vec(j)))
            .collect();
        linalg::transpose(&cols, self.alg.dim)
    }

    /// Matrix of `x ↦ x·self`.
    pub fn right_regular(&self) -> Vec<Vector> {
        let cols: Vec<Vector> = (0..self.alg.dim)
            .map(|j| self.alg.mul_coords(&self.alg.basis_vec(j), &self.coords))
            .collect();
        linalg::transpose(&cols, self.alg.dim)
    }

    /// Least-degree monic `m` with `m(self) = 0`, read off the first linear
    /// dependency in the Krylov sequence `1, a, a², …`.
    pub fn minimal_polynomial(&self) -> Polynomial {
        let d = self.alg.dim;
        // Each row keeps its reduced vector together with the combination of
        // powers that produced it.
        let mut rows: Vec<(Vector, usize, Vector)> = Vec::new();
        let mut power = self.alg.unit.clone();
        for k in 0..=d {
            let mut v = power.clone();
            let mut comb = vec![rational::zero(); k + 1];
            comb[k] = rational::one();
            for (row, pivot, rcomb) in &rows {
                if v[*pivot].is_zero() {
                    continue;
                }
                let f = &v[*pivot] / &row[*pivot];
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
                for (x, y) in comb.iter_mut().zip(rcomb) {
                    *x -= &f * y;
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => return Polynomial::new(comb),
                Some(p) => rows.push((v, p, comb)),
            }
            power = self.alg.mul_coords(&power, &self.coords);
        }
        unreachable!("Krylov sequence of length d+1 is always dependent")
    }

    /// Basis of `Comm(self) = { x : x·self = self·x }`.
    pub fn commutant_basis(&self) -> Vec<Element> {
        let d = self.alg.dim;
        let cols: Vec<Vector> = (0..d)
            .map(|j| {
                let e = self.alg.basis_vec(j);
                let ax = self.alg.mul_coords(&self.coords, &e);
                let xa = self.alg.mul_coords(&e, &self.coords);
                ax.into_iter().zip(xa).map(|(p, q)| p - q).collect()
            })
            .collect();
        let rows = linalg::transpose(&cols, d);
        linalg::nullspace(&rows, d)
            .into_iter()
            .map(|v| self.with(v))
            .collect()
    }

    /// True when `self` commutes with everything that commutes with `a`.
    pub fn in_double_commutant(&self, a: &Element) -> bool {
        assert!(
            self.same_algebra(a),
            "elements belong to different algebras"
        );
        a.commutant_basis().iter().all(|y| self.commutes_with(y))
    }

    /// True when `self` lies in the span of `others`.
    pub fn in_span(&self, others: &[Element]) -> bool {
        let e = Echelon::from_vectors(self.alg.dim, others.iter().map(|o| &o.coords));
        e.contains(&self.coords)
    }

    pub fn trace(&self) -> Rational {
        self.left_regular()
            .iter()
            .enumerate()
            .fold(rational::zero(), |acc, (i, row)| acc + &row[i])
    }

    /// Matrix entries, when the algebra carries a matrix layout.
    pub fn to_matrix(&self) -> Option<Vec<Vector>> {
        let layout = self.alg.layout.as_ref()?;
        let k = layout.order;
        let mut m = vec![vec![rational::zero(); k]; k];
        for (x, &(r, c)) in self.coords.iter().zip(&layout.positions) {
            m[r][c] = x.clone();
        }
        Some(m)
    }

    pub fn is_unit_scalar_multiple(&self) -> bool {
        let u = &self.alg.unit;
        match u.iter().position(|x| !x.is_zero()) {
            None => self.is_zero(),
            Some(p) => {
                let f = &self.coords[p] / &u[p];
                self.coords.iter().zip(u).all(|(x, y)| x == &(&f * y))
            }
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&Element> for &Element {
            type Output = Element;
            fn $m(self, rhs: &Element) -> Element {
                self.$checked(rhs)
                    .expect("elements belong to different algebras")
            }
        }
        impl $tr<Element> for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Element> for Element {
            type Output = Element;
            fn $m(self, rhs: &Element) -> Element {
                (&self).$m(rhs)
            }
        }
        impl $tr<Element> for &Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.with(self.coords.iter().map(|x| -x).collect())
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// `x ∈ span(basis)` as an exact test on coordinate vectors.
pub fn span_contains(dim: usize, basis: &[Vector], x: &[Rational]) -> bool {
    Echelon::from_vectors(dim, basis).contains(&x.to_vec())
}
