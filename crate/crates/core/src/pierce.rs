//! Pierce decompositions relative to an idempotent, and corner algebras.
//!
//! For an idempotent `p` and `q = 1 - p`, every `y` splits uniquely as
//! `pyp + pyq + qyp + qyq`. Blocks are written as 2×2 arrays over `(p, q)`:
//! `[[pyp, pyq], [qyp, qyq]]`. The corner `pAp` is a unital algebra in its
//! own right with unit `p`; [`Corner`] realizes it as a standalone
//! [`Algebra`] together with the embedding into the parent.

use std::sync::Arc;

use crate::algebra::{structure_algebra, Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Vector};
use crate::report::{Mode, TheoremReport};
use crate::strong::{is_strong_invertible, StrongKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PierceBlocks {
    pub p: Element,
    /// `[[pyp, py(1-p)], [(1-p)yp, (1-p)y(1-p)]]`
    pub blocks: [[Element; 2]; 2],
}

impl PierceBlocks {
    pub fn reassemble(&self) -> Element {
        let [[b11, b12], [b21, b22]] = &self.blocks;
        &(b11 + b12) + &(b21 + b22)
    }

    /// Each block `b_ij` satisfies `e_i b_ij e_j = b_ij` with `e_1 = p`, `e_2 = 1 - p`.
    pub fn corners_absorb(&self) -> bool {
        let q = &self.p.algebra().one() - &self.p;
        let e = [&self.p, &q];
        (0..2).all(|i| (0..2).all(|j| &(e[i] * &self.blocks[i][j]) * e[j] == self.blocks[i][j]))
    }
}

pub fn pierce(y: &Element, p: &Element) -> Result<PierceBlocks> {
    if !y.same_algebra(p) {
        return Err(Error::AlgebraMismatch);
    }
    if !p.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let q = &p.algebra().one() - p;
    let (yp, yq) = (y * p, y * &q);
    Ok(PierceBlocks {
        p: p.clone(),
        blocks: [[p * &yp, p * &yq], [&q * &yp, &q * &yq]],
    })
}

/// Builds `x` from its four Pierce blocks relative to `p`. The blocks are
/// trusted to lie in their corners.
pub fn assemble(blocks: [[&Element; 2]; 2]) -> Element {
    &(blocks[0][0] + blocks[0][1]) + &(blocks[1][0] + blocks[1][1])
}

/// The corner algebra `pAp` of a nonzero idempotent `p`.
#[derive(Debug, Clone)]
pub struct Corner {
    algebra: Arc<Algebra>,
    p: Element,
    basis: Echelon,
}

impl Corner {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        self.p.algebra()
    }

    pub fn idempotent(&self) -> &Element {
        &self.p
    }

    /// Basis of `pAp` in parent coordinates.
    pub fn basis(&self) -> &[Vector] {
        self.basis.rows()
    }

    pub fn embed(&self, z: &Element) -> Result<Element> {
        if !Algebra::same(z.algebra(), &self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let mut acc = self.p.algebra().zero();
        for (c, b) in z.coords().iter().zip(self.basis.rows()) {
            acc = &acc + &self.p.algebra().element(b.clone())?.scale(c);
        }
        Ok(acc)
    }

    /// Coordinates of a parent element lying in `pAp`.
    pub fn project(&self, y: &Element) -> Result<Element> {
        if !Algebra::same(y.algebra(), self.p.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let coords = self
            .basis
            .coordinates(&y.coords().to_vec())
            .ok_or_else(|| Error::Shape(format!("{y} does not lie in the corner of {}", self.p)))?;
        self.algebra.element(coords)
    }

    /// `pyp`, read in the corner.
    pub fn compress(&self, y: &Element) -> Result<Element> {
        self.project(&(&(&self.p * y) * &self.p))
    }
}

pub fn corner_algebra(p: &Element) -> Result<Corner> {
    if !p.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    if p.is_zero() {
        return Err(Error::ZeroCorner);
    }
    let alg = p.algebra();
    let spanning: Vec<Vector> = alg
        .basis_elements()
        .iter()
        .map(|e| (&(p * e) * p).into_coords())
        .collect();
    let basis = Echelon::from_vectors(alg.dim(), &spanning);
    let members: Vec<Element> = basis
        .rows()
        .iter()
        .map(|v| alg.element(v.clone()).expect("corner vector"))
        .collect();
    let coords = |y: &Element| {
        basis.coordinates(&y.coords().to_vec()).ok_or_else(|| {
            Error::Inconsistent(format!("corner of {p} not closed under multiplication"))
        })
    };
    let table = members
        .iter()
        .map(|bi| {
            members
                .iter()
                .map(|bj| coords(&(bi * bj)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let unit = coords(p)?;
    let corner = structure_algebra(basis.rank(), table, unit)?;
    let name = match alg.name() {
        Some(n) => format!("corner of {n}"),
        None => "corner".to_string(),
    };
    Ok(Corner {
        algebra: crate::algebra::rename(corner, &name),
        p: p.clone(),
        basis,
    })
}

/// Checks the transfer of strong invertibility through a block-triangular
/// element built from corner pieces `a ∈ pAp`, `b ∈ (1-p)A(1-p)` and an
/// off-diagonal part taken from `c`. All three are given as members of the
/// parent algebra; `a` and `b` must already lie in their corners.
///
/// GNS assembles `x = [[a, 0], [(1-p)cp, b]]` and checks
/// `a, b strong ⇒ x strong` and `x, b strong ⇒ a strong`. PNS assembles
/// `x = [[a, pc(1-p)], [0, b]]` and checks `a, b strong ⇒ x strong` and
/// `x strong ⇒ a, b strong`. The same element read relative to `(1-p, p)`
/// has its blocks transposed, so both representations are covered by the
/// `(p, 1-p)` form. The corner predicates are evaluated inside the corner
/// algebras.
pub fn check_triangular_transfer(
    p: &Element,
    a: &Element,
    b: &Element,
    c: &Element,
    n: u32,
    mode: Mode,
) -> Result<TheoremReport> {
    let kind = StrongKind::new(mode, n)?;
    if !(p.same_algebra(a) && p.same_algebra(b) && p.same_algebra(c)) {
        return Err(Error::AlgebraMismatch);
    }
    let q = &p.algebra().one() - p;
    let upper = corner_algebra(p)?;
    let a_corner = upper.project(a)?;
    // an empty complement corner only holds 0, which is trivially strong
    let b_strong = if q.is_zero() {
        if !b.is_zero() {
            return Err(Error::ZeroCorner);
        }
        true
    } else {
        let lower = corner_algebra(&q)?;
        is_strong_invertible(&lower.project(b)?, kind)
    };
    let a_strong = is_strong_invertible(&a_corner, kind);
    let off = match mode {
        Mode::Gns => &(&q * c) * p,
        Mode::Pns => &(p * c) * &q,
    };
    let x = &(a + &off) + b;
    let x_strong = is_strong_invertible(&x, kind);

    let mut r = TheoremReport::new("TRIANGULAR_TRANSFER", mode, n);
    r.observe("a_strong_in_corner", a_strong);
    r.observe("b_strong_in_corner", b_strong);
    r.observe("x_strong", x_strong);
    r.implication("a_and_b_imply_x", a_strong && b_strong, || x_strong);
    match mode {
        Mode::Gns => r.implication("x_and_b_imply_a", x_strong && b_strong, || a_strong),
        Mode::Pns => r.implication("x_implies_a_and_b", x_strong, || a_strong && b_strong),
    }
    // the (1-p, p) reading of x must reassemble to the same element
    let swapped = pierce(&x, &q)?;
    r.observe("swapped_representation_agrees", swapped.reassemble() == x);
    Ok(r.finish())
}
