//! Nilpotency, inverses, the Drazin inverse and the spectral idempotent.
//!
//! Everything here is computed inside the commutative subalgebra `ℚ[a]`:
//! with the minimal polynomial factored as `m = x^s·q`, `q(0) ≠ 0`, Bézout
//! coefficients `u·x^s + v·q = 1` give the spectral idempotent
//! `a^π = v(a)·q(a)`, and the Drazin inverse is
//! `a^d = (a + a^π)^{-1}·(1 - a^π)` with the inverse taken modulo `m`.
//! Because `a^d` is a polynomial in `a`, it automatically lies in the double
//! commutant of `a`.
//!
//! The zero element has minimal polynomial `x`: it is nilpotent of index 1,
//! `0^d = 0` and `0^π = 1`.

use num_traits::Zero;

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrazinData {
    pub inverse: Element,
    pub index: usize,
    /// Spectral idempotent `1 - a·a^d`.
    pub pi: Element,
}

/// Nilpotency index `s` (smallest `s` with `a^s = 0`), or `None` when `a` is
/// not nilpotent. The zero element reports index 1.
pub fn nilpotency_index(a: &Element) -> Option<usize> {
    let m = a.minimal_polynomial();
    let (s, q) = m.split_x_power();
    (q.degree() == Some(0)).then_some(s)
}

pub fn is_nilpotent(a: &Element) -> bool {
    nilpotency_index(a).is_some()
}

pub fn is_invertible(a: &Element) -> bool {
    !a.minimal_polynomial().coeff(0).is_zero()
}

/// Two-sided inverse, computed from the minimal polynomial: writing
/// `m(x) = x·r(x) + m(0)` gives `a^{-1} = -r(a) / m(0)`.
pub fn inverse(a: &Element) -> Result<Element> {
    let m = a.minimal_polynomial();
    let c0 = m.coeff(0);
    if c0.is_zero() {
        return Err(Error::NotInvertible);
    }
    let r = Polynomial::new(m.coeffs()[1..].to_vec());
    let inv = a.eval_poly(&r).scale(&(-c0.recip()));
    if !(&inv * a).is_one() || !(a * &inv).is_one() {
        return Err(Error::Inconsistent(format!(
            "inverse of {a} failed its self-check"
        )));
    }
    Ok(inv)
}

/// Polynomials `(d, π)` in `ℚ[x]/(m)` representing `a^d` and `a^π`, plus the index.
pub fn drazin_polynomials(m: &Polynomial) -> (Polynomial, Polynomial, usize) {
    let (s, q) = m.split_x_power();
    let xs = Polynomial::monomial(rational::one(), s);
    let (g, _u, v) = xs.ext_gcd(&q);
    debug_assert_eq!(
        g,
        Polynomial::one(),
        "x^s and q are coprime by construction"
    );
    let pi = v.mul(&q).rem(m);
    let shifted = Polynomial::x().add(&pi);
    let shifted_inv = shifted
        .inverse_mod(m)
        .expect("a + a^π is invertible in ℚ[a]");
    let drazin = shifted_inv.mul(&Polynomial::one().sub(&pi)).rem(m);
    (drazin, pi, s)
}

/// Drazin inverse, index and spectral idempotent of `a`, self-checked
/// against every defining identity before returning.
pub fn drazin(a: &Element) -> Result<DrazinData> {
    let m = a.minimal_polynomial();
    let (dp, pp, s) = drazin_polynomials(&m);
    let data = DrazinData {
        inverse: a.eval_poly(&dp),
        index: s,
        pi: a.eval_poly(&pp),
    };
    if let Some(broken) = drazin_violation(a, &data) {
        return Err(Error::Inconsistent(format!(
            "Drazin data for {a}: {broken}"
        )));
    }
    Ok(data)
}

/// First violated Drazin invariant, if any.
pub fn drazin_violation(a: &Element, data: &DrazinData) -> Option<&'static str> {
    let x = &data.inverse;
    let s = data.index as u32;
    if (a * x) != (x * a) {
        return Some("a·a^d != a^d·a");
    }
    if &(&(x * a) * x) != x {
        return Some("a^d·a·a^d != a^d");
    }
    if (a.pow(s + 1) * x) != a.pow(s) {
        return Some("a^(s+1)·a^d != a^s");
    }
    if !data.pi.is_idempotent() {
        return Some("a^π is not idempotent");
    }
    if (&a.algebra().one() - &(a * x)) != data.pi {
        return Some("a^π != 1 - a·a^d");
    }
    if !is_nilpotent(&(a * &data.pi)) {
        return Some("a·a^π is not nilpotent");
    }
    if !is_invertible(&(a + &data.pi)) {
        return Some("a + a^π is not invertible");
    }
    None
}
