//! Random rationals and elements for generators and tests.

use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;

use crate::algebra::{Algebra, Element};
use crate::rational::{self, Rational};

/// Numerator in `[-bound, bound]`, denominator in `[1, bound]`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let bound = bound.max(1);
    rational::frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let r = rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Dense random element.
pub fn element<R: Rng + ?Sized>(alg: &Arc<Algebra>, rng: &mut R, bound: i64) -> Element {
    let coords = (0..alg.dim()).map(|_| rational(rng, bound)).collect();
    alg.element(coords)
        .expect("coordinate count matches dimension")
}

/// Random element where each coordinate is zero with probability `1 - density`.
pub fn sparse_element<R: Rng + ?Sized>(
    alg: &Arc<Algebra>,
    rng: &mut R,
    bound: i64,
    density: f64,
) -> Element {
    let coords = (0..alg.dim())
        .map(|_| {
            if rng.gen_bool(density) {
                rational(rng, bound)
            } else {
                rational::zero()
            }
        })
        .collect();
    alg.element(coords)
        .expect("coordinate count matches dimension")
}

/// Sparse element with a density drawn per call, so that singular,
/// nilpotent and invertible elements all appear regularly.
pub fn mixed_element<R: Rng + ?Sized>(alg: &Arc<Algebra>, rng: &mut R, bound: i64) -> Element {
    let density = [0.25, 0.5, 0.75, 1.0][rng.gen_range(0..4)];
    sparse_element(alg, rng, bound, density)
}

/// Random linear combination of `basis`. Panics on an empty family.
pub fn combination<R: Rng + ?Sized>(basis: &[Element], rng: &mut R, bound: i64) -> Element {
    let mut it = basis.iter();
    let Some(first) = it.next() else {
        panic!("combination of an empty family has no algebra");
    };
    let mut acc = first.scale(&rational(rng, bound));
    for b in it {
        acc = &acc + &b.scale(&rational(rng, bound));
    }
    acc
}

pub fn nonzero_element<R: Rng + ?Sized>(alg: &Arc<Algebra>, rng: &mut R, bound: i64) -> Element {
    loop {
        let e = mixed_element(alg, rng, bound);
        if !e.is_zero() {
            return e;
        }
    }
}
