//! Worked examples, each checked against values computed by hand here.

use std::sync::Arc;

use drazin_core::algebra::{
    dual_numbers, matrix_algebra, structure_algebra, upper_triangular_algebra, Algebra, Element,
};
use drazin_core::pierce::{check_triangular_transfer, corner_algebra, pierce};
use drazin_core::poly::Polynomial;
use drazin_core::radical::{in_radical, in_sqrt_radical, jacobson_radical};
use drazin_core::rational::{int, Rational};
use drazin_core::recipes::fuzz;
use drazin_core::spectral::{drazin, inverse, is_invertible, is_nilpotent, nilpotency_index};
use drazin_core::strong::{
    hierarchy_checks, is_strong_invertible, is_weighted_strong_invertible, strong_inverse,
    verify_strong_axioms, weighted_strong_inverse, StrongKind, WeightedContext,
};
use drazin_core::theorems::{theorem_check, TheoremId};
use drazin_core::{Error, Mode, Verdict};

fn m2() -> Arc<Algebra> {
    matrix_algebra(2).unwrap()
}

fn mat(alg: &Arc<Algebra>, rows: &[&[i64]]) -> Element {
    alg.from_int_matrix(rows).unwrap()
}

fn poly(xs: &[i64]) -> Polynomial {
    Polynomial::new(xs.iter().map(|&x| int(x)).collect())
}

fn eps() -> (Arc<Algebra>, Element) {
    let d = dual_numbers();
    let e = d.basis(1);
    (d, e)
}

fn table(dim: usize, entries: &[(usize, usize, &[i64])]) -> Vec<Vec<Vec<Rational>>> {
    let mut t = vec![vec![vec![int(0); dim]; dim]; dim];
    for &(i, j, v) in entries {
        t[i][j] = v.iter().map(|&x| int(x)).collect();
    }
    t
}

#[test]
fn matrix_algebra_structure() {
    let m1 = matrix_algebra(1).unwrap();
    assert_eq!(m1.dim(), 1);
    assert_eq!(m1.structure_constant(0, 0, 0), &int(1));
    assert_eq!(m1.unit_coords(), &[int(1)]);

    let m = m2();
    assert_eq!(m.dim(), 4);
    let (e11, e12, e21) = (
        m.matrix_unit(0, 0).unwrap(),
        m.matrix_unit(0, 1).unwrap(),
        m.matrix_unit(1, 0).unwrap(),
    );
    assert_eq!(&e12 * &e21, e11);
    assert!((&e12 * &e12).is_zero());

    let m3 = matrix_algebra(3).unwrap();
    let expected: Vec<Rational> = (0..9).map(|i| int(i64::from(i % 4 == 0))).collect();
    assert_eq!(m3.unit_coords(), &expected[..]);
}

#[test]
fn structure_tables() {
    let dual = table(2, &[(0, 0, &[1, 0]), (0, 1, &[0, 1]), (1, 0, &[0, 1])]);
    assert!(structure_algebra(2, dual, vec![int(1), int(0)]).is_ok());

    // ε² = 1 + ε is ℚ[x]/(x² - x - 1), still associative
    let twisted = table(
        2,
        &[
            (0, 0, &[1, 0]),
            (0, 1, &[0, 1]),
            (1, 0, &[0, 1]),
            (1, 1, &[1, 1]),
        ],
    );
    assert!(structure_algebra(2, twisted, vec![int(1), int(0)]).is_ok());

    // e₂ idempotent but not a unit: e₁e₂ = 0 ≠ e₁
    let bad_unit = table(2, &[(0, 0, &[1, 0]), (1, 1, &[0, 1])]);
    assert!(matches!(
        structure_algebra(2, bad_unit, vec![int(0), int(1)]),
        Err(Error::UnitLaw { .. })
    ));
}

#[test]
fn element_arithmetic() {
    let (d, e) = eps();
    assert!(e.pow(2).is_zero());
    assert!((&(&d.one() + &e) * &(&d.one() - &e)).is_one());

    assert_eq!(
        m2().one().left_regular(),
        (0..4)
            .map(|i| (0..4).map(|j| int(i64::from(i == j))).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    );
    assert!(m2()
        .zero()
        .left_regular()
        .iter()
        .flatten()
        .all(|x| x == &int(0)));
    // columns are images of basis vectors: ε·1 = ε, ε·ε = 0
    assert_eq!(
        e.left_regular(),
        vec![vec![int(0), int(0)], vec![int(1), int(0)]]
    );
}

#[test]
fn minimal_polynomials() {
    let m = m2();
    assert_eq!(m.one().minimal_polynomial(), poly(&[-1, 1]));
    assert_eq!(
        m.matrix_unit(0, 1).unwrap().minimal_polynomial(),
        poly(&[0, 0, 1])
    );
    assert_eq!(
        mat(&m, &[&[2, 0], &[0, 0]]).minimal_polynomial(),
        poly(&[0, -2, 1])
    );
}

#[test]
fn commutants() {
    let m = m2();
    assert_eq!(m.one().commutant_basis().len(), 4);

    let diag = mat(&m, &[&[2, 0], &[0, 0]]).commutant_basis();
    assert_eq!(diag.len(), 2);
    for y in [m.matrix_unit(0, 0).unwrap(), m.matrix_unit(1, 1).unwrap()] {
        assert!(y.in_span(&diag));
    }

    let e12 = m.matrix_unit(0, 1).unwrap();
    let nil = e12.commutant_basis();
    assert_eq!(nil.len(), 2);
    assert!(m.one().in_span(&nil) && e12.in_span(&nil));

    let a = mat(&m, &[&[1, 2], &[3, 4]]);
    assert!(a.in_double_commutant(&a));
    assert!(a.eval_poly(&poly(&[5, -1, 2])).in_double_commutant(&a));
    assert!(!m.matrix_unit(0, 0).unwrap().in_double_commutant(&m.one()));
}

#[test]
fn nilpotency() {
    let m = m2();
    assert_eq!(nilpotency_index(&m.matrix_unit(0, 1).unwrap()), Some(2));
    assert!(!is_nilpotent(&m.one()));
    let (_, e) = eps();
    assert_eq!(nilpotency_index(&e), Some(2));
}

#[test]
fn drazin_examples() {
    let m = m2();
    let d = drazin(&mat(&m, &[&[2, 0], &[0, 0]])).unwrap();
    assert_eq!(
        d.inverse.to_matrix().unwrap(),
        vec![
            vec![Rational::new(1.into(), 2.into()), int(0)],
            vec![int(0), int(0)]
        ]
    );
    assert_eq!(d.index, 1);
    assert_eq!(d.pi, mat(&m, &[&[0, 0], &[0, 1]]));

    let d = drazin(&m.matrix_unit(0, 1).unwrap()).unwrap();
    assert!(d.inverse.is_zero());
    assert_eq!(d.index, 2);
    assert!(d.pi.is_one());

    let idem = mat(&m, &[&[1, 1], &[0, 0]]);
    let d = drazin(&idem).unwrap();
    assert_eq!(d.inverse, idem);
    assert_eq!(d.index, 1);
    assert_eq!(d.pi, &m.one() - &idem);
}

#[test]
fn invertibility() {
    let m = m2();
    assert!(inverse(&m.one()).unwrap().is_one());
    assert!(!is_invertible(&m.matrix_unit(0, 1).unwrap()));
    let (d, e) = eps();
    assert_eq!(inverse(&(&d.one() + &e)).unwrap(), &d.one() - &e);
}

#[test]
fn radicals() {
    let m = m2();
    let r = jacobson_radical(&m);
    assert_eq!((r.dim(), r.nilclass()), (0, 1));

    let (d, e) = eps();
    let r = jacobson_radical(&d);
    assert_eq!((r.dim(), r.nilclass()), (1, 2));
    assert!(r.contains(e.coords()));

    let t2 = upper_triangular_algebra(2).unwrap();
    let r = jacobson_radical(&t2);
    assert_eq!((r.dim(), r.nilclass()), (1, 2));
    assert!(r.contains(t2.matrix_unit(0, 1).unwrap().coords()));

    assert!(in_radical(&m.zero()));
    assert!(!in_radical(&m.matrix_unit(0, 1).unwrap()));
    assert!(in_radical(&e));

    assert!(in_sqrt_radical(&m.matrix_unit(0, 1).unwrap()));
    assert!(!in_sqrt_radical(&m.one()));
    assert!(!in_sqrt_radical(&mat(&m, &[&[2, 0], &[0, 0]])));
}

#[test]
fn strong_predicates() {
    let m = m2();
    for n in 1..=4 {
        assert!(is_strong_invertible(&m.one(), StrongKind::gns(n).unwrap()));
    }
    assert!(is_strong_invertible(
        &(-m.one()),
        StrongKind::gns(2).unwrap()
    ));
    assert!(!is_strong_invertible(
        &mat(&m, &[&[2, 0], &[0, 0]]),
        StrongKind::gns(1).unwrap()
    ));
}

#[test]
fn strong_inverses() {
    let m = m2();
    for n in 1..=3 {
        let kind = StrongKind::gns(n).unwrap();
        assert!(strong_inverse(&m.matrix_unit(0, 1).unwrap(), kind)
            .unwrap()
            .is_zero());
    }
    let idem = mat(&m, &[&[1, 1], &[0, 0]]);
    assert_eq!(
        strong_inverse(&idem, StrongKind::gns(1).unwrap()).unwrap(),
        idem
    );

    // 1 + ε: a - a^{n+1} = -(n+1)ε - ..., nilpotent; inverse is 1 - ε
    let (d, e) = eps();
    let a = &d.one() + &e;
    for n in 1..=3 {
        for kind in [StrongKind::gns(n).unwrap(), StrongKind::pns(n).unwrap()] {
            assert_eq!(strong_inverse(&a, kind).unwrap(), &d.one() - &e);
        }
    }
}

#[test]
fn strong_axiom_certificates() {
    let m = m2();
    assert!(
        verify_strong_axioms(&m.one(), &m.one(), StrongKind::gns(1).unwrap()).conclusions_hold()
    );
    assert!(verify_strong_axioms(
        &m.matrix_unit(0, 1).unwrap(),
        &m.zero(),
        StrongKind::gns(3).unwrap()
    )
    .conclusions_hold());
    let a = mat(&m, &[&[2, 0], &[0, 0]]);
    let x = drazin(&a).unwrap().inverse;
    let r = verify_strong_axioms(&a, &x, StrongKind::gns(1).unwrap());
    assert_eq!(r.failed_conclusions(), vec!["defect_small"]);
}

#[test]
fn hierarchy_examples() {
    let m = m2();
    let idem = mat(&m, &[&[1, 1], &[0, 0]]);
    for n in 1..=3 {
        let r = hierarchy_checks(&idem, n, Mode::Gns).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        assert!(r.conclusions.values().all(|&v| v));
    }
    let r = hierarchy_checks(&(-m.one()), 2, Mode::Gns).unwrap();
    assert_eq!(r.verdict, Verdict::Verified);
    assert!(is_strong_invertible(
        &(-m.one()),
        StrongKind::gns(4).unwrap()
    ));

    let r = hierarchy_checks(&mat(&m, &[&[2, 0], &[0, 0]]), 2, Mode::Gns).unwrap();
    assert_eq!(r.verdict, Verdict::Vacuous);
}

#[test]
fn weighted_examples() {
    let m = m2();
    let kind = |n| StrongKind::gns(n).unwrap();
    let ctx = WeightedContext::new(mat(&m, &[&[1, 0], &[0, 0]])).unwrap();
    assert!(is_weighted_strong_invertible(&m.one(), &ctx, kind(2)));
    assert_eq!(
        weighted_strong_inverse(&m.one(), &ctx, kind(2)).unwrap(),
        mat(&m, &[&[1, 0], &[0, 0]])
    );

    let doubled = WeightedContext::new(m.one().scale_int(2)).unwrap();
    assert!(!is_weighted_strong_invertible(&m.one(), &doubled, kind(1)));

    // a·e12 = [[0, a11], [0, a21]] is nilpotent only when a21 = 0
    let nil_w = WeightedContext::new(m.matrix_unit(0, 1).unwrap()).unwrap();
    for n in 1..=3 {
        assert!(is_weighted_strong_invertible(
            &mat(&m, &[&[1, 2], &[0, 4]]),
            &nil_w,
            kind(n)
        ));
        assert!(!is_weighted_strong_invertible(
            &mat(&m, &[&[1, 2], &[3, 4]]),
            &nil_w,
            kind(n)
        ));
    }
    assert!(weighted_strong_inverse(&m.one(), &nil_w, kind(2))
        .unwrap()
        .is_zero());

    let w = mat(&m, &[&[1, 1], &[0, 2]]);
    let w_inv = inverse(&w).unwrap();
    let ctx = WeightedContext::new(w.clone()).unwrap();
    let x = weighted_strong_inverse(&w_inv, &ctx, kind(1)).unwrap();
    assert_eq!(x, w_inv);
    assert_eq!(ctx.star(&ctx.star(&x, &w_inv), &x), x);
}

#[test]
fn pierce_examples() {
    let m = m2();
    let p = m.matrix_unit(0, 0).unwrap();
    let y = mat(&m, &[&[1, 2], &[3, 4]]);
    let b = pierce(&y, &p).unwrap();
    assert_eq!(b.blocks[0][0], m.matrix_unit(0, 0).unwrap());
    assert_eq!(b.blocks[0][1], m.matrix_unit(0, 1).unwrap().scale_int(2));
    assert_eq!(b.blocks[1][0], m.matrix_unit(1, 0).unwrap().scale_int(3));
    assert_eq!(b.blocks[1][1], m.matrix_unit(1, 1).unwrap().scale_int(4));

    let b = pierce(&y, &m.one()).unwrap();
    assert_eq!(b.blocks[0][0], y);
    assert!(b.blocks[0][1].is_zero() && b.blocks[1][0].is_zero() && b.blocks[1][1].is_zero());

    let pi = drazin(&mat(&m, &[&[2, 0], &[0, 0]])).unwrap().pi;
    let b = pierce(&m.one(), &pi).unwrap();
    assert_eq!(b.blocks[0][0], mat(&m, &[&[0, 0], &[0, 1]]));
    assert!(b.blocks[0][1].is_zero() && b.blocks[1][0].is_zero());
    assert_eq!(b.blocks[1][1], mat(&m, &[&[1, 0], &[0, 0]]));

    assert_eq!(pierce(&y, &y).unwrap_err(), Error::NotIdempotent);
}

#[test]
fn corner_examples() {
    let m = m2();
    assert_eq!(
        corner_algebra(&m.matrix_unit(0, 0).unwrap())
            .unwrap()
            .algebra()
            .dim(),
        1
    );
    assert_eq!(corner_algebra(&m.one()).unwrap().algebra().dim(), 4);
    let m3 = matrix_algebra(3).unwrap();
    let p = &m3.matrix_unit(0, 0).unwrap() + &m3.matrix_unit(1, 1).unwrap();
    let corner = corner_algebra(&p).unwrap();
    assert_eq!(corner.algebra().dim(), 4);
    assert_eq!(jacobson_radical(corner.algebra()).dim(), 0);
    assert_eq!(corner_algebra(&m.zero()).unwrap_err(), Error::ZeroCorner);
}

#[test]
fn triangular_transfer_examples() {
    let m = m2();
    let p = m.matrix_unit(0, 0).unwrap();
    for mode in [Mode::Gns, Mode::Pns] {
        let r = check_triangular_transfer(&p, &p, &m.zero(), &m.zero(), 1, mode).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        assert!(r.observations.values().all(|&v| v), "{r:?}");
    }

    let e21 = m.matrix_unit(1, 0).unwrap();
    let r = check_triangular_transfer(&p, &p, &m.zero(), &e21, 1, Mode::Gns).unwrap();
    assert_eq!(r.verdict, Verdict::Verified);
    assert!(r.observations["x_strong"]);
    let x = mat(&m, &[&[1, 0], &[1, 0]]);
    assert!((&x - &x.pow(2)).is_zero());
    assert!(is_strong_invertible(&x, StrongKind::gns(1).unwrap()));

    // nilpotent corners: x is nilpotent triangular, inverse 0
    let m3 = matrix_algebra(3).unwrap();
    let p = &m3.matrix_unit(0, 0).unwrap() + &m3.matrix_unit(1, 1).unwrap();
    let a = m3.matrix_unit(0, 1).unwrap();
    let c = &m3.matrix_unit(2, 0).unwrap() + &m3.matrix_unit(2, 1).unwrap().scale_int(3);
    for n in 1..=3 {
        let r = check_triangular_transfer(&p, &a, &m3.zero(), &c, n, Mode::Gns).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        assert!(r.observations["x_strong"]);
    }
    let x = &a + &c;
    assert!(strong_inverse(&x, StrongKind::gns(2).unwrap())
        .unwrap()
        .is_zero());
}

#[test]
fn theorem_examples() {
    let m = m2();
    let r = theorem_check(TheoremId::Equiv4, &m.one(), &(-m.one()), 2, Mode::Gns).unwrap();
    assert_eq!(r.verdict, Verdict::Verified);
    assert!(!r.observations["ab_small"]);
    assert!(r.observations["binomial_sum_small"]);

    let (e11, e12, e22) = (
        m.matrix_unit(0, 0).unwrap(),
        m.matrix_unit(0, 1).unwrap(),
        m.matrix_unit(1, 1).unwrap(),
    );
    for n in 1..=3 {
        let r = theorem_check(TheoremId::T2, &e11, &e22, n, Mode::Gns).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
        let r = theorem_check(TheoremId::T2, &e12, &e11, n, Mode::Gns).unwrap();
        assert_eq!(r.verdict, Verdict::Verified);
    }
    assert_eq!(&e12 + &e11, mat(&m, &[&[1, 1], &[0, 0]]));

    let r = theorem_check(TheoremId::T2, &m.one(), &m.one(), 1, Mode::Gns).unwrap();
    assert_eq!(r.verdict, Verdict::Vacuous);
}

#[test]
fn fuzz_examples() {
    let s = fuzz(&m2(), TheoremId::T2, Mode::Gns, 1, 200, 7).unwrap();
    assert_eq!((s.count, s.violations, s.infeasible), (200, 0, 0));

    let t3 = upper_triangular_algebra(3).unwrap();
    let s = fuzz(&t3, TheoremId::MyLemma, Mode::Gns, 1, 200, 1).unwrap();
    assert_eq!(s.violations, 0);

    let s = fuzz(&m2(), TheoremId::Equiv4, Mode::Gns, 2, 100, 3).unwrap();
    assert_eq!(s.violations, 0);
    assert_eq!(s.vacuous, 0);
}
