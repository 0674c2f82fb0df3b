//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Oracles here are written against raw coordinates and structure constants
//! and do not call the predicates they are checking: nilpotency is `x^d = 0`,
//! invertibility is full rank of the left regular matrix, and the radical
//! is recomputed from the structure constants with a separate elimination.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use drazin_core::algebra::{
    dual_numbers, matrix_algebra, upper_triangular_algebra, Algebra, Element,
};
use drazin_core::radical::{in_sqrt_radical, jacobson_radical};
use drazin_core::rational::Rational;
use drazin_core::recipes::fuzz;
use drazin_core::report::{Mode, Verdict};
use drazin_core::sample;
use drazin_core::spectral::{self, is_nilpotent};
use drazin_core::strong::{
    hierarchy_checks, is_strong_invertible, strong_inverse, weighted_routes,
    weighted_strong_inverse, StrongKind, WeightedContext,
};
use drazin_core::theorems::TheoremId;

const CORPUS_SIZE: usize = 500;
const ENTRY_BOUND: i64 = 3;
const WEIGHTED_TRIPLES: usize = 500;
const FUZZ_PER_N: u64 = 70;
const RADICAL_SAMPLES: usize = 50;

// ---------- independent oracles ----------

fn oracle_nilpotent(x: &Element) -> bool {
    x.pow(x.algebra().dim() as u32).is_zero()
}

fn oracle_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                for k in c..cols {
                    let delta = &f * &rows[rank][k];
                    rows[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Nullspace basis of `rows` (each of length `cols`).
fn oracle_nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for k in 0..cols {
            m[rank][k] = &m[rank][k] * &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..cols {
                    let delta = &f * &m[rank][k];
                    m[r][k] -= delta;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

fn oracle_invertible(x: &Element) -> bool {
    oracle_rank(x.left_regular()) == x.algebra().dim()
}

/// Trace-form kernel straight from the structure constants.
fn oracle_radical(alg: &Algebra) -> Vec<Vec<Rational>> {
    let d = alg.dim();
    let tr: Vec<Rational> = (0..d)
        .map(|m| {
            (0..d).fold(Rational::zero(), |acc, k| {
                acc + alg.structure_constant(m, k, k)
            })
        })
        .collect();
    let gram: Vec<Vec<Rational>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    (0..d).fold(Rational::zero(), |acc, m| {
                        acc + alg.structure_constant(i, j, m) * &tr[m]
                    })
                })
                .collect()
        })
        .collect();
    // x ∈ J iff Σ_i x_i g[i][j] = 0 for all j
    let transposed: Vec<Vec<Rational>> = (0..d)
        .map(|j| (0..d).map(|i| gram[i][j].clone()).collect())
        .collect();
    oracle_nullspace(&transposed, d)
}

fn same_span(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let ra = if a.is_empty() {
        0
    } else {
        oracle_rank(a.to_vec())
    };
    let rb = if b.is_empty() {
        0
    } else {
        oracle_rank(b.to_vec())
    };
    let joint: Vec<Vec<Rational>> = a.iter().chain(b).cloned().collect();
    let rj = if joint.is_empty() {
        0
    } else {
        oracle_rank(joint)
    };
    ra == rb && ra == rj
}

// ---------- corpus ----------

struct Corpus {
    name: &'static str,
    alg: Arc<Algebra>,
    elements: Vec<Element>,
}

/// Random elements, plus structured ones (idempotents, signed idempotents,
/// nilpotents and their sums) so that strong invertibility is well represented.
fn corpus(name: &'static str, alg: Arc<Algebra>, seed: u64) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let radical = jacobson_radical(&alg).elements(&alg);
    let mut elements = Vec::with_capacity(CORPUS_SIZE);
    for i in 0..CORPUS_SIZE {
        let e = match i % 5 {
            0 | 1 => sample::mixed_element(&alg, &mut rng, ENTRY_BOUND),
            2 => sample::element(&alg, &mut rng, ENTRY_BOUND),
            _ => {
                let z = sample::mixed_element(&alg, &mut rng, ENTRY_BOUND);
                let d = spectral::drazin(&z).unwrap();
                let idem = &z * &d.inverse;
                let nil = &z * &d.pi;
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                let mut x =
                    &idem.scale_int(sign) + &nil.scale(&sample::rational(&mut rng, ENTRY_BOUND));
                if !radical.is_empty() && rng.gen_bool(0.5) {
                    x = &x + &sample::combination(&radical, &mut rng, ENTRY_BOUND);
                }
                if rng.gen_bool(0.5) {
                    let u = sample::element(&alg, &mut rng, ENTRY_BOUND);
                    if let Ok(inv) = spectral::inverse(&u) {
                        x = &(&u * &x) * &inv;
                    }
                }
                x
            }
        };
        elements.push(e);
    }
    Corpus {
        name,
        alg,
        elements,
    }
}

// ---------- criteria ----------

struct Line {
    ok: bool,
    detail: String,
}

fn criterion_1() -> Line {
    let m2 = matrix_algebra(2).unwrap();
    let a = m2.one();
    let b = -m2.one();
    let kind = StrongKind::gns(2).unwrap();
    let ab = &a * &b;
    let observed = [
        is_strong_invertible(&a, kind),
        is_strong_invertible(&b, kind),
        is_strong_invertible(&(&a + &b), kind),
        oracle_nilpotent(&ab),
        oracle_nilpotent(&(&ab * &(&a + &b)).scale_int(3)),
    ];
    let expected = [true, true, true, false, true];
    Line {
        ok: observed == expected,
        detail: format!("A,B,A+B strong / AB nilpotent / 3AB(A+B) nilpotent = {observed:?}"),
    }
}

fn criterion_2(corpora: &[Corpus]) -> Line {
    let mut checks = 0;
    let mut failures = 0;
    for c in corpora {
        for a in &c.elements {
            for n in 1..=3 {
                let linear = &a.clone() - &a.pow(n + 1);
                let power = &a.pow(n) - &a.pow(2 * n);
                let g = is_strong_invertible(a, StrongKind::gns(n).unwrap());
                let p = is_strong_invertible(a, StrongKind::pns(n).unwrap());
                let (gl, gp) = (oracle_nilpotent(&linear), oracle_nilpotent(&power));
                let (pl, pp) = (in_sqrt_radical(&linear), in_sqrt_radical(&power));
                checks += 1;
                if !(g == gl && gl == gp && p == pl && pl == pp) {
                    failures += 1;
                }
            }
        }
    }
    Line {
        ok: failures == 0,
        detail: format!("{checks} (element, n) checks, {failures} exceptions"),
    }
}

fn criterion_3(corpora: &[Corpus]) -> Line {
    let mut failures = 0;
    let mut total = 0;
    for c in corpora {
        let one = c.alg.one();
        for a in &c.elements {
            total += 1;
            let Ok(d) = spectral::drazin(a) else {
                failures += 1;
                continue;
            };
            let x = &d.inverse;
            let s = d.index as u32;
            let ok = (a * x) == (x * a)
                && &(&(x * a) * x) == x
                && (&a.pow(s + 1) * x) == a.pow(s)
                && (&d.pi * &d.pi) == d.pi
                && d.pi == &one - &(a * x)
                && oracle_nilpotent(&(a * &d.pi))
                && oracle_invertible(&(a + &d.pi));
            if !ok {
                failures += 1;
            }
        }
    }
    Line {
        ok: failures == 0,
        detail: format!("{total} elements, {failures} failures"),
    }
}

fn criterion_4(corpora: &[Corpus]) -> Line {
    let mut strong = 0;
    let mut failures = 0;
    for c in corpora {
        for a in &c.elements {
            for n in 1..=3 {
                for kind in [StrongKind::gns(n).unwrap(), StrongKind::pns(n).unwrap()] {
                    if !is_strong_invertible(a, kind) {
                        continue;
                    }
                    strong += 1;
                    let ok = match strong_inverse(a, kind) {
                        Ok(x) => {
                            let defect = &a.pow(n) - &(a * &x);
                            let commutant_ok =
                                a.commutant_basis().iter().all(|y| (&x * y) == (y * &x));
                            commutant_ok && (&(&x * a) * &x) == x && oracle_nilpotent(&defect)
                        }
                        Err(_) => false,
                    };
                    if !ok {
                        failures += 1;
                    }
                }
            }
        }
    }
    Line {
        ok: failures == 0 && strong > 0,
        detail: format!(
            "{strong} strongly invertible (element, kind) cases, {failures} exceptions"
        ),
    }
}

fn criterion_5(corpora: &[Corpus]) -> Line {
    let (mut verified, mut vacuous, mut violations) = (0, 0, 0);
    let mut oracle_failures = 0;
    for c in corpora {
        for a in &c.elements {
            for n in 1..=3 {
                for mode in [Mode::Gns, Mode::Pns] {
                    let r = hierarchy_checks(a, n, mode).unwrap();
                    match r.verdict {
                        Verdict::Verified => verified += 1,
                        Verdict::Vacuous => vacuous += 1,
                        Verdict::Violation => violations += 1,
                    }
                }
                // direct restatement with the oracle
                let s = |m: u32| oracle_nilpotent(&(&a.clone() - &a.pow(m + 1)));
                if (s(1) && !s(n)) || (s(2) && !s(2 * n)) || (s(n) && !s(2 * n)) {
                    oracle_failures += 1;
                }
            }
        }
    }
    Line {
        ok: violations == 0 && oracle_failures == 0,
        detail: format!(
            "{verified} verified, {vacuous} vacuous, {violations} violations, {oracle_failures} oracle exceptions"
        ),
    }
}

fn criterion_6(corpora: &[Corpus]) -> Line {
    let mut ok = true;
    let mut parts = Vec::new();
    let mut equiv4_nonvacuous = 0;
    for id in TheoremId::ALL {
        for mode in [Mode::Gns, Mode::Pns] {
            let (mut total, mut verified, mut vacuous, mut violations, mut infeasible) =
                (0, 0, 0, 0, 0);
            for (k, c) in corpora.iter().enumerate() {
                for n in 1..=3u32 {
                    let seed = 1000 * (k as u64 + 1) + u64::from(n);
                    let s = fuzz(&c.alg, id, mode, n, FUZZ_PER_N, seed).unwrap();
                    total += s.count;
                    verified += s.verified;
                    vacuous += s.vacuous;
                    violations += s.violations;
                    infeasible += s.infeasible;
                    if let Some(r) = &s.first_violation {
                        eprintln!("  violation in {} on {}: {}", id, c.name, r.to_json());
                    }
                }
            }
            if id == TheoremId::Equiv4 {
                equiv4_nonvacuous += verified + violations;
            }
            let checked = total - infeasible;
            if violations > 0 || checked < 200 {
                ok = false;
            }
            parts.push(format!(
                "{id}/{mode}: {checked} checked ({verified} verified, {vacuous} vacuous, {violations} violations, {infeasible} infeasible)"
            ));
        }
    }
    for p in &parts {
        println!("    {p}");
    }
    Line {
        ok,
        detail: format!("{} theorem/mode pairs; EQUIV4 pairwise agreement on {equiv4_nonvacuous} non-vacuous instances", parts.len()),
    }
}

fn criterion_7() -> Line {
    let cases: Vec<(&str, Arc<Algebra>, Vec<Vec<Rational>>)> = {
        let t2 = upper_triangular_algebra(2).unwrap();
        let t3 = upper_triangular_algebra(3).unwrap();
        let d = dual_numbers();
        let coords = |e: Element| e.into_coords();
        vec![
            ("M2", matrix_algebra(2).unwrap(), vec![]),
            ("M3", matrix_algebra(3).unwrap(), vec![]),
            (
                "T2",
                t2.clone(),
                vec![coords(t2.matrix_unit(0, 1).unwrap())],
            ),
            (
                "T3",
                t3.clone(),
                vec![
                    coords(t3.matrix_unit(0, 1).unwrap()),
                    coords(t3.matrix_unit(0, 2).unwrap()),
                    coords(t3.matrix_unit(1, 2).unwrap()),
                ],
            ),
            ("dual", d.clone(), vec![coords(d.basis(1))]),
        ]
    };
    let mut ok = true;
    let mut details = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7261_6469);
    for (name, alg, expected) in cases {
        let rad = jacobson_radical(&alg);
        let computed: Vec<Vec<Rational>> = rad.basis().to_vec();
        let oracle = oracle_radical(&alg);
        let spans = same_span(&computed, &oracle) && same_span(&computed, &expected);
        let basis = rad.elements(&alg);
        let mut definitional = true;
        for _ in 0..RADICAL_SAMPLES {
            let y = sample::element(&alg, &mut rng, ENTRY_BOUND);
            let j = if basis.is_empty() {
                alg.zero()
            } else {
                sample::combination(&basis, &mut rng, ENTRY_BOUND)
            };
            definitional &= oracle_invertible(&(&alg.one() + &(&j * &y)));
        }
        ok &= spans && definitional;
        details.push(format!(
            "{name}: dim {} nilclass {} {}",
            rad.dim(),
            rad.nilclass(),
            if spans && definitional {
                "ok"
            } else {
                "MISMATCH"
            }
        ));
    }
    Line {
        ok,
        detail: details.join(", "),
    }
}

fn criterion_8(corpora: &[Corpus]) -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7765_6967);
    let (mut total, mut invertible, mut failures) = (0, 0, 0);
    for c in corpora {
        for _ in 0..WEIGHTED_TRIPLES {
            let a = c.elements[rng.gen_range(0..c.elements.len())].clone();
            let w = loop {
                let w = c.elements[rng.gen_range(0..c.elements.len())].clone();
                if !w.is_zero() {
                    break w;
                }
            };
            let n = rng.gen_range(1..=3);
            let mode = if rng.gen_bool(0.5) {
                Mode::Gns
            } else {
                Mode::Pns
            };
            let kind = StrongKind::new(mode, n).unwrap();
            let ctx = WeightedContext::new(w.clone()).unwrap();
            total += 1;
            let routes = weighted_routes(&a, &ctx, kind);
            if !routes.agree() {
                failures += 1;
                continue;
            }
            if routes.via_aw {
                invertible += 1;
                let ok = match weighted_strong_inverse(&a, &ctx, kind) {
                    Ok(x) => {
                        let star = |p: &Element, q: &Element| &(p * &w) * q;
                        let an = &a * &(&w * &a).pow(n - 1);
                        star(&x, &a) == star(&a, &x)
                            && star(&star(&x, &a), &x) == x
                            && oracle_nilpotent(&(&(&an - &star(&a, &x)) * &w))
                    }
                    Err(_) => false,
                };
                if !ok {
                    failures += 1;
                }
            }
        }
    }
    Line {
        ok: failures == 0,
        detail: format!("{total} triples, {invertible} weighted-invertible, {failures} exceptions"),
    }
}

fn criterion_9(corpora: &[Corpus]) -> Line {
    let (mut checks, mut failures) = (0, 0);
    for c in corpora {
        for a in &c.elements {
            checks += 1;
            if is_nilpotent(a) != in_sqrt_radical(a) || is_nilpotent(a) != oracle_nilpotent(a) {
                failures += 1;
            }
            for n in 1..=3 {
                checks += 1;
                let g = is_strong_invertible(a, StrongKind::gns(n).unwrap());
                let p = is_strong_invertible(a, StrongKind::pns(n).unwrap());
                if g != p {
                    failures += 1;
                }
            }
        }
    }
    Line {
        ok: failures == 0,
        detail: format!("{checks} predicate pairs, {failures} disagreements"),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpora = vec![
        corpus("M2", matrix_algebra(2).unwrap(), 2),
        corpus("M3", matrix_algebra(3).unwrap(), 3),
        corpus("T3", upper_triangular_algebra(3).unwrap(), 33),
        corpus("dual", dual_numbers(), 1),
    ];
    let criteria: Vec<(&str, Box<dyn Fn() -> Line>)> = vec![
        ("worked example reproduction", Box::new(criterion_1)),
        (
            "characterization equivalences",
            Box::new(|| criterion_2(&corpora)),
        ),
        ("Drazin invariants", Box::new(|| criterion_3(&corpora))),
        ("definitional closure", Box::new(|| criterion_4(&corpora))),
        ("hierarchy implications", Box::new(|| criterion_5(&corpora))),
        (
            "additive theorem fuzzing",
            Box::new(|| criterion_6(&corpora)),
        ),
        ("radical correctness", Box::new(criterion_7)),
        ("weighted translation", Box::new(|| criterion_8(&corpora))),
        ("GNS/PNS coincidence", Box::new(|| criterion_9(&corpora))),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let line = run();
        all &= line.ok;
        println!(
            "CRITERION {} {}: {} ({}) [{:.1}s]",
            i + 1,
            if line.ok { "PASS" } else { "FAIL" },
            name,
            line.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance finished in {:.1}s",
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
