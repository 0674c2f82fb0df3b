//! Generators for pairs satisfying each theorem's hypotheses, and a fuzzer.
//!
//! Pairs are assembled from Pierce blocks. A *frame* of an idempotent `e`
//! is a list of orthogonal idempotents summing to `e`, obtained from the
//! spectral idempotents of compressed random elements. Relative to a frame,
//!
//! * `Σ σ_i f_i + Σ_{i<j} f_i r_ij f_j + e·j·e` (with `j ∈ J`) is strongly
//!   invertible of order `n` whenever every `σ_i` lies in `{0, 1}`, or in
//!   `{0, 1, -1}` for even `n`: it is block triangular modulo the radical,
//!   with diagonal blocks satisfying `σ = σ^{n+1}`;
//! * strictly block triangular elements form a subalgebra whose cube is 0.
//!
//! Every recipe finishes by conjugating the pair with a random unit, which
//! preserves all hypotheses. The hypotheses are re-checked before a pair
//! is returned.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::format::ElementDoc;
use crate::radical::jacobson_radical;
use crate::report::{Mode, TheoremReport, Verdict, Witness};
use crate::sample;
use crate::spectral;
use crate::theorems::{theorem_check, TheoremId};

/// Attempts per instance before a recipe gives up.
const ATTEMPTS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecipeKind {
    AbZero,
    Commuting,
    Intertwined,
    PiConditioned,
    NilpotentPair,
}

impl RecipeKind {
    pub fn for_theorem(id: TheoremId) -> Self {
        match id {
            TheoremId::T2 => RecipeKind::AbZero,
            TheoremId::Theo => RecipeKind::Commuting,
            TheoremId::Product | TheoremId::Equiv4 => RecipeKind::Intertwined,
            TheoremId::L4 | TheoremId::T3 | TheoremId::L5 | TheoremId::T4 | TheoremId::Theor => {
                RecipeKind::PiConditioned
            }
            TheoremId::MyLemma => RecipeKind::NilpotentPair,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RecipeKind::AbZero => "ab_zero",
            RecipeKind::Commuting => "commuting",
            RecipeKind::Intertwined => "intertwined",
            RecipeKind::PiConditioned => "pi_conditioned",
            RecipeKind::NilpotentPair => "nilpotent_pair",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecipe {
    pub theorem: TheoremId,
    pub kind: RecipeKind,
    pub mode: Mode,
    pub n: u32,
    pub entry_bound: i64,
    pub seed: u64,
}

impl PairRecipe {
    pub fn new(theorem: TheoremId, mode: Mode, n: u32, seed: u64) -> Self {
        PairRecipe {
            theorem,
            kind: RecipeKind::for_theorem(theorem),
            mode,
            n,
            entry_bound: 3,
            seed,
        }
    }

    /// Random stream for one instance; instances are independent of each
    /// other and of evaluation order.
    pub fn rng(&self, instance: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(instance);
        rng
    }

    pub fn label(&self) -> String {
        format!("{}/{}", self.kind.name(), self.theorem.name())
    }
}

struct Gen<'a> {
    alg: &'a Arc<Algebra>,
    rng: ChaCha8Rng,
    bound: i64,
    n: u32,
    radical: Vec<Element>,
}

impl<'a> Gen<'a> {
    fn one(&self) -> Element {
        self.alg.one()
    }

    fn zero(&self) -> Element {
        self.alg.zero()
    }

    fn random(&mut self) -> Element {
        sample::mixed_element(self.alg, &mut self.rng, self.bound)
    }

    fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    fn scalar(&mut self) -> crate::rational::Rational {
        sample::nonzero_rational(&mut self.rng, self.bound)
    }

    /// Admissible diagonal values; `-1` only for even `n`.
    fn sign(&mut self, allow_zero: bool) -> i64 {
        let mut options = vec![1];
        if self.n.is_multiple_of(2) {
            options.push(-1);
        }
        if allow_zero {
            options.push(0);
        }
        *options.choose(&mut self.rng).expect("nonempty")
    }

    /// Random element of `J` compressed into the corner of `e`, or 0.
    fn radical_in(&mut self, e: &Element) -> Element {
        if self.radical.is_empty() || !self.coin() {
            return self.zero();
        }
        let j = sample::combination(&self.radical, &mut self.rng, self.bound);
        &(e * &j) * e
    }

    /// `e = f + (e - f)` with `f` a spectral idempotent of a compressed
    /// random element.
    fn split(&mut self, e: &Element) -> (Element, Element) {
        if e.is_zero() {
            return (self.zero(), self.zero());
        }
        let w = &(e * &self.random()) * e;
        let d = spectral::drazin(&w).expect("drazin always exists");
        let f = &w * &d.inverse;
        let rest = e - &f;
        if self.coin() {
            (f, rest)
        } else {
            (rest, f)
        }
    }

    /// Three orthogonal idempotents summing to `e`, in random order.
    fn frame(&mut self, e: &Element) -> Vec<Element> {
        let (f1, rest) = self.split(e);
        let (f2, f3) = self.split(&rest);
        let mut parts = vec![f1, f2, f3];
        parts.shuffle(&mut self.rng);
        parts
    }

    fn off_diagonal(&mut self, parts: &[Element]) -> Element {
        let mut acc = self.zero();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if self.coin() {
                    acc = &acc + &(&(&parts[i] * &self.random()) * &parts[j]);
                }
            }
        }
        acc
    }

    /// Strongly invertible element of the corner of `e`; invertible in that
    /// corner when `unit` is set.
    fn strong_in(&mut self, e: &Element, unit: bool) -> Element {
        let parts = self.frame(e);
        let mut s = self.off_diagonal(&parts);
        for f in &parts {
            let sigma = self.sign(!unit);
            s = &s + &f.scale_int(sigma);
        }
        &s + &self.radical_in(e)
    }

    /// Nilpotent element of the corner of `e`.
    fn nilpotent_in(&mut self, e: &Element) -> Element {
        let parts = self.frame(e);
        &self.off_diagonal(&parts) + &self.radical_in(e)
    }

    /// Random polynomial in `m` without constant term, lowest power `low`.
    fn poly_in(&mut self, m: &Element, low: u32) -> Element {
        let mut acc = self.zero();
        let mut power = m.pow(low.max(1));
        for _ in 0..2 {
            if self.coin() {
                acc = &acc + &power.scale(&self.scalar());
            }
            power = &power * m;
        }
        acc
    }

    fn unit(&mut self) -> (Element, Element) {
        for _ in 0..ATTEMPTS {
            let u = sample::element(self.alg, &mut self.rng, self.bound);
            if let Ok(inv) = spectral::inverse(&u) {
                return (u, inv);
            }
        }
        (self.one(), self.one())
    }

    fn conjugate(&mut self, pair: (Element, Element)) -> (Element, Element) {
        if !self.coin() {
            return pair;
        }
        let (u, inv) = self.unit();
        (&(&u * &pair.0) * &inv, &(&u * &pair.1) * &inv)
    }

    // ---- recipes ----

    /// `a ∈ A·q` and `b ∈ (1-q)·A`, each a conjugate of a corner-strong element.
    fn ab_zero(&mut self) -> (Element, Element) {
        let one = self.one();
        let (q, qc) = self.split(&one);
        let s = self.strong_in(&q, false);
        let t = self.strong_in(&qc, false);
        let g = &one + &(&(&qc * &self.random()) * &q);
        let h = &one + &(&(&qc * &self.random()) * &q);
        // g·s·g⁻¹ = g·s and h⁻¹·t·h = t·h
        (&g * &s, &t * &h)
    }

    /// Both elements in the commutative subalgebra spanned by a frame of 1
    /// and one nilpotent per frame corner.
    fn commuting(&mut self) -> (Element, Element) {
        let one = self.one();
        let parts = self.frame(&one);
        let mut a = self.zero();
        let mut b = self.zero();
        for f in &parts {
            if f.is_zero() {
                continue;
            }
            let m = self.nilpotent_in(f);
            let (sa, sb) = (self.sign(true), self.sign(true));
            a = &a + &(&f.scale_int(sa) + &self.poly_in(&m, 1));
            b = &b + &(&f.scale_int(sb) + &self.poly_in(&m, 1));
        }
        (a, b)
    }

    /// `a²b = aba` and `ab² = bab`: `a = σE` and `b` lower triangular with a
    /// diagonal `E`-block that vanishes on the range of the off-diagonal part.
    fn intertwined(&mut self) -> (Element, Element) {
        if self.coin() {
            return self.commuting();
        }
        let one = self.one();
        let (e, ec) = self.split(&one);
        let parts = self.frame(&e);
        let mut s11 = self.zero();
        for f in &parts[..2] {
            let t = self.sign(true);
            s11 = &s11 + &f.scale_int(t);
        }
        let c = &(&ec * &self.random()) * &parts[2];
        let s22 = self.strong_in(&ec, false);
        let sigma = self.sign(false);
        (e.scale_int(sigma), &(&s11 + &c) + &s22)
    }

    /// Product recipe. GNS needs `a²b = aba`: `a = σE` with `b` lower
    /// triangular. PNS needs `ab² = bab`: `b = σE` with `a` upper triangular.
    fn product(&mut self, mode: Mode) -> (Element, Element) {
        if self.coin() {
            return self.intertwined();
        }
        let one = self.one();
        let (e, ec) = self.split(&one);
        let s11 = self.strong_in(&e, false);
        let s22 = self.strong_in(&ec, false);
        let sigma = self.sign(false);
        match mode {
            Mode::Gns => {
                let c = &(&ec * &self.random()) * &e;
                (e.scale_int(sigma), &(&s11 + &c) + &s22)
            }
            Mode::Pns => {
                let c = &(&e * &self.random()) * &ec;
                (&(&s11 + &c) + &s22, e.scale_int(sigma))
            }
        }
    }

    fn nilpotent_pair(&mut self) -> (Element, Element) {
        let rad = jacobson_radical(self.alg);
        match self.rng.gen_range(0..3) {
            0 if rad.dim() > 0 && rad.nilclass() <= 3 => {
                let j = self.radical.clone();
                let a = sample::combination(&j, &mut self.rng, self.bound);
                let b = sample::combination(&j, &mut self.rng, self.bound);
                (a, b)
            }
            1 => {
                // strictly block triangular relative to a frame of 1: cube zero
                let one = self.one();
                let parts = self.frame(&one);
                (self.off_diagonal(&parts), self.off_diagonal(&parts))
            }
            _ => {
                let one = self.one();
                let m = self.nilpotent_in(&one);
                (self.poly_in(&m, 1), self.poly_in(&m, 1))
            }
        }
    }

    /// Nilpotent `m` in the corner of `e` and two polynomials in it whose
    /// product vanishes.
    fn annihilating_polys(&mut self, e: &Element) -> (Element, Element) {
        let m = self.nilpotent_in(e);
        let s = spectral::nilpotency_index(&m).expect("nilpotent by construction") as u32;
        let i = self.rng.gen_range(1..=s.max(1));
        let j = s.saturating_sub(i).max(1);
        (self.poly_in(&m, i), self.poly_in(&m, j))
    }

    /// Recipes for the theorems stated in terms of `b^π`. Here `b = b1 + n2`
    /// with `b1` invertible in the corner of `P` and `n2` nilpotent in the
    /// corner of `Q = 1 - P`, so `b^π = Q`.
    fn pi_conditioned(&mut self, id: TheoremId) -> (Element, Element) {
        let one = self.one();
        match id {
            TheoremId::L4 => {
                let (p, q) = self.split(&one);
                let b1 = self.strong_in(&p, true);
                let m = self.nilpotent_in(&q);
                let n2 = self.poly_in(&m, 1);
                let a = &(&(&p * &self.random()) * &q) + &self.poly_in(&m, 1);
                (a, &b1 + &n2)
            }
            TheoremId::T3 => {
                let (p, q) = self.split(&one);
                let b1 = self.strong_in(&p, true);
                let (f, rest) = self.split(&q);
                let m = self.nilpotent_in(&rest);
                let n2 = self.poly_in(&m, 1);
                let sigma = self.sign(true);
                let y = &f.scale_int(sigma) + &self.poly_in(&m, 1);
                let a = &(&(&p * &self.random()) * &q) + &y;
                (a, &b1 + &n2)
            }
            TheoremId::L5 => {
                let (p, q) = self.split(&one);
                let b1 = self.strong_in(&p, true);
                let (y, n2) = self.annihilating_polys(&q);
                let a = &(&(&p * &self.random()) * &q) + &y;
                (a, &b1 + &n2)
            }
            TheoremId::T4 => {
                let parts = self.frame(&one);
                let (p1, p2, p3) = (&parts[0], &parts[1], &parts[2]);
                let a1 = self.strong_in(p1, true);
                let b2 = self.strong_in(p2, true);
                let (na, nb) = if self.coin() {
                    self.annihilating_polys(p3)
                } else {
                    (self.nilpotent_in(p3), self.zero())
                };
                let x = if nb.is_zero() {
                    &(p1 * &self.random()) * p3
                } else {
                    self.zero()
                };
                (&(&a1 + &x) + &na, &b2 + &nb)
            }
            TheoremId::Theor => {
                let (p, q) = self.split(&one);
                let a1 = self.strong_in(&p, true);
                let b1 = self.strong_in(&p, false);
                let b4 = &(&q * &self.random()) * &p;
                let (f, rest) = self.split(&q);
                let (a2, tail) = self.annihilating_polys(&rest);
                let tau = self.sign(true);
                let b2 = &f.scale_int(tau) + &tail;
                (&a1 + &a2, &(&b1 + &b4) + &b2)
            }
            other => unreachable!("{other} is not a pi-conditioned theorem"),
        }
    }

    fn draw(&mut self, recipe: &PairRecipe) -> (Element, Element) {
        let pair = match recipe.theorem {
            TheoremId::T2 => self.ab_zero(),
            TheoremId::Theo => self.commuting(),
            TheoremId::Product => self.product(recipe.mode),
            TheoremId::Equiv4 => self.intertwined(),
            TheoremId::MyLemma => self.nilpotent_pair(),
            id => self.pi_conditioned(id),
        };
        self.conjugate(pair)
    }
}

/// One pair satisfying every hypothesis of `recipe.theorem`, checked
/// before returning. Deterministic in `(recipe, instance)`.
pub fn generate_pair(
    alg: &Arc<Algebra>,
    recipe: &PairRecipe,
    instance: u64,
) -> Result<(Element, Element)> {
    let mut g = Gen {
        alg,
        rng: recipe.rng(instance),
        bound: recipe.entry_bound,
        n: recipe.n,
        radical: jacobson_radical(alg).elements(alg),
    };
    for _ in 0..ATTEMPTS {
        let (a, b) = g.draw(recipe);
        if theorem_check(recipe.theorem, &a, &b, recipe.n, recipe.mode)?.hypotheses_hold() {
            return Ok((a, b));
        }
    }
    Err(Error::RecipeInfeasible(format!(
        "{} found no pair in {} after {ATTEMPTS} attempts",
        recipe.label(),
        alg.name().unwrap_or("algebra")
    )))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub theorem: String,
    pub mode: Mode,
    pub n: u32,
    pub seed: u64,
    pub count: u64,
    pub verified: u64,
    pub vacuous: u64,
    pub violations: u64,
    pub infeasible: u64,
    /// Lowest-index violating instance, with its replay witness.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<TheoremReport>,
}

enum Outcome {
    Report(Box<TheoremReport>),
    Infeasible,
}

/// Checks `count` generated instances of `theorem` in parallel. The result
/// depends only on the arguments, not on scheduling.
pub fn fuzz(
    alg: &Arc<Algebra>,
    theorem: TheoremId,
    mode: Mode,
    n: u32,
    count: u64,
    seed: u64,
) -> Result<FuzzSummary> {
    let recipe = PairRecipe::new(theorem, mode, n, seed);
    crate::strong::StrongKind::new(mode, n)?;
    // initialize the radical once before fanning out
    jacobson_radical(alg);
    let outcomes: Vec<Outcome> = (0..count)
        .into_par_iter()
        .map(|i| match generate_pair(alg, &recipe, i) {
            Ok((a, b)) => {
                let mut r =
                    theorem_check(theorem, &a, &b, n, mode).expect("pair shares one algebra");
                r.witness = Some(Witness {
                    recipe: recipe.label(),
                    seed,
                    instance: i,
                    a: ElementDoc::from_element(&a),
                    b: ElementDoc::from_element(&b),
                });
                Outcome::Report(Box::new(r))
            }
            Err(Error::RecipeInfeasible(_)) => Outcome::Infeasible,
            Err(e) => panic!("generator failed: {e}"),
        })
        .collect();

    let mut summary = FuzzSummary {
        theorem: theorem.name().to_string(),
        mode,
        n,
        seed,
        count,
        verified: 0,
        vacuous: 0,
        violations: 0,
        infeasible: 0,
        first_violation: None,
    };
    for outcome in outcomes {
        match outcome {
            Outcome::Infeasible => summary.infeasible += 1,
            Outcome::Report(r) => match r.verdict {
                Verdict::Verified => summary.verified += 1,
                Verdict::Vacuous => summary.vacuous += 1,
                Verdict::Violation => {
                    summary.violations += 1;
                    if summary.first_violation.is_none() {
                        summary.first_violation = Some(*r);
                    }
                }
            },
        }
    }
    Ok(summary)
}
