//! Generalized and pseudo n-strong Drazin inverses, and their weighted forms.
//!
//! An element `a` is strongly invertible of order `n` when some
//! `x ∈ Comm²(a)` satisfies `x·a·x = x` and `aⁿ - a·x` is small: nilpotent
//! in the generalized (GNS) family, or with a power in the Jacobson radical
//! in the pseudo (PNS) family. Such an `x` is always the Drazin inverse, and
//! it exists exactly when `a - a^{n+1}` (equivalently `aⁿ - a^{2n}`) is
//! small. Both defect forms are evaluated on every query and must agree.
//!
//! Weighted variants use the product `a * b = a·w·b` for a fixed nonzero
//! weight `w`, with `*`-powers `a^{*1} = a` and `a^{*m} = a·(w·a)^{m-1}`.
//! The weighted algebra has no unit unless `w` is invertible, so it is never
//! built as an [`Algebra`](crate::algebra::Algebra). Weighted statements are
//! evaluated through `a·w` and `w·a`, which share their spectrum with `a` in
//! the weighted product.

use std::fmt;

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::radical::{self, radical_exponent};
pub use crate::report::Mode;
use crate::report::TheoremReport;
use crate::spectral::{self, is_nilpotent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StrongKind {
    mode: Mode,
    n: u32,
}

impl StrongKind {
    pub fn new(mode: Mode, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidExponent);
        }
        Ok(StrongKind { mode, n })
    }

    pub fn gns(n: u32) -> Result<Self> {
        StrongKind::new(Mode::Gns, n)
    }

    pub fn pns(n: u32) -> Result<Self> {
        StrongKind::new(Mode::Pns, n)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn with_n(&self, n: u32) -> Self {
        StrongKind::new(self.mode, n).expect("exponent stays positive")
    }
}

impl fmt::Display for StrongKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            Mode::Gns => write!(f, "g{}s-Drazin", self.n),
            Mode::Pns => write!(f, "p{}s-Drazin", self.n),
        }
    }
}

/// GNS: nilpotent. PNS: some power lies in the Jacobson radical.
pub fn is_small(x: &Element, mode: Mode) -> bool {
    match mode {
        Mode::Gns => is_nilpotent(x),
        Mode::Pns => radical::in_sqrt_radical(x),
    }
}

/// `a - a^{n+1}`
pub fn linear_defect(a: &Element, n: u32) -> Element {
    a - &a.pow(n + 1)
}

/// `aⁿ - a^{2n}`
pub fn power_defect(a: &Element, n: u32) -> Element {
    &a.pow(n) - &a.pow(2 * n)
}

/// Decides strong invertibility through both defect forms and panics if
/// they disagree, since the two are provably equivalent.
pub fn is_strong_invertible(a: &Element, kind: StrongKind) -> bool {
    let linear = is_small(&linear_defect(a, kind.n), kind.mode);
    let power = is_small(&power_defect(a, kind.n), kind.mode);
    assert_eq!(
        linear, power,
        "defect forms disagree for {kind} on {a}: a - a^(n+1) small = {linear}, a^n - a^2n small = {power}"
    );
    linear
}

fn superscript(m: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    m.to_string()
        .chars()
        .map(|c| DIGITS[c as usize - '0' as usize])
        .collect()
}

/// The strong inverse, which coincides with the Drazin inverse; the defining
/// axioms are re-verified before returning.
pub fn strong_inverse(a: &Element, kind: StrongKind) -> Result<Element> {
    if !is_strong_invertible(a, kind) {
        return Err(Error::NotStrongInvertible {
            kind: kind.to_string(),
            reason: format!(
                "a − a{} not {}",
                superscript(kind.n + 1),
                match kind.mode {
                    Mode::Gns => "nilpotent",
                    Mode::Pns => "in the square root of the radical",
                }
            ),
        });
    }
    let x = spectral::drazin(a)?.inverse;
    let report = verify_strong_axioms(a, &x, kind);
    if !report.conclusions_hold() {
        return Err(Error::Inconsistent(format!(
            "{kind} inverse of {a} fails {:?}",
            report.failed_conclusions()
        )));
    }
    Ok(x)
}

/// Checks the three defining axioms of `x` as a strong inverse of `a`:
/// `x ∈ Comm²(a)`, `x·a·x = x`, and smallness of `aⁿ - a·x`.
pub fn verify_strong_axioms(a: &Element, x: &Element, kind: StrongKind) -> TheoremReport {
    let mut r = TheoremReport::new("strong_axioms", kind.mode, kind.n);
    r.conclusion("double_commutant", x.in_double_commutant(a));
    r.conclusion("xax_eq_x", &(&(x * a) * x) == x);
    let defect = &a.pow(kind.n) - &(a * x);
    let small = match kind.mode {
        Mode::Gns => is_nilpotent(&defect),
        Mode::Pns => radical_exponent(&defect, a.algebra().dim()).is_some(),
    };
    r.conclusion("defect_small", small);
    r.finish()
}

/// Implications between orders of strong invertibility, as clauses of one
/// report: order 1 implies order n, order 2 implies order 2n, and order n
/// implies order 2n. Whenever a clause fires, the Drazin inverse must also
/// pass the axioms of the larger order, so all these inverses coincide.
pub fn hierarchy_checks(a: &Element, n: u32, mode: Mode) -> Result<TheoremReport> {
    let kind = StrongKind::new(mode, n)?;
    let drazin_inverse = spectral::drazin(a)?.inverse;
    let mut r = TheoremReport::new("HIERARCHY", mode, n);
    for (name, from, to) in [
        ("sd_implies_nsd", 1, n),
        ("h_implies_2nsd", 2, 2 * n),
        ("nsd_implies_2nsd", n, 2 * n),
    ] {
        let antecedent = is_strong_invertible(a, kind.with_n(from));
        r.implication(name, antecedent, || {
            let target = kind.with_n(to);
            is_strong_invertible(a, target)
                && verify_strong_axioms(a, &drazin_inverse, target).conclusions_hold()
        });
    }
    Ok(r.finish())
}

/// `x` is a pseudo Drazin inverse of `a`: `x ∈ Comm²(a)`, `x·a·x = x`, and
/// `a^k - a^{k+1}·x ∈ J` for some `k`. Exponents up to `dim + 1` are tried,
/// which covers every Drazin index.
pub fn is_pseudo_drazin_inverse(a: &Element, x: &Element) -> bool {
    if !x.in_double_commutant(a) || &(&(x * a) * x) != x {
        return false;
    }
    let bound = a.algebra().dim() as u32 + 1;
    let mut ak = a.clone();
    for _ in 1..=bound {
        if radical::in_radical(&(&ak - &(&(&ak * a) * x))) {
            return true;
        }
        ak = &ak * a;
    }
    false
}

/// A nonzero weight `w` defining the product `a * b = a·w·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedContext {
    w: Element,
}

impl WeightedContext {
    /// Rejects the zero weight and checks associativity of the weighted
    /// product on all basis triples.
    pub fn new(w: Element) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::ZeroWeight);
        }
        let alg = w.algebra();
        let basis = alg.basis_elements();
        let left: Vec<Element> = basis.iter().map(|e| e * &w).collect();
        for (i, ew) in left.iter().enumerate() {
            for (j, ej) in basis.iter().enumerate() {
                let ij = ew * ej;
                let ijw = &ij * &w;
                for (k, ek) in basis.iter().enumerate() {
                    let lhs = &ijw * ek;
                    let rhs = ew * &(&left[j] * ek);
                    if lhs != rhs {
                        return Err(Error::Associativity(i, j, k));
                    }
                }
            }
        }
        Ok(WeightedContext { w })
    }

    pub fn weight(&self) -> &Element {
        &self.w
    }

    /// `a * b = a·w·b`
    pub fn star(&self, a: &Element, b: &Element) -> Element {
        &(a * &self.w) * b
    }

    /// `a^{*m} = a·(w·a)^{m-1}` for `m >= 1`.
    pub fn star_pow(&self, a: &Element, m: u32) -> Element {
        assert!(m >= 1, "weighted powers start at 1");
        a * &(&self.w * a).pow(m - 1)
    }
}

/// The three independent evaluations of weighted strong invertibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedRoutes {
    /// `a·w` strongly invertible.
    pub via_aw: bool,
    /// `w·a` strongly invertible.
    pub via_wa: bool,
    /// `a^{*n} - a^{*2n}` small in the weighted product.
    pub via_star_powers: bool,
}

impl WeightedRoutes {
    pub fn agree(&self) -> bool {
        self.via_aw == self.via_wa && self.via_wa == self.via_star_powers
    }
}

fn star_small(ctx: &WeightedContext, x: &Element, mode: Mode) -> bool {
    match mode {
        // x is quasinilpotent for the weighted product iff x·w is nilpotent
        Mode::Gns => is_nilpotent(&(x * ctx.weight())),
        // some *-power of x in J; x^{*(k+2)} ∈ J whenever (x·w)^k ∈ J, so
        // exponents up to dim + 2 suffice
        Mode::Pns => {
            let bound = x.algebra().dim() as u32 + 2;
            (1..=bound).any(|k| radical::in_radical(&ctx.star_pow(x, k)))
        }
    }
}

pub fn weighted_routes(a: &Element, ctx: &WeightedContext, kind: StrongKind) -> WeightedRoutes {
    let w = ctx.weight();
    let n = kind.n;
    let star_defect = &ctx.star_pow(a, n) - &ctx.star_pow(a, 2 * n);
    WeightedRoutes {
        via_aw: is_strong_invertible(&(a * w), kind),
        via_wa: is_strong_invertible(&(w * a), kind),
        via_star_powers: star_small(ctx, &star_defect, kind.mode),
    }
}

/// Weighted strong invertibility; panics if the three routes disagree.
pub fn is_weighted_strong_invertible(a: &Element, ctx: &WeightedContext, kind: StrongKind) -> bool {
    let routes = weighted_routes(a, ctx, kind);
    assert!(
        routes.agree(),
        "weighted routes disagree for {kind} on a = {a}, w = {}: {routes:?}",
        ctx.w
    );
    routes.via_aw
}

/// Weighted inverse `((a·w)^d)²·a`, verified against the weighted axioms.
pub fn weighted_strong_inverse(
    a: &Element,
    ctx: &WeightedContext,
    kind: StrongKind,
) -> Result<Element> {
    if !is_weighted_strong_invertible(a, ctx, kind) {
        return Err(Error::NotWeightedStrongInvertible {
            kind: kind.to_string(),
            reason: format!("a·w is not {kind} invertible"),
        });
    }
    let aw_inv = strong_inverse(&(a * ctx.weight()), kind)?;
    let x = &(&aw_inv * &aw_inv) * a;
    let report = verify_weighted_axioms(a, &x, ctx, kind);
    if !report.conclusions_hold() {
        return Err(Error::Inconsistent(format!(
            "weighted {kind} inverse of {a} fails {:?}",
            report.failed_conclusions()
        )));
    }
    Ok(x)
}

/// `x*a = a*x`, `x*a*x = x`, and smallness of `a^{*n} - a*x` in the weighted product.
pub fn verify_weighted_axioms(
    a: &Element,
    x: &Element,
    ctx: &WeightedContext,
    kind: StrongKind,
) -> TheoremReport {
    let mut r = TheoremReport::new("weighted_axioms", kind.mode, kind.n);
    let xa = ctx.star(x, a);
    r.conclusion("star_commute", xa == ctx.star(a, x));
    r.conclusion("xax_eq_x", &ctx.star(&xa, x) == x);
    let defect = &ctx.star_pow(a, kind.n) - &ctx.star(a, x);
    r.conclusion("defect_small", star_small(ctx, &defect, kind.mode));
    r.finish()
}
