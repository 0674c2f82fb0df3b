//! Jacobson radical of a finite-dimensional algebra over ℚ.
//!
//! Over a field of characteristic zero the radical is the kernel of the
//! regular trace form: `J = { x : tr(L_{x·y}) = 0 for every y }`, where
//! `L_z` is left multiplication by `z`. The basis is computed once per
//! algebra and cached; later membership queries reuse it.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::linalg::{self, Echelon, Vector};
use crate::rational::Rational;
use crate::sample;
use crate::spectral;

const POST_CHECK_SAMPLES: usize = 50;
const POST_CHECK_SEED: u64 = 0x4a61_636f_6273_6f6e;

#[derive(Debug, Clone)]
pub struct RadicalBasis {
    echelon: Echelon,
    nilclass: usize,
}

impl RadicalBasis {
    /// Basis vectors of `J`, in reduced row-echelon form.
    pub fn basis(&self) -> &[Vector] {
        self.echelon.rows()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Smallest `N >= 1` with `J^N = 0`.
    pub fn nilclass(&self) -> usize {
        self.nilclass
    }

    pub fn contains(&self, coords: &[Rational]) -> bool {
        self.echelon.contains(&coords.to_vec())
    }

    pub fn elements(&self, alg: &Arc<Algebra>) -> Vec<Element> {
        self.basis()
            .iter()
            .map(|v| {
                alg.element(v.clone())
                    .expect("radical basis has algebra dimension")
            })
            .collect()
    }
}

/// Gram matrix of the trace form, `g[i][j] = tr(L_{e_i e_j})`.
pub fn trace_form(alg: &Arc<Algebra>) -> Vec<Vector> {
    let basis = alg.basis_elements();
    basis
        .iter()
        .map(|ei| basis.iter().map(|ej| (ei * ej).trace()).collect())
        .collect()
}

/// The radical of `alg`, computed on first use and cached.
pub fn jacobson_radical(alg: &Arc<Algebra>) -> &RadicalBasis {
    alg.radical.get_or_init(|| compute(alg))
}

fn compute(alg: &Arc<Algebra>) -> RadicalBasis {
    let d = alg.dim();
    // x is in the kernel iff Σ_i x_i g[i][j] = 0 for all j, i.e. gᵀ x = 0.
    let g = trace_form(alg);
    let kernel = linalg::nullspace(&linalg::transpose(&g, d), d);
    let echelon = Echelon::from_vectors(d, &kernel);
    let nilclass = nilpotency_class(alg, echelon.rows());
    let radical = RadicalBasis { echelon, nilclass };
    post_check(alg, &radical);
    radical
}

fn nilpotency_class(alg: &Arc<Algebra>, basis: &[Vector]) -> usize {
    let d = alg.dim();
    let gens: Vec<Element> = basis
        .iter()
        .map(|v| alg.element(v.clone()).unwrap())
        .collect();
    let mut power = gens.clone();
    let mut class = 1;
    while !power.is_empty() {
        assert!(class <= d + 1, "trace-form kernel is not a nilpotent ideal");
        let products: Vec<Vector> = power
            .iter()
            .flat_map(|x| gens.iter().map(move |j| (x * j).into_coords()))
            .collect();
        let next = Echelon::from_vectors(d, &products);
        power = next
            .rows()
            .iter()
            .map(|v| alg.element(v.clone()).unwrap())
            .collect();
        class += 1;
    }
    class
}

/// `1 + j·y` must be invertible for radical `j` and arbitrary `y`; a failure
/// here is a defect in the trace-form computation.
fn post_check(alg: &Arc<Algebra>, radical: &RadicalBasis) {
    if radical.dim() == 0 {
        return;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(POST_CHECK_SEED);
    let basis = radical.elements(alg);
    for _ in 0..POST_CHECK_SAMPLES {
        let j = sample::combination(&basis, &mut rng, 3);
        let y = sample::element(alg, &mut rng, 3);
        let t = &alg.one() + &(&j * &y);
        assert!(
            spectral::is_invertible(&t),
            "radical post-check failed: 1 + j·y not invertible for j = {j}, y = {y}"
        );
    }
}

pub fn in_radical(a: &Element) -> bool {
    jacobson_radical(a.algebra()).contains(a.coords())
}

/// True when some power `a^k`, `1 <= k <= dim`, lies in the radical. The
/// bound suffices: a nilpotent element of a `d`-dimensional algebra has
/// `a^d = 0`, and membership in `√J` forces nilpotency since `J` itself is
/// nilpotent.
pub fn in_sqrt_radical(a: &Element) -> bool {
    radical_exponent(a, a.algebra().dim()).is_some()
}

/// Smallest `k <= bound` with `x^k` in the radical.
pub fn radical_exponent(a: &Element, bound: usize) -> Option<usize> {
    let rad = jacobson_radical(a.algebra());
    let mut p = a.clone();
    for k in 1..=bound {
        if rad.contains(p.coords()) {
            return Some(k);
        }
        p = &p * a;
    }
    None
}
