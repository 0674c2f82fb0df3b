//! Best-effort floating-point inverses for full matrix algebras.
//!
//! Ranks and nilpotency are decided by magnitude with relative tolerance
//! 1e-9; the Drazin inverse is `A^k (A^{2k+1})^+ A^k` with `k` the index.
//! Nothing here is exact, and nothing here feeds the acceptance checks.

use std::path::Path;

use nalgebra::DMatrix;
use serde_json::{json, Value};

use crate::{emit, load_algebra, read, Failure, Outcome};

const TOL: f64 = 1e-9;

fn parse_entry(v: &Value, at: &str) -> Result<f64, Failure> {
    let bad = || Failure::input(format!("{at}: expected a decimal or p/q entry"));
    match v {
        Value::Number(n) => n.as_f64().ok_or_else(bad),
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((p, q)) => {
                    let (p, q): (f64, f64) = (
                        p.trim().parse().map_err(|_| bad())?,
                        q.trim().parse().map_err(|_| bad())?,
                    );
                    if q == 0.0 {
                        return Err(bad());
                    }
                    Ok(p / q)
                }
                None => s.parse().map_err(|_| bad()),
            }
        }
        _ => Err(bad()),
    }
}

fn parse_matrix(text: &str, k: usize) -> Result<DMatrix<f64>, Failure> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| Failure::input(format!("invalid JSON: {e}")))?;
    let rows = doc
        .get("matrix")
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::input("matrix: numeric mode needs a \"matrix\" field"))?;
    if rows.len() != k {
        return Err(Failure::input(format!(
            "matrix: expected {k} rows, found {}",
            rows.len()
        )));
    }
    let mut m = DMatrix::zeros(k, k);
    for (r, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|row| row.len() == k)
            .ok_or_else(|| Failure::input(format!("matrix[{r}]: expected {k} entries")))?;
        for (c, v) in row.iter().enumerate() {
            m[(r, c)] = parse_entry(v, &format!("matrix[{r}][{c}]"))?;
        }
    }
    Ok(m)
}

fn rank(m: &DMatrix<f64>, scale: f64) -> usize {
    let sv = m.clone().svd(false, false).singular_values;
    sv.iter().filter(|&&s| s > TOL * scale).count()
}

fn is_negligible(m: &DMatrix<f64>, scale: f64) -> bool {
    m.norm() <= TOL * scale
}

/// Nilpotent iff `N^k` is negligible relative to `|N|^k`.
fn nilpotent(n: &DMatrix<f64>, scale: f64) -> bool {
    let k = n.nrows();
    let size = n.norm();
    if is_negligible(n, scale) {
        return true;
    }
    let power = pow(n, k);
    power.norm() <= TOL * size.powi(k as i32).max(scale)
}

fn pow(m: &DMatrix<f64>, e: usize) -> DMatrix<f64> {
    (0..e).fold(DMatrix::identity(m.nrows(), m.ncols()), |acc, _| &acc * m)
}

fn to_json(m: &DMatrix<f64>) -> Value {
    Value::from(
        (0..m.nrows())
            .map(|r| (0..m.ncols()).map(|c| m[(r, c)]).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    )
}

pub(crate) fn run(
    algebra: &Path,
    element: &Path,
    plain_drazin: bool,
    n: u32,
    weighted: bool,
) -> Outcome {
    if weighted {
        return Err(Failure::input(
            "--numeric supports drazin, gns and pns only",
        ));
    }
    let alg = load_algebra(algebra)?;
    let k = match alg.layout() {
        Some(l) if l.positions.len() == l.order * l.order => l.order,
        _ => return Err(Failure::input("--numeric needs a full matrix algebra")),
    };
    let a = parse_matrix(&read(element)?, k).map_err(|mut f| {
        f.message = format!("{}: {}", element.display(), f.message);
        f
    })?;
    if n == 0 {
        return Err(Failure::input("strong exponent n must be at least 1"));
    }
    let scale = a.norm().max(1.0);

    let mut index = 0;
    let mut r = k;
    loop {
        let next = rank(&pow(&a, index + 1), scale.powi(index as i32 + 1));
        if next == r {
            break;
        }
        r = next;
        index += 1;
    }
    let ak = pow(&a, index);
    let big = pow(&a, 2 * index + 1);
    let pinv = big
        .clone()
        .pseudo_inverse(TOL * big.norm().max(1.0))
        .map_err(|e| Failure::input(format!("pseudo-inverse failed: {e}")))?;
    let x = &ak * pinv * &ak;
    let pi = DMatrix::identity(k, k) - &a * &x;

    if !plain_drazin {
        // in a matrix algebra the radical is zero, so both modes test nilpotency
        let defect = &a - pow(&a, n as usize + 1);
        if !nilpotent(&defect, scale) {
            return Err(Failure {
                code: 4,
                message: format!("element is not g{n}s/p{n}s-Drazin invertible (numerically): a − a^{} not nilpotent", n + 1),
            });
        }
    }
    let residuals = json!({
        "commutes": (&a * &x - &x * &a).norm(),
        "xax_minus_x": (&x * &a * &x - &x).norm(),
        "index_power": (pow(&a, index + 1) * &x - &ak).norm(),
        "pi_idempotent": (&pi * &pi - &pi).norm(),
    });
    emit(&json!({
        "numeric": true,
        "kind": if plain_drazin { "Drazin".to_owned() } else { format!("g{n}s/p{n}s-Drazin") },
        "index": index,
        "inverse": to_json(&x),
        "spectral_idempotent": to_json(&pi),
        "residuals": residuals,
        "tolerance": TOL,
    }));
    eprintln!("numeric inverse (index {index}), best effort with relative tolerance {TOL:e}");
    Ok(0)
}
