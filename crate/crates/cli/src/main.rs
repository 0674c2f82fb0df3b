//! `drazin`: batch front end for the exact Drazin-family toolkit.
//!
//! Every command writes one JSON document to stdout and a short human
//! summary to stderr. Exit codes: 0 success, 2 malformed input or unknown
//! theorem, 3 invalid algebra, 4 not invertible / not idempotent,
//! 5 theorem violation, 1 internal failure.

mod numeric;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use drazin_core::algebra::{matrix_algebra, Algebra, Element};
use drazin_core::format::{element_json, parse_algebra, parse_element};
use drazin_core::pierce::pierce;
use drazin_core::radical::jacobson_radical;
use drazin_core::rational::format as fmt_rational;
use drazin_core::recipes::fuzz;
use drazin_core::spectral::{self, is_nilpotent};
use drazin_core::strong::{
    strong_inverse, verify_strong_axioms, verify_weighted_axioms, weighted_strong_inverse,
    StrongKind, WeightedContext,
};
use drazin_core::theorems::{theorem_check, TheoremId};
use drazin_core::{Error, Mode, Verdict};

#[derive(Parser)]
#[command(
    name = "drazin",
    version,
    about = "Exact Drazin, strong and weighted inverses over finite-dimensional rational algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load and validate an algebra document.
    Validate { algebra: PathBuf },
    /// Compute an inverse of one element and certify it.
    Inverse {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        element: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Drazin)]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Weight element, required for wgns and wpns.
        #[arg(long)]
        weight: Option<PathBuf>,
        /// Floating-point mode for matrix algebras (best effort, decimal entries accepted).
        #[arg(long)]
        numeric: bool,
    },
    /// Evaluate one theorem on a given pair.
    Check {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Gns)]
        mode: ModeArg,
    },
    /// Evaluate one theorem on generated pairs.
    Fuzz {
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 200)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Defaults to 2x2 matrices.
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Gns)]
        mode: ModeArg,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Print a basis of the Jacobson radical.
    Radical { algebra: PathBuf },
    /// Split an element into its four corners with respect to an idempotent.
    Pierce {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        element: PathBuf,
        #[arg(long)]
        idempotent: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Drazin,
    Gns,
    Pns,
    Wgns,
    Wpns,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Gns,
    Pns,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Gns => Mode::Gns,
            ModeArg::Pns => Mode::Pns,
        }
    }
}

pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub(crate) fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Document { .. }
            | Error::ParseRational(_)
            | Error::Shape(_)
            | Error::UnknownTheorem(_)
            | Error::InvalidExponent
            | Error::AlgebraMismatch => 2,
            Error::ZeroDimension
            | Error::ZeroOrder
            | Error::Associativity(..)
            | Error::UnitLaw { .. } => 3,
            Error::NotInvertible
            | Error::NotIdempotent
            | Error::ZeroCorner
            | Error::ZeroWeight
            | Error::NotStrongInvertible { .. }
            | Error::NotWeightedStrongInvertible { .. } => 4,
            Error::RecipeInfeasible(_) | Error::Inconsistent(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<Arc<Algebra>, Failure> {
    parse_algebra(&read(path)?).map_err(|e| located(path, e))
}

fn load_element(alg: &Arc<Algebra>, path: &Path) -> Result<Element, Failure> {
    parse_element(alg, &read(path)?).map_err(|e| located(path, e))
}

fn located(path: &Path, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

fn emit(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    );
}

fn coords_json(coords: &[drazin_core::Rational]) -> Value {
    Value::from(coords.iter().map(fmt_rational).collect::<Vec<_>>())
}

fn cmd_validate(path: &Path) -> Outcome {
    let alg = load_algebra(path)?;
    let rad = jacobson_radical(&alg);
    emit(&json!({
        "valid": true,
        "name": alg.name(),
        "dim": alg.dim(),
        "unit": coords_json(alg.unit_coords()),
        "radical_dim": rad.dim(),
        "nilclass": rad.nilclass(),
    }));
    eprintln!("valid: dim {}, radical dim {}", alg.dim(), rad.dim());
    Ok(0)
}

fn certificate(checks: &[(&str, bool)]) -> (Value, bool) {
    let map: serde_json::Map<String, Value> = checks
        .iter()
        .map(|(k, v)| ((*k).to_owned(), Value::Bool(*v)))
        .collect();
    (Value::Object(map), checks.iter().all(|(_, v)| *v))
}

fn cmd_inverse(
    algebra: &Path,
    element: &Path,
    kind: Kind,
    n: u32,
    weight: Option<&Path>,
    numeric: bool,
) -> Outcome {
    if numeric {
        return numeric::run(
            algebra,
            element,
            kind == Kind::Drazin,
            n,
            matches!(kind, Kind::Wgns | Kind::Wpns),
        );
    }
    let alg = load_algebra(algebra)?;
    let a = load_element(&alg, element)?;
    let mode = match kind {
        Kind::Gns | Kind::Wgns | Kind::Drazin => Mode::Gns,
        Kind::Pns | Kind::Wpns => Mode::Pns,
    };
    let strong = StrongKind::new(mode, n)?;
    let (label, x, data, checks): (String, Element, _, Vec<(String, bool)>) = match kind {
        Kind::Drazin => {
            let d = spectral::drazin(&a)?;
            let x = d.inverse.clone();
            let s = d.index as u32;
            let checks = vec![
                ("commutes".to_owned(), &a * &x == &x * &a),
                ("xax_eq_x".to_owned(), (&(&x * &a) * &x) == x),
                ("index_power".to_owned(), &a.pow(s + 1) * &x == a.pow(s)),
                ("pi_idempotent".to_owned(), d.pi.is_idempotent()),
                ("a_pi_nilpotent".to_owned(), is_nilpotent(&(&a * &d.pi))),
                (
                    "a_plus_pi_invertible".to_owned(),
                    spectral::is_invertible(&(&a + &d.pi)),
                ),
            ];
            ("Drazin".to_owned(), x, d, checks)
        }
        Kind::Gns | Kind::Pns => {
            let x = strong_inverse(&a, strong)?;
            let report = verify_strong_axioms(&a, &x, strong);
            let checks = report.conclusions.into_iter().collect();
            (strong.to_string(), x, spectral::drazin(&a)?, checks)
        }
        Kind::Wgns | Kind::Wpns => {
            let Some(wpath) = weight else {
                return Err(Failure::input("--weight is required for wgns and wpns"));
            };
            let w = load_element(&alg, wpath)?;
            let ctx = WeightedContext::new(w.clone())?;
            let x = weighted_strong_inverse(&a, &ctx, strong)?;
            let report = verify_weighted_axioms(&a, &x, &ctx, strong);
            let checks = report.conclusions.into_iter().collect();
            (
                format!("weighted {strong}"),
                x,
                spectral::drazin(&(&a * &w))?,
                checks,
            )
        }
    };
    let pairs: Vec<(&str, bool)> = checks.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    let (cert, all) = certificate(&pairs);
    let mut out = json!({
        "kind": label,
        "inverse": element_json(&x),
        "index": data.index,
        "spectral_idempotent": element_json(&data.pi),
        "certificate": cert,
        "certified": all,
    });
    if kind != Kind::Drazin {
        out["n"] = json!(n);
    }
    if matches!(kind, Kind::Wgns | Kind::Wpns) {
        out["index_of"] = json!("aw");
    }
    emit(&out);
    eprintln!(
        "{label} inverse: {x} (index {}, certificate {})",
        data.index,
        if all { "passes" } else { "FAILS" }
    );
    Ok(if all { 0 } else { 1 })
}

fn parse_theorem(name: &str) -> Result<TheoremId, Failure> {
    name.parse::<TheoremId>().map_err(Failure::from)
}

fn cmd_check(theorem: &str, algebra: &Path, a: &Path, b: &Path, n: u32, mode: Mode) -> Outcome {
    let id = parse_theorem(theorem)?;
    let alg = load_algebra(algebra)?;
    let a = load_element(&alg, a)?;
    let b = load_element(&alg, b)?;
    let report = theorem_check(id, &a, &b, n, mode)?;
    println!("{}", report.to_json());
    eprintln!(
        "{} {} n={}: {}",
        report.theorem,
        report.mode,
        report.n,
        verdict_name(report.verdict)
    );
    for (name, v) in &report.hypotheses {
        if !v {
            eprintln!("  hypothesis {name} fails");
        }
    }
    for name in report.failed_conclusions() {
        eprintln!("  conclusion {name} fails");
    }
    for (name, v) in &report.observations {
        eprintln!("  {name}: {v}");
    }
    Ok(if report.verdict == Verdict::Violation {
        5
    } else {
        0
    })
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Verified => "VERIFIED",
        Verdict::Vacuous => "VACUOUS",
        Verdict::Violation => "VIOLATION",
    }
}

fn cmd_fuzz(
    theorem: &str,
    count: u64,
    seed: u64,
    algebra: Option<&Path>,
    mode: Mode,
    n: u32,
) -> Outcome {
    let id = parse_theorem(theorem)?;
    let alg = match algebra {
        Some(p) => load_algebra(p)?,
        None => matrix_algebra(2)?,
    };
    let summary = fuzz(&alg, id, mode, n, count, seed)?;
    emit(&serde_json::to_value(&summary).expect("summaries serialize"));
    eprintln!(
        "{} {} n={} seed {}: {} instances, {} verified, {} vacuous, {} violations, {} infeasible",
        summary.theorem,
        summary.mode,
        summary.n,
        summary.seed,
        summary.count,
        summary.verified,
        summary.vacuous,
        summary.violations,
        summary.infeasible
    );
    Ok(if summary.violations > 0 { 5 } else { 0 })
}

fn cmd_radical(path: &Path) -> Outcome {
    let alg = load_algebra(path)?;
    let rad = jacobson_radical(&alg);
    let basis: Vec<Value> = rad.elements(&alg).iter().map(element_json).collect();
    emit(&json!({ "dim": rad.dim(), "nilclass": rad.nilclass(), "basis": basis }));
    eprintln!("radical dim {}, nilclass {}", rad.dim(), rad.nilclass());
    for e in rad.elements(&alg) {
        eprintln!("  {e}");
    }
    Ok(0)
}

fn cmd_pierce(algebra: &Path, element: &Path, idempotent: &Path) -> Outcome {
    let alg = load_algebra(algebra)?;
    let y = load_element(&alg, element)?;
    let p = load_element(&alg, idempotent)?;
    let blocks = pierce(&y, &p)?;
    let [[pp, pq], [qp, qq]] = &blocks.blocks;
    emit(&json!({
        "p": element_json(&blocks.p),
        "pyp": element_json(pp),
        "py(1-p)": element_json(pq),
        "(1-p)yp": element_json(qp),
        "(1-p)y(1-p)": element_json(qq),
    }));
    eprintln!("pyp = {pp}\npy(1-p) = {pq}\n(1-p)yp = {qp}\n(1-p)y(1-p) = {qq}");
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate { algebra } => cmd_validate(algebra),
        Command::Inverse {
            algebra,
            element,
            kind,
            n,
            weight,
            numeric,
        } => cmd_inverse(algebra, element, *kind, *n, weight.as_deref(), *numeric),
        Command::Check {
            theorem,
            algebra,
            a,
            b,
            n,
            mode,
        } => cmd_check(theorem, algebra, a, b, *n, (*mode).into()),
        Command::Fuzz {
            theorem,
            count,
            seed,
            algebra,
            mode,
            n,
        } => cmd_fuzz(
            theorem,
            *count,
            *seed,
            algebra.as_deref(),
            (*mode).into(),
            *n,
        ),
        Command::Radical { algebra } => cmd_radical(algebra),
        Command::Pierce {
            algebra,
            element,
            idempotent,
        } => cmd_pierce(algebra, element, idempotent),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
