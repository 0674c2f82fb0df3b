use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("algebra dimension must be positive")]
    ZeroDimension,

    #[error("matrix order must be positive")]
    ZeroOrder,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("structure constants are not associative on basis triple (e{0}, e{1}, e{2})")]
    Associativity(usize, usize, usize),

    #[error("declared unit fails the {side} unit law on basis element e{index}")]
    UnitLaw { side: &'static str, index: usize },

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("corner algebra of the zero idempotent is trivial")]
    ZeroCorner,

    #[error("strong exponent n must be at least 1")]
    InvalidExponent,

    #[error("weight must be nonzero")]
    ZeroWeight,

    #[error("element is not {kind} invertible: {reason}")]
    NotStrongInvertible { kind: String, reason: String },

    #[error("element is not weighted {kind} invertible: {reason}")]
    NotWeightedStrongInvertible { kind: String, reason: String },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("recipe infeasible: {0}")]
    RecipeInfeasible(String),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("{path}: {message}")]
    Document { path: String, message: String },

    /// An internal self-check failed. This is a library defect, never a user error.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
