//! Exact Drazin-family inverses over finite-dimensional rational algebras.
//!
//! Start from [`algebra`] to build an algebra and its elements, then use
//! [`spectral`] for Drazin inverses, [`radical`] for the Jacobson radical,
//! [`strong`] for n-strong and weighted inverses, [`pierce`] for block
//! decompositions, and [`theorems`] / [`recipes`] to check additive results
//! on concrete or generated pairs.

pub mod algebra;
pub mod error;
pub mod format;
pub mod linalg;
pub mod pierce;
pub mod poly;
pub mod radical;
pub mod rational;
pub mod recipes;
pub mod report;
pub mod sample;
pub mod spectral;
pub mod strong;
pub mod theorems;

pub use algebra::{Algebra, Element};
pub use error::{Error, Result};
pub use rational::Rational;
pub use report::{Mode, TheoremReport, Verdict};
