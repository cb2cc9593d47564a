//! Exact differential calculi, skew multi-derivations, divergences and
//! integrals on three noncommutative algebras: the quantum plane, Laurent
//! polynomials with the Jackson q-derivative, and the supercircle.

pub mod algebras;
pub mod error;
pub mod forms;
pub mod instances;
pub mod integral;
pub mod multideriv;
pub mod report;
pub mod scalars;

pub use error::{Error, Result};
