//! Pseudomechanics of supersymmetric oscillators.

pub mod bracket;
pub mod dynamics;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod models;
pub mod nambu;
pub mod superpoly;
pub mod supercharge;
pub mod suite;
pub mod symmetry;

pub use bracket::BracketContext;
pub use error::{Error, Result};
pub use superpoly::{Grade, Parity, SuperPolynomial, VarTable, DEFAULT_TOL};
