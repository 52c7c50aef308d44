//! Exact symbolic computation with Poisson-Ore extensions and their
//! universal enveloping algebras.
//!
//! The crate builds the enveloping algebra of an iterated Poisson-Ore
//! extension as an iterated Ore extension of double length, normal-orders
//! noncommutative expressions in it, verifies the defining axiom systems
//! ((R1), property P, (D1)-(D3)), and carries the two application suites:
//! semiclassical limits of multiparameter quantum matrices and the
//! classification of rank-at-most-two graded Poisson structures.

pub mod bracket;
pub mod error;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod tower;

pub use bracket::{BracketTable, JacobiCheck};
pub use error::{Error, Result};
pub use matrix::{Mat, SkewMatrix};
pub use poly::{CPoly, VarId, VarRegistry};
pub use scalar::GScalar;
pub use tower::{
    bracket_closed_form, check_poisson_alpha_derivation, check_poisson_derivation, Derivation,
    DerivationCheck, PoissonStep, PoissonTower,
};
