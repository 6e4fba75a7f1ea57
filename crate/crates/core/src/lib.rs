//! Exact workbench for degrees and dynamical degrees of monomial rational
//! maps on complete simplicial toric varieties.
//!
//! Everything is computed over the rationals with no floating point: fans,
//! invariant-cycle groups, intersection numbers (by two independent
//! algorithms), mixed volumes of divisor polytopes, degree sequences,
//! certified dynamical-degree intervals, positivity-cone memberships with
//! LP witnesses, and the pullback operators on numerical classes.

pub mod cli;
pub mod error;
pub mod exact;
pub mod fan;
pub mod polytope;

pub use error::{Error, Result};
