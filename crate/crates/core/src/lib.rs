//! Exact symbolic computation engine for synthesizing linear ordinary
//! differential equations from finite-group invariant data.
//!
//! The crate provides, bottom up: exact number-field / rational-function
//! arithmetic ([`exact`]), sparse multivariate polynomials ([`multipoly`]),
//! reduced Groebner bases with quotient-ring linear algebra ([`groebner`]),
//! finite matrix group actions ([`group`]), the LODE synthesis algorithm
//! ([`solver`]), and the hardcoded Hessian-group data with its obstruction
//! analyzer ([`hessian`]).

pub mod exact;
pub mod groebner;
pub mod group;
pub mod hessian;
pub mod multipoly;
pub mod solver;
