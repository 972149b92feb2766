//! Exact arithmetic foundation: arbitrary-precision rationals, number
//! fields, univariate polynomials over them, and the rational-function
//! field K = F(z). No floating point anywhere.

mod numberfield;
mod ratfunc;
mod unipoly;

pub use numberfield::{fmt_rational, rat, rat_int, NFElem, NumberField, Rational};
pub use ratfunc::RatFunc;
pub use unipoly::{UniPoly, VAR};

pub(crate) use unipoly::render_coeff_power;

/// Errors from the arithmetic substrate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    /// Extended gcd found a proper common factor with the minimal
    /// polynomial; the coefficients of that factor are reported.
    #[error("zero divisor modulo the minimal polynomial (factor coefficients: {factor})")]
    ZeroDivisor { factor: String },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}
