//! Exact rational arithmetic on multivariate polynomials and Laurent
//! polynomials.

mod context;
mod laurent;
mod monomial;
mod polynomial;

pub use context::VariableContext;
pub use laurent::{fraction_is_laurent, laurent_normalize, substitute, Fraction, LaurentPolynomial};
pub use monomial::Monomial;
pub use polynomial::Polynomial;

/// Coefficient field.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests;
