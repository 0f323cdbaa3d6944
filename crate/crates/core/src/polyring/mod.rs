//! Exact sparse multivariate polynomials over the rationals.
//!
//! Everything here is immutable after construction and deterministic.
//! The toolkit works with polynomial representatives of germs; convergent
//! power series are out of reach by design.

mod matrix;
mod monomial;
mod order;
mod parse;
mod polynomial;

pub(crate) use matrix::combinations;
pub use matrix::{jacobian, maximal_minors, PolyMatrix};
pub use monomial::ExponentVector;
pub use order::{compare_monomials, MonomialOrder, OrderKind};
pub use parse::{parse_polynomial, parse_polynomial_at};
pub use polynomial::{Polynomial, Vars};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

/// Free-function form of [`Polynomial::differentiate`].
pub fn differentiate(p: &Polynomial, var: &str) -> crate::Result<Polynomial> {
    p.differentiate(var)
}

/// Free-function form of [`Polynomial::substitute`].
pub fn substitute(
    p: &Polynomial,
    assignment: &std::collections::BTreeMap<String, Polynomial>,
) -> crate::Result<Polynomial> {
    p.substitute(assignment)
}
