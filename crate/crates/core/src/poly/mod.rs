//! Exact multivariate polynomials in the entries `X[i,j]` of a `k x (m-k)`
//! matrix, under the lexicographic order with `X[1,1] > X[1,2] > ... > X[k,m-k]`.

mod division;
mod format;
mod monomial;
mod polynomial;

pub use division::{divide, divide_in, normal_form, normal_form_in, Division, DivisorSet};
pub use format::{
    parse_polynomial, parse_rational, polynomial_from_json, polynomial_to_json, PolynomialJson, TermJson,
};
pub use monomial::{compare_monomials_lex, compare_variables, ExponentMatrix, VarIndex};
pub use polynomial::{s_polynomial, Polynomial};

/// Exact coefficients: arbitrary-precision rationals in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
