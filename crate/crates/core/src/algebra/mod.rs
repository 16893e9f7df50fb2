//! Exact arithmetic: rationals, cyclotomic coefficients, polynomials and rational functions.

pub mod coeff;
pub mod cyclo;
pub mod dense;
pub mod json;
pub mod monomial;
pub mod poly;
pub mod ratfunc;

pub use coeff::{int, rat, Coeff, Rational};
pub use cyclo::CycloElement;
pub use monomial::{Monomial, Var};
pub use poly::Poly;
pub use ratfunc::{integer, RatFunc};
