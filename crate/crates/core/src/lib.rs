//! Exact q-Bernoulli numbers and polynomials with independent oracles.

pub mod algebra;
pub mod beta;
pub mod characters;
pub mod complex_oracle;
pub mod error;
pub mod identities;
pub mod padic;
pub mod qcomb;

pub use algebra::{Coeff, RatFunc, Var};
pub use error::{Error, Result};
