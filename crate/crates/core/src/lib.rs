//! Exact path counting in graded graphs and machine checks of the polynomial
//! identities behind the closed formulas.

pub mod error;
pub mod exponent;
pub mod formulas;
pub mod graded_graphs;
pub mod identity_suite;
pub mod laurent;
pub mod multipoly;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use exponent::ExponentVector;

pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;
pub type Poly = multipoly::MultiPoly<Rational>;
