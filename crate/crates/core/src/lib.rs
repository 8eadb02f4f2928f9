//! Exact linear algebra for involution/conjugator matrix families, trace-map
//! Jacobians and eigenvalue admissibility, plus the combinatorics of diagonal
//! flows on real projective space.

pub mod error;
pub mod flow;
pub mod exact;
pub mod holonomy;
pub mod constructions;
pub mod matrix;
pub mod reference;
pub mod report;

pub use error::{Error, Result};
pub use exact::{q, Dual, Polynomial, Rational, Scalar};
pub use matrix::{CharPoly, Matrix};
