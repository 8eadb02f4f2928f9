//! Exact scalar arithmetic: rationals, dual numbers and polynomials.

mod dual;
mod poly;
mod rational;
mod scalar;

pub use dual::Dual;
pub use poly::Polynomial;
pub use rational::{q, Rational};
pub use scalar::Scalar;
