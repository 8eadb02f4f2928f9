use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Dual, Rational};

/// An exact field-like scalar that matrices can be built over.
///
/// `Rational` is a field. `Dual` is only a ring (elements with zero value are
/// not invertible), so elimination code must pivot on [`Scalar::is_unit`]
/// rather than on nonzero-ness.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Div<Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    /// Additive identity living in the same context as `self`.
    fn zero_like(&self) -> Self;

    /// Multiplicative identity living in the same context as `self`.
    fn one_like(&self) -> Self;

    /// Embeds a rational constant into the context of `self`.
    fn constant_like(&self, value: &Rational) -> Self;

    fn is_zero(&self) -> bool;

    /// True when the element has a multiplicative inverse.
    fn is_unit(&self) -> bool;

    /// The rational part (the value itself for `Rational`).
    fn value(&self) -> &Rational;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn constant_like(&self, value: &Rational) -> Self {
        value.clone()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn is_unit(&self) -> bool {
        !Rational::is_zero(self)
    }

    fn value(&self) -> &Rational {
        self
    }
}

impl Scalar for Dual {
    fn zero_like(&self) -> Self {
        Dual::constant(Rational::zero(), self.nvars())
    }

    fn one_like(&self) -> Self {
        Dual::constant(Rational::one(), self.nvars())
    }

    fn constant_like(&self, value: &Rational) -> Self {
        Dual::constant(value.clone(), self.nvars())
    }

    fn is_zero(&self) -> bool {
        self.value().is_zero() && self.partials().iter().all(Rational::is_zero)
    }

    fn is_unit(&self) -> bool {
        !self.value().is_zero()
    }

    fn value(&self) -> &Rational {
        Dual::value(self)
    }
}
