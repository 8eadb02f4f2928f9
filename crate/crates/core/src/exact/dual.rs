use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::Rational;
use crate::error::{Error, Result};

/// Exact first-order dual number with a fixed number of partial derivatives.
///
/// All duals that meet in one expression must share `nvars`; mixing contexts
/// is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dual {
    value: Rational,
    partials: Vec<Rational>,
}

impl Dual {
    /// Constant with all-zero partials.
    pub fn constant(value: Rational, nvars: usize) -> Self {
        Dual {
            value,
            partials: vec![Rational::zero(); nvars],
        }
    }

    /// Seeds variable `index`: partial `index` is one, the rest zero.
    pub fn variable(value: Rational, index: usize, nvars: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::IndexOutOfRange { index, bound: nvars });
        }
        let mut d = Dual::constant(value, nvars);
        d.partials[index] = Rational::one();
        Ok(d)
    }

    /// Constant lift when `var_index` is `None`, seed lift otherwise.
    pub fn lift(value: Rational, var_index: Option<usize>, nvars: usize) -> Result<Self> {
        match var_index {
            None => Ok(Dual::constant(value, nvars)),
            Some(i) => Dual::variable(value, i, nvars),
        }
    }

    /// Seeds every coordinate of `point` as its own variable.
    pub fn seed_all(point: &[Rational]) -> Vec<Dual> {
        let n = point.len();
        point
            .iter()
            .enumerate()
            .map(|(i, v)| Dual::variable(v.clone(), i, n).expect("index < len"))
            .collect()
    }

    pub fn from_parts(value: Rational, partials: Vec<Rational>) -> Self {
        Dual { value, partials }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn partials(&self) -> &[Rational] {
        &self.partials
    }

    pub fn partial(&self, index: usize) -> &Rational {
        &self.partials[index]
    }

    pub fn nvars(&self) -> usize {
        self.partials.len()
    }

    pub fn recip(&self) -> Result<Self> {
        let inv = self.value.recip()?;
        let scale = -(&inv * &inv);
        Ok(Dual {
            partials: self.partials.iter().map(|p| p * &scale).collect(),
            value: inv,
        })
    }

    fn check_ctx(&self, other: &Dual) {
        assert_eq!(
            self.nvars(),
            other.nvars(),
            "dual numbers from different contexts combined"
        );
    }

    fn add_ref(&self, rhs: &Dual) -> Dual {
        self.check_ctx(rhs);
        Dual {
            value: &self.value + &rhs.value,
            partials: self.partials.iter().zip(&rhs.partials).map(|(a, b)| a + b).collect(),
        }
    }

    fn sub_ref(&self, rhs: &Dual) -> Dual {
        self.check_ctx(rhs);
        Dual {
            value: &self.value - &rhs.value,
            partials: self.partials.iter().zip(&rhs.partials).map(|(a, b)| a - b).collect(),
        }
    }

    fn mul_ref(&self, rhs: &Dual) -> Dual {
        self.check_ctx(rhs);
        Dual {
            value: &self.value * &rhs.value,
            partials: self
                .partials
                .iter()
                .zip(&rhs.partials)
                .map(|(da, db)| &(&self.value * db) + &(&rhs.value * da))
                .collect(),
        }
    }

    fn div_ref(&self, rhs: &Dual) -> Dual {
        self.check_ctx(rhs);
        let inv = rhs.value.recip().expect("dual division by a zero value");
        let value = &self.value * &inv;
        // (a/b)' = (a' - (a/b) b') / b
        let partials = self
            .partials
            .iter()
            .zip(&rhs.partials)
            .map(|(da, db)| &(da - &(&value * db)) * &inv)
            .collect();
        Dual { value, partials }
    }
}

impl fmt::Debug for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        for (i, p) in self.partials.iter().enumerate() {
            if !p.is_zero() {
                write!(f, " + ({p})d{i}")?;
            }
        }
        Ok(())
    }
}

macro_rules! dual_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait for Dual {
            type Output = Dual;
            fn $method(self, rhs: Dual) -> Dual {
                self.$inner(&rhs)
            }
        }
        impl<'a> $trait<&'a Dual> for Dual {
            type Output = Dual;
            fn $method(self, rhs: &'a Dual) -> Dual {
                self.$inner(rhs)
            }
        }
        impl<'a> $trait<&'a Dual> for &'a Dual {
            type Output = Dual;
            fn $method(self, rhs: &'a Dual) -> Dual {
                self.$inner(rhs)
            }
        }
    };
}

dual_binop!(Add, add, add_ref);
dual_binop!(Sub, sub, sub_ref);
dual_binop!(Mul, mul, mul_ref);
dual_binop!(Div, div, div_ref);

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual {
            value: -self.value,
            partials: self.partials.into_iter().map(|p| -p).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn lifts() {
        let c = Dual::lift(q(3, 2), None, 2).unwrap();
        assert_eq!(c.value(), &q(3, 2));
        assert_eq!(c.partials(), &[Rational::zero(), Rational::zero()]);

        let x = Dual::lift(q(2, 1), Some(0), 2).unwrap();
        assert_eq!(x.partials(), &[Rational::one(), Rational::zero()]);

        let y = Dual::lift(q(3, 1), Some(1), 2).unwrap();
        assert_eq!(y.partials(), &[Rational::zero(), Rational::one()]);

        assert_eq!(
            Dual::lift(q(1, 1), Some(2), 2),
            Err(Error::IndexOutOfRange { index: 2, bound: 2 })
        );
    }

    #[test]
    fn quotient_of_seeds() {
        // f(x, y) = x / y at (2, 3): df/dx = 1/3, df/dy = -2/9
        let v = Dual::seed_all(&[q(2, 1), q(3, 1)]);
        let f = &v[0] / &v[1];
        assert_eq!(f.value(), &q(2, 3));
        assert_eq!(f.partials(), &[q(1, 3), q(-2, 9)]);
    }

    #[test]
    fn recip_matches_division() {
        let v = Dual::seed_all(&[q(5, 7), q(-1, 3)]);
        let u = &v[0] * &v[1] + v[0].clone();
        let one = Dual::constant(Rational::one(), 2);
        assert_eq!(u.recip().unwrap(), &one / &u);
        assert!(Dual::constant(Rational::zero(), 2).recip().is_err());
    }

    #[test]
    #[should_panic(expected = "different contexts")]
    fn mixed_contexts_panic() {
        let _ = Dual::constant(q(1, 1), 1) + Dual::constant(q(1, 1), 2);
    }
}
