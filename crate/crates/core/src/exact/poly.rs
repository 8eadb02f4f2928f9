use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Univariate polynomial over the rationals, coefficients in ascending degree.
///
/// The coefficient vector is always trimmed, so the zero polynomial is the
/// empty vector and any other polynomial has a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<Rational>", from = "Vec<Rational>")]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl From<Vec<Rational>> for Polynomial {
    fn from(coeffs: Vec<Rational>) -> Self {
        Polynomial::new(coeffs)
    }
}

impl From<Polynomial> for Vec<Rational> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monic linear factor `x - root`.
    pub fn linear(root: &Rational) -> Self {
        Polynomial::new(vec![-root, Rational::one()])
    }

    /// `prod (x - r)` over the given roots (with repetition).
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Polynomial::constant(Rational::one()), |acc, r| &acc * &Polynomial::linear(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rational::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(acc * x) + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lc) => {
                let inv = lc.recip().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lc_inv = divisor.leading().expect("nonzero").recip()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if nd < dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = &rem[shift + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = &rem[shift + j] - &(&c * dc);
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Number of distinct complex roots, `deg p - deg gcd(p, p')`.
    pub fn squarefree_degree(&self) -> Result<usize> {
        let deg = self
            .degree()
            .ok_or_else(|| Error::Domain("zero polynomial has no root count".into()))?;
        let g = self.gcd(&self.derivative());
        Ok(deg - g.degree().unwrap_or(0))
    }

    /// Largest `e` such that `(x - root)^e` divides `self`. Zero polynomial
    /// is reported as multiplicity 0 rather than infinity.
    pub fn root_multiplicity(&self, root: &Rational) -> usize {
        let mut p = self.clone();
        let mut e = 0;
        while !p.is_zero() && p.eval(root).is_zero() {
            p = p.deflate(root);
            e += 1;
        }
        e
    }

    /// Synthetic division by `(x - root)`, dropping the remainder.
    fn deflate(&self, root: &Rational) -> Polynomial {
        let n = self.coeffs.len();
        if n <= 1 {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (1..n).rev() {
            carry = &self.coeffs[i] + &(&carry * root);
            out[i - 1] = carry.clone();
        }
        Polynomial::new(out)
    }

    /// Coefficient list reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let c = &self.coeffs;
        (0..c.len()).all(|j| c[j] == c[c.len() - 1 - j])
    }

    /// Coefficient list reversed equals the negated list.
    pub fn is_antipalindromic(&self) -> bool {
        let c = &self.coeffs;
        (0..c.len()).all(|j| c[j] == -&c[c.len() - 1 - j])
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{mag}")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn p(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn trimming_and_degree() {
        let z = p(&[(0, 1), (0, 1)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[(1, 1), (2, 1), (0, 1)]).degree(), Some(1));
    }

    #[test]
    fn squarefree_degree_examples() {
        let cube = Polynomial::from_roots(&[q(1, 1), q(1, 1), q(1, 1)]);
        assert_eq!(cube.squarefree_degree().unwrap(), 1);

        let three = Polynomial::from_roots(&[q(2, 1), q(1, 2), q(1, 1)]);
        assert_eq!(three.squarefree_degree().unwrap(), 3);

        // x^2 - 2: p' = 2x, remainder of p by p' is -2, so gcd is 1
        let irr = p(&[(-2, 1), (0, 1), (1, 1)]);
        let (_, r) = irr.div_rem(&irr.derivative()).unwrap();
        assert_eq!(r, p(&[(-2, 1)]));
        assert_eq!(irr.squarefree_degree().unwrap(), 2);

        assert!(matches!(Polynomial::zero().squarefree_degree(), Err(Error::Domain(_))));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[(3, 1), (-1, 2), (0, 1), (5, 3), (1, 1)]);
        let b = p(&[(1, 1), (2, 7), (-1, 1)]);
        let (quo, rem) = a.div_rem(&b).unwrap();
        assert!(rem.degree().unwrap_or(0) < 2);
        assert_eq!(&(&quo * &b) + &rem, a);
        assert!(a.div_rem(&Polynomial::zero()).is_err());
    }

    #[test]
    fn multiplicity_and_palindrome() {
        let f = Polynomial::from_roots(&[q(1, 1), q(1, 1), q(1, 1), q(2, 1), q(1, 2)]);
        assert_eq!(f.root_multiplicity(&q(1, 1)), 3);
        assert_eq!(f.root_multiplicity(&q(2, 1)), 1);
        assert_eq!(f.root_multiplicity(&q(5, 1)), 0);
        assert!(f.is_antipalindromic());
        assert!(!f.is_palindromic());
        let g = Polynomial::from_roots(&[q(1, 1), q(1, 1), q(2, 1), q(1, 2)]);
        assert!(g.is_palindromic());
        assert!(!Polynomial::from_roots(&[q(2, 1), q(3, 1)]).is_palindromic());
    }

    #[test]
    fn display() {
        let f = Polynomial::from_roots(&[q(2, 1), q(1, 2)]);
        assert_eq!(f.to_string(), "x^2 - 5/2*x + 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
