use serde::{Deserialize, Serialize};

use super::Matrix;
use crate::exact::{Polynomial, Rational};

/// Monic characteristic polynomial `det(xI - M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharPoly(Polynomial);

impl CharPoly {
    /// Similarity reduction to upper Hessenberg form, then the standard
    /// three-term-style recurrence on leading principal minors.
    pub fn of(m: &Matrix<Rational>) -> CharPoly {
        let n = m.size();
        let mut h: Vec<Vec<Rational>> = m.rows();

        for col in 1..n.saturating_sub(1) {
            let Some(piv) = (col..n).find(|&i| !h[i][col - 1].is_zero()) else {
                continue;
            };
            if piv != col {
                h.swap(piv, col);
                for row in h.iter_mut() {
                    row.swap(piv, col);
                }
            }
            let inv = h[col][col - 1].recip().expect("pivot is nonzero");
            for i in col + 1..n {
                if h[i][col - 1].is_zero() {
                    continue;
                }
                let u = &h[i][col - 1] * &inv;
                for j in 0..n {
                    let d = &u * &h[col][j];
                    h[i][j] = &h[i][j] - &d;
                }
                for row in h.iter_mut() {
                    let d = &u * &row[i];
                    row[col] = &row[col] + &d;
                }
            }
        }

        let x = Polynomial::new(vec![Rational::zero(), Rational::one()]);
        let mut p: Vec<Polynomial> = Vec::with_capacity(n + 1);
        p.push(Polynomial::constant(Rational::one()));
        for k in 1..=n {
            // 1-based h(i, j) = h[i - 1][j - 1]
            let diag = Polynomial::constant(h[k - 1][k - 1].clone());
            let mut next = &(&x - &diag) * &p[k - 1];
            let mut sub = Rational::one();
            for i in 1..k {
                sub = &sub * &h[k - i][k - i - 1];
                if sub.is_zero() {
                    break;
                }
                let c = &sub * &h[k - i - 1][k - 1];
                next = &next - &p[k - i - 1].scale(&c);
            }
            p.push(next);
        }
        CharPoly(p.pop().expect("n >= 1"))
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree().expect("characteristic polynomials are monic")
    }

    /// Algebraic multiplicity of `v` as a root.
    pub fn multiplicity(&self, v: &Rational) -> usize {
        self.0.root_multiplicity(v)
    }

    /// Number of distinct eigenvalues over the algebraic closure.
    pub fn distinct_roots(&self) -> usize {
        self.0.squarefree_degree().expect("nonzero")
    }

    /// Self-reciprocal up to sign: `x^t p(1/x) = ±p(x)`.
    ///
    /// A determinant-one matrix conjugate to its inverse satisfies
    /// `x^t p(1/x) = (-1)^t p(x)`, so for odd `t` the coefficient list is
    /// antipalindromic (1 is then always a root). Both signs are accepted.
    pub fn is_reciprocal(&self) -> bool {
        self.0.is_palindromic() || self.0.is_antipalindromic()
    }

    /// Strict palindrome test on the coefficient list.
    pub fn is_palindromic(&self) -> bool {
        self.0.is_palindromic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn diagonal_examples() {
        assert_eq!(
            Matrix::identity(3).charpoly().polynomial(),
            &Polynomial::from_roots(&[q(1, 1), q(1, 1), q(1, 1)])
        );
        let c = Matrix::diagonal(&[q(2, 1), q(1, 2)]).charpoly();
        assert_eq!(c.polynomial().coeffs(), &[q(1, 1), q(-5, 2), q(1, 1)]);
        assert!(c.is_reciprocal());
        assert!(!Matrix::diagonal(&[q(2, 1), q(3, 1)]).charpoly().is_reciprocal());

        let c3 = Matrix::diagonal(&[q(3, 1), q(1, 3), q(1, 1)]).charpoly();
        assert_eq!(c3.polynomial(), &Polynomial::from_roots(&[q(3, 1), q(1, 3), q(1, 1)]));
        assert!(c3.is_reciprocal());
        assert!(!c3.is_palindromic());
    }

    #[test]
    fn multiplicities() {
        assert_eq!(Matrix::identity(4).eigenvalue_multiplicity(&q(1, 1)), 4);
        let d = Matrix::diagonal(&[q(2, 1), q(1, 2), q(1, 1), q(1, 1), q(1, 1)]);
        assert_eq!(d.eigenvalue_multiplicity(&q(1, 1)), 3);
        assert_eq!(d.eigenvalue_multiplicity(&q(5, 1)), 0);
    }

    #[test]
    fn agrees_with_faddeev_on_dense_input() {
        let a = Matrix::from_i64_rows(&[
            &[0, 2, -1, 3],
            &[0, 0, 4, 1],
            &[5, -2, 0, 0],
            &[1, 1, 1, -3],
        ])
        .unwrap();
        let fl = Polynomial::new(a.faddeev_leverrier());
        assert_eq!(a.charpoly().polynomial(), &fl);
        assert!(a.eval_poly(&fl).is_zero());
    }

    #[test]
    fn companion_matrix() {
        // companion of x^3 - 2x + 5
        let a = Matrix::from_i64_rows(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]).unwrap();
        assert_eq!(a.charpoly().polynomial().coeffs(), &[q(5, 1), q(-2, 1), q(0, 1), q(1, 1)]);
    }
}
