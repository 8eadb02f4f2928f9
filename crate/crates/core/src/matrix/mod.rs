//! Dense square matrices over an exact [`Scalar`].

mod charpoly;
mod io;

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};

pub use charpoly::CharPoly;
pub use io::MatrixFile;

/// Largest supported side length.
pub const MAX_SIZE: usize = 32;

/// Row-major `t x t` matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    t: usize,
    data: Vec<T>,
}

fn check_size(t: usize) -> Result<()> {
    if t == 0 || t > MAX_SIZE {
        return Err(Error::Dimension(format!("size {t} outside 1..={MAX_SIZE}")));
    }
    Ok(())
}

impl<T: Scalar> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let t = rows.len();
        check_size(t)?;
        if let Some(bad) = rows.iter().position(|r| r.len() != t) {
            return Err(Error::Dimension(format!(
                "row {bad} has {} entries, expected {t}",
                rows[bad].len()
            )));
        }
        Ok(Matrix {
            t,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Panics if `t` is outside `1..=MAX_SIZE`.
    pub fn from_fn(t: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        check_size(t).expect("matrix size");
        let mut data = Vec::with_capacity(t * t);
        for i in 0..t {
            for j in 0..t {
                data.push(f(i, j));
            }
        }
        Matrix { t, data }
    }

    /// Identity in the scalar context of `proto`.
    pub fn identity_like(t: usize, proto: &T) -> Self {
        let (zero, one) = (proto.zero_like(), proto.one_like());
        Matrix::from_fn(t, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn size(&self) -> usize {
        self.t
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.t + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.t + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.t..(i + 1) * self.t]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.t).map(<[T]>::to_vec).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            t: self.t,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.t, |i, j| self.get(j, i).clone())
    }

    fn same_size(&self, other: &Self, op: &str) {
        assert_eq!(self.t, other.t, "{op} of {0}x{0} and {1}x{1} matrices", self.t, other.t);
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_size(other, "sum");
        Matrix {
            t: self.t,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_size(other, "difference");
        Matrix {
            t: self.t,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_size(other, "product");
        let t = self.t;
        let mut data = Vec::with_capacity(t * t);
        for i in 0..t {
            for j in 0..t {
                let mut acc = self.get(i, 0).clone() * other.get(0, j);
                for l in 1..t {
                    acc = acc + (self.get(i, l).clone() * other.get(l, j));
                }
                data.push(acc);
            }
        }
        Matrix { t, data }
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            t: self.t,
            data: self.data.iter().map(|a| a.clone() * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            t: self.t,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn trace(&self) -> T {
        (1..self.t).fold(self.get(0, 0).clone(), |acc, i| acc + self.get(i, i))
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Matrix::identity_like(self.t, self.get(0, 0));
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        (0..self.t).all(|i| {
            (0..self.t).all(|j| {
                let v = self.get(i, j);
                if i == j {
                    v.is_unit() && (v.clone() - v.one_like()).is_zero()
                } else {
                    v.is_zero()
                }
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.t).all(|i| (0..self.t).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Index of a row at or below `start` whose entry in `col` is invertible.
    fn find_pivot(&self, col: usize, start: usize) -> Option<usize> {
        (start..self.t).find(|&r| self.get(r, col).is_unit())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.t {
                self.data.swap(a * self.t + j, b * self.t + j);
            }
        }
    }

    /// Exact inverse by Gauss-Jordan elimination.
    ///
    /// Over `Dual` a pivot must have nonzero value part, so the matrix is
    /// invertible exactly when its value matrix is.
    pub fn inverse(&self) -> Result<Self> {
        let t = self.t;
        let mut a = self.clone();
        let mut inv = Matrix::identity_like(t, self.get(0, 0));
        for col in 0..t {
            let p = a.find_pivot(col, col).ok_or(Error::Singular)?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let piv_inv = a.get(col, col).one_like() / a.get(col, col);
            for j in 0..t {
                a.data[col * t + j] = a.data[col * t + j].clone() * &piv_inv;
                inv.data[col * t + j] = inv.data[col * t + j].clone() * &piv_inv;
            }
            for r in 0..t {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..t {
                    let da = f.clone() * a.get(col, j);
                    a.data[r * t + j] = a.data[r * t + j].clone() - da;
                    let di = f.clone() * inv.get(col, j);
                    inv.data[r * t + j] = inv.data[r * t + j].clone() - di;
                }
            }
        }
        Ok(inv)
    }

    /// Determinant by elimination. Falls back to Faddeev-LeVerrier when a
    /// column has nonzero entries but no invertible pivot (possible over
    /// `Dual`, where a zero value part can carry nonzero partials).
    pub fn det(&self) -> T {
        let t = self.t;
        let mut a = self.clone();
        let mut det = self.get(0, 0).one_like();
        for col in 0..t {
            let Some(p) = a.find_pivot(col, col) else {
                if (col..t).all(|r| a.get(r, col).is_zero()) {
                    return det.zero_like();
                }
                return self.det_faddeev();
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let piv = a.get(col, col).clone();
            det = det * &piv;
            for r in col + 1..t {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone() / &piv;
                for j in col..t {
                    let d = f.clone() * a.get(col, j);
                    a.data[r * t + j] = a.data[r * t + j].clone() - d;
                }
            }
        }
        det
    }

    /// Coefficients of `det(xI - M)` in ascending degree, via the
    /// Faddeev-LeVerrier recurrence. Only divides by the integers `1..=t`, so it
    /// works over any scalar ring containing the rationals.
    pub fn faddeev_leverrier(&self) -> Vec<T> {
        let t = self.t;
        let proto = self.get(0, 0);
        let ident = Matrix::identity_like(t, proto);
        let mut coeffs = vec![proto.zero_like(); t + 1];
        coeffs[t] = proto.one_like();
        let mut m = Matrix::from_fn(t, |_, _| proto.zero_like());
        for k in 1..=t {
            m = self.mul(&m).add(&ident.scale(&coeffs[t + 1 - k]));
            let am = self.mul(&m);
            let k_inv = proto.constant_like(&Rational::new(-1, k as i64).expect("k > 0"));
            coeffs[t - k] = am.trace() * &k_inv;
        }
        coeffs
    }

    fn det_faddeev(&self) -> T {
        let c0 = self.faddeev_leverrier().swap_remove(0);
        if self.t.is_multiple_of(2) {
            c0
        } else {
            -c0
        }
    }
}

impl Matrix<Rational> {
    pub fn identity(t: usize) -> Self {
        Matrix::identity_like(t, &Rational::zero())
    }

    pub fn zeros(t: usize) -> Self {
        Matrix::from_fn(t, |_, _| Rational::zero())
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        Matrix::from_fn(entries.len(), |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Convenience constructor from integer rows.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
    }

    pub fn diagonal_entries(&self) -> Vec<Rational> {
        (0..self.t).map(|i| self.get(i, i).clone()).collect()
    }

    /// `det(xI - M)` by Hessenberg reduction.
    pub fn charpoly(&self) -> CharPoly {
        CharPoly::of(self)
    }

    /// Algebraic multiplicity of `v` as an eigenvalue.
    pub fn eigenvalue_multiplicity(&self, v: &Rational) -> usize {
        self.charpoly().multiplicity(v)
    }

    /// `p(M)` by Horner's scheme.
    pub fn eval_poly(&self, p: &crate::exact::Polynomial) -> Self {
        let ident = Matrix::identity(self.t);
        p.coeffs()
            .iter()
            .rev()
            .fold(Matrix::zeros(self.t), |acc, c| acc.mul(self).add(&ident.scale(c)))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.t + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in self.data.chunks(self.t) {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}
