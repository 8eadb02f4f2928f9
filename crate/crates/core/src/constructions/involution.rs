use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::matrix::{Matrix, MAX_SIZE};

/// Conjugacy class of the order-two holonomy generator `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InvolutionProfile {
    /// `A^2 = Id` with `k` eigenvalues `-1`, `1 <= k <= t/2`.
    DiagonalPm { t: usize, k: usize },
    /// `A^2 = -Id`, `t` even.
    Symplectic { t: usize },
}

impl InvolutionProfile {
    pub fn diagonal_pm(t: usize, k: usize) -> Result<Self> {
        let p = InvolutionProfile::DiagonalPm { t, k };
        p.validate()?;
        Ok(p)
    }

    pub fn symplectic(t: usize) -> Result<Self> {
        let p = InvolutionProfile::Symplectic { t };
        p.validate()?;
        Ok(p)
    }

    pub fn size(&self) -> usize {
        match *self {
            InvolutionProfile::DiagonalPm { t, .. } | InvolutionProfile::Symplectic { t } => t,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let t = self.size();
        if t == 0 || t > MAX_SIZE {
            return Err(Error::Profile(format!("size {t} outside 1..={MAX_SIZE}")));
        }
        match *self {
            InvolutionProfile::DiagonalPm { k, .. } if k == 0 || k > t / 2 => Err(Error::Profile(
                format!("DiagonalPM({t},{k}): need 1 <= k <= {}", t / 2),
            )),
            InvolutionProfile::Symplectic { .. } if t % 2 == 1 => Err(Error::Profile(format!(
                "Symplectic({t}): size must be even"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for InvolutionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionProfile::DiagonalPm { t, k } => write!(f, "DiagonalPM({t},{k})"),
            InvolutionProfile::Symplectic { t } => write!(f, "Symplectic({t})"),
        }
    }
}

pub fn build_involution(profile: &InvolutionProfile) -> Result<Matrix<Rational>> {
    profile.validate()?;
    let m = match *profile {
        InvolutionProfile::DiagonalPm { t, k } => Matrix::diagonal(
            &(0..t)
                .map(|i| Rational::from(if i < k { -1 } else { 1 }))
                .collect::<Vec<_>>(),
        ),
        InvolutionProfile::Symplectic { t } => Matrix::from_fn(t, |i, j| {
            if i / 2 != j / 2 {
                Rational::zero()
            } else if i % 2 == 0 && j == i + 1 {
                Rational::one()
            } else if i % 2 == 1 && j + 1 == i {
                Rational::from(-1)
            } else {
                Rational::zero()
            }
        }),
    };
    Ok(m)
}
