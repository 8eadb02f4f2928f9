use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constructions::PRecipe;
use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};

/// The displayed closed forms for `trace(APAP^-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceFormula {
    /// Case 1, odd `t`: `t - 1 + (x + 2t - 6)/x`.
    Case1Odd,
    /// Case 1, even `t`: a ratio of two linear functions of `x`.
    Case1Even,
    /// Case 2, even `t`, denominator `1 - x - y + yx - y^2 + x^2`.
    Case2Even,
    /// Case 2, odd `t` with `(t-1)/2` even, denominator `1 + y + 2x + y^2`.
    Case2OddHalfEven,
    /// Case 2, odd `t` with `(t-1)/2` odd, denominator `y^2 + 2y + 2x`.
    Case2OddHalfOdd,
}

impl TraceFormula {
    pub const ALL: [TraceFormula; 5] = [
        TraceFormula::Case1Odd,
        TraceFormula::Case1Even,
        TraceFormula::Case2Even,
        TraceFormula::Case2OddHalfEven,
        TraceFormula::Case2OddHalfOdd,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            TraceFormula::Case1Odd => "case1-odd",
            TraceFormula::Case1Even => "case1-even",
            TraceFormula::Case2Even => "case2-even",
            TraceFormula::Case2OddHalfEven => "case2-odd-half-even",
            TraceFormula::Case2OddHalfOdd => "case2-odd-half-odd",
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            TraceFormula::Case1Odd | TraceFormula::Case1Even => 1,
            _ => 2,
        }
    }

    /// Whether the formula is stated for conjugators of size `t`.
    pub fn applies_to(&self, t: usize) -> bool {
        let odd = t % 2 == 1;
        match self {
            TraceFormula::Case1Odd => odd && t >= 3,
            TraceFormula::Case1Even => !odd && t >= 4,
            TraceFormula::Case2Even => !odd && t >= 6,
            TraceFormula::Case2OddHalfEven => odd && t >= 9 && ((t - 1) / 2).is_multiple_of(2),
            TraceFormula::Case2OddHalfOdd => odd && t >= 7 && ((t - 1) / 2) % 2 == 1,
        }
    }

    /// Sizes in `lo..=hi` the formula applies to.
    pub fn sizes(&self, lo: usize, hi: usize) -> Vec<usize> {
        (lo..=hi).filter(|&t| self.applies_to(t)).collect()
    }

    /// The conjugator family whose trace the formula describes.
    pub fn recipe(&self, t: usize) -> Result<PRecipe> {
        if !self.applies_to(t) {
            return Err(Error::Parameter(format!("{} does not apply to t = {t}", self.id())));
        }
        match self {
            TraceFormula::Case1Odd | TraceFormula::Case1Even => PRecipe::case1(t),
            _ => PRecipe::case2(t),
        }
    }

    /// Evaluates the formula over any scalar (Dual gives its gradient).
    pub fn eval<T: Scalar>(&self, t: usize, vars: &[T]) -> Result<T> {
        if vars.len() != self.arity() {
            return Err(Error::Parameter(format!(
                "{} takes {} variables, got {}",
                self.id(),
                self.arity(),
                vars.len()
            )));
        }
        let p = &vars[0];
        let c = |n: i64| p.constant_like(&Rational::from(n));
        let tt = c(t as i64);
        let x = vars[0].clone();
        let y = vars.get(1).cloned().unwrap_or_else(|| c(0));
        let check = |d: &T| if d.is_unit() { Ok(()) } else { Err(Error::Pole) };
        let xy = || x.clone() * &y;
        let xx = || x.clone() * &x;
        let yy = || y.clone() * &y;

        let value = match self {
            TraceFormula::Case1Odd => {
                check(&x)?;
                tt.clone() - c(1) + (x.clone() + tt.clone() * c(2) - c(6)) / x.clone()
            }
            TraceFormula::Case1Even => {
                let ti = t as i64;
                let half = p.constant_like(&Rational::new(1, 2).expect("nonzero"));
                let quarter = p.constant_like(&Rational::new(1, 4).expect("nonzero"));
                let num = c(ti * ti - 6 * ti + 8) * &half * &x
                    + c(ti * ti * ti - 10 * ti * ti + 28 * ti - 32) * &quarter;
                let den = c(ti - 2) * &half * &x + c(ti * ti - 6 * ti + 4) * &quarter;
                check(&den)?;
                num / den
            }
            TraceFormula::Case2Even => {
                let d = c(1) - x.clone() - y.clone() + xy() - yy() + xx();
                check(&d)?;
                let f = |n: T| n / d.clone();
                tt - c(4)
                    - f(c(2) * (c(-1) + x.clone()))
                    - f((-y.clone() - x.clone()) * (-y.clone() + x.clone()))
                    - f((c(-1) + x.clone()) * &y)
                    - f(c(2) * (y.clone() - c(1)))
                    - f(-x.clone() + xy() - yy() + xx())
                    - f(-yy() - y.clone() + xy() + xx())
                    - f(x.clone() * (y.clone() - c(1)))
                    - f((y.clone() - x.clone()) * (y.clone() + x.clone()))
            }
            TraceFormula::Case2OddHalfEven => {
                let d = c(1) + y.clone() + c(2) * x.clone() + yy();
                check(&d)?;
                let f = |n: T| n / d.clone();
                tt - c(6)
                    - f(c(2) * y.clone())
                    - f(-y.clone() - x.clone())
                    - f(c(1) + yy())
                    - f(c(-1) - c(2) * x.clone() - yy() + xy())
                    - f(y.clone() * (c(1) + x.clone()))
                    - f(-yy())
                    + f(y.clone() + c(2) * x.clone())
                    + f(c(1))
                    + f(c(1) + y.clone() + x.clone() + yy())
                    + f(c(1) + y.clone() + x.clone() + xy())
                    - f(-x.clone() - yy() + xy())
                    - f(c(1) + c(2) * y.clone() + c(2) * x.clone())
                    - f(x.clone() * (c(-1) + y.clone()))
                    + f((y.clone() - x.clone()) * (c(-1) + y.clone()))
            }
            TraceFormula::Case2OddHalfOdd => {
                let d = yy() + c(2) * y.clone() + c(2) * x.clone();
                check(&d)?;
                let f = |n: T| n / d.clone();
                tt - c(6)
                    - f(c(3) * y.clone())
                    - f(-y.clone() - x.clone())
                    - f(c(2) * yy())
                    - f(y.clone() + x.clone())
                    - f(-yy() + xy() - y.clone() - x.clone())
                    - f(xy() + y.clone() + x.clone())
                    + f(yy() + y.clone() + x.clone())
                    + f(x.clone())
                    + f(xy() + c(2) * x.clone() + y.clone())
                    - f(y.clone() * (x.clone() - y.clone() - c(1)))
                    - f(xy())
                    + f(y.clone() * (y.clone() - x.clone()))
            }
        };
        Ok(value)
    }
}

impl fmt::Display for TraceFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TraceFormula {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TraceFormula::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown trace formula {s:?}")))
    }
}

/// The displayed closed form evaluated exactly at a rational point.
pub fn closed_form_trace(formula: TraceFormula, t: usize, point: &[Rational]) -> Result<Rational> {
    formula.eval(t, point)
}
