use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::InvolutionProfile;
use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};
use crate::matrix::{Matrix, MAX_SIZE};

/// An entry of a conjugator template: an integer constant plus integer
/// multiples of the recipe variables. Terms keep insertion order so that the
/// printed form (`"y+x"`, `"y-x"`) follows the tables it was copied from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Affine {
    constant: i64,
    terms: Vec<(usize, i64)>,
}

impl Affine {
    pub fn zero() -> Self {
        Affine::default()
    }

    pub fn constant(c: i64) -> Self {
        Affine { constant: c, terms: Vec::new() }
    }

    pub fn var(v: usize) -> Self {
        Affine { constant: 0, terms: vec![(v, 1)] }
    }

    pub fn plus(mut self, v: usize, coeff: i64) -> Self {
        self.terms.push((v, coeff));
        self
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.terms.iter().all(|&(_, c)| c == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|&(_, c)| c == 0)
    }

    pub fn constant_part(&self) -> i64 {
        self.constant
    }

    /// Shifts the constant part (used by the corrupted-recipe control).
    pub fn shifted(&self, delta: i64) -> Self {
        Affine { constant: self.constant + delta, terms: self.terms.clone() }
    }

    pub fn eval<T: Scalar>(&self, vars: &[T], proto: &T) -> T {
        let mut acc = proto.constant_like(&Rational::from(self.constant));
        for &(v, c) in &self.terms {
            if c != 0 {
                acc = acc + vars[v].clone() * &proto.constant_like(&Rational::from(c));
            }
        }
        acc
    }

    /// Printed with the given variable names, e.g. `"y+x"`, `"x2"`, `"1"`, `"0"`.
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for &(v, c) in &self.terms {
            if c == 0 {
                continue;
            }
            let name = &names[v];
            let mag = c.unsigned_abs();
            let body = if mag == 1 { name.clone() } else { format!("{mag}{name}") };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push(if c < 0 { '-' } else { '+' });
            }
            out.push_str(&body);
        }
        if self.constant != 0 || out.is_empty() {
            if !out.is_empty() && self.constant > 0 {
                out.push('+');
            }
            out.push_str(&self.constant.to_string());
        }
        out
    }
}

/// Which conjugator family a recipe belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecipeCase {
    Case1,
    Case2,
    Case3 { k: usize },
}

/// A parametrized conjugator family `P(x_1, ..., x_arity)` of size `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PRecipe {
    pub case: RecipeCase,
    pub t: usize,
}

/// Sizes with a fully written-out reference matrix.
const DISPLAYED: &[(RecipeCase, usize)] = &[
    (RecipeCase::Case2, 9),
    (RecipeCase::Case3 { k: 5 }, 13),
    (RecipeCase::Case3 { k: 6 }, 14),
];

impl PRecipe {
    pub fn new(case: RecipeCase, t: usize) -> Result<Self> {
        let r = PRecipe { case, t };
        r.validate()?;
        Ok(r)
    }

    pub fn case1(t: usize) -> Result<Self> {
        PRecipe::new(RecipeCase::Case1, t)
    }

    pub fn case2(t: usize) -> Result<Self> {
        PRecipe::new(RecipeCase::Case2, t)
    }

    pub fn case3(t: usize, k: usize) -> Result<Self> {
        PRecipe::new(RecipeCase::Case3 { k }, t)
    }

    /// Looks a recipe up by its CLI id (`"case1"`, `"case2"`, `"case3"`).
    pub fn from_id(id: &str, t: usize, k: Option<usize>) -> Result<Self> {
        match (id.parse::<RecipeId>()?, k) {
            (RecipeId::Case1, None | Some(1)) => PRecipe::case1(t),
            (RecipeId::Case2, None | Some(2)) => PRecipe::case2(t),
            (RecipeId::Case3, Some(k)) => PRecipe::case3(t, k),
            (RecipeId::Case3, None) => Err(Error::Recipe("case3 needs k".into())),
            (id, Some(k)) => Err(Error::Recipe(format!("{id} has fixed arity, got k = {k}"))),
        }
    }

    fn validate(&self) -> Result<()> {
        let t = self.t;
        if t > MAX_SIZE {
            return Err(Error::Recipe(format!("t = {t} exceeds {MAX_SIZE}")));
        }
        match self.case {
            RecipeCase::Case1 if t < 3 => Err(Error::Recipe(format!("case1 needs t >= 3, got {t}"))),
            RecipeCase::Case2 if t < 4 => Err(Error::Recipe(format!("case2 needs t >= 4, got {t}"))),
            RecipeCase::Case3 { k } => {
                if t < 6 {
                    return Err(Error::Recipe(format!("case3 needs t >= 6, got {t}")));
                }
                if k < 3 {
                    return Err(Error::Recipe(format!("case3 needs k >= 3, got {k}")));
                }
                if k > t / 2 {
                    return Err(Error::Recipe(format!(
                        "case3 with t = {t} has antidiagonal room for k <= {}, got {k}",
                        t / 2
                    )));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn id(&self) -> RecipeId {
        match self.case {
            RecipeCase::Case1 => RecipeId::Case1,
            RecipeCase::Case2 => RecipeId::Case2,
            RecipeCase::Case3 { .. } => RecipeId::Case3,
        }
    }

    pub fn arity(&self) -> usize {
        match self.case {
            RecipeCase::Case1 => 1,
            RecipeCase::Case2 => 2,
            RecipeCase::Case3 { k } => k,
        }
    }

    pub fn variable_names(&self) -> Vec<String> {
        match self.case {
            RecipeCase::Case1 => vec!["x".into()],
            RecipeCase::Case2 => vec!["x".into(), "y".into()],
            RecipeCase::Case3 { k } => (1..=k).map(|i| format!("x{i}")).collect(),
        }
    }

    /// The involution this recipe is paired with: `k` eigenvalues `-1`.
    pub fn default_profile(&self) -> InvolutionProfile {
        InvolutionProfile::DiagonalPm { t: self.t, k: self.arity() }
    }

    /// Parity sub-recipe tag.
    pub fn variant(&self) -> &'static str {
        let even = self.t.is_multiple_of(2);
        match self.case {
            RecipeCase::Case1 | RecipeCase::Case3 { .. } if even => "even",
            RecipeCase::Case1 | RecipeCase::Case3 { .. } => "odd",
            RecipeCase::Case2 if even => "even",
            RecipeCase::Case2 if self.t == 5 => "odd-t5",
            RecipeCase::Case2 if ((self.t - 1) / 2).is_multiple_of(2) => "odd-half-even",
            RecipeCase::Case2 => "odd-half-odd",
        }
    }

    /// True when a full reference matrix exists for this recipe and size.
    pub fn is_displayed(&self) -> bool {
        DISPLAYED.contains(&(self.case, self.t))
    }

    /// Case 3 outside the displayed sizes extends the antidiagonal pattern
    /// outward; results there are flagged as extensions.
    pub fn is_extension(&self) -> bool {
        matches!(self.case, RecipeCase::Case3 { .. }) && !self.is_displayed()
    }

    /// The `t x t` template of affine entries.
    pub fn template(&self) -> Vec<Vec<Affine>> {
        let mut g = Grid::new(self.t);
        match self.case {
            RecipeCase::Case1 if self.t.is_multiple_of(2) => case1_even(&mut g),
            RecipeCase::Case1 => case1_odd(&mut g),
            RecipeCase::Case2 if self.t.is_multiple_of(2) => case2_even(&mut g),
            RecipeCase::Case2 => case2_odd(&mut g),
            RecipeCase::Case3 { k } => case3(&mut g, k),
        }
        g.cells
    }

    /// `P` evaluated at `params` (Rational or Dual).
    pub fn build<T: Scalar>(&self, params: &[T]) -> Result<Matrix<T>> {
        build_from_template(&self.template(), self.arity(), params)
    }

    /// Symbolic matrix as strings (`"y+x"`, `"x2"`, `"1"`, `"0"`).
    pub fn symbolic(&self) -> Vec<Vec<String>> {
        let names = self.variable_names();
        self.template()
            .iter()
            .map(|row| row.iter().map(|a| a.render(&names)).collect())
            .collect()
    }

    pub fn symbolic_json(&self) -> serde_json::Value {
        serde_json::json!({
            "recipe": self.id().to_string(),
            "t": self.t,
            "k": self.arity(),
            "variant": self.variant(),
            "extension": self.is_extension(),
            "variables": self.variable_names(),
            "entries": self.symbolic(),
        })
    }
}

impl fmt::Display for PRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.case {
            RecipeCase::Case3 { k } => write!(f, "case3(t={}, k={k})", self.t),
            _ => write!(f, "{}(t={})", self.id(), self.t),
        }
    }
}

/// Evaluates any template at a parameter vector of the given arity.
pub fn build_from_template<T: Scalar>(
    template: &[Vec<Affine>],
    arity: usize,
    params: &[T],
) -> Result<Matrix<T>> {
    if params.len() != arity {
        return Err(Error::Parameter(format!(
            "expected {arity} parameters, got {}",
            params.len()
        )));
    }
    let proto = &params[0];
    Matrix::from_rows(
        template
            .iter()
            .map(|row| row.iter().map(|a| a.eval(params, proto)).collect())
            .collect(),
    )
}

/// String id accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecipeId {
    Case1,
    Case2,
    Case3,
}

impl FromStr for RecipeId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "case1" => Ok(RecipeId::Case1),
            "case2" => Ok(RecipeId::Case2),
            "case3" => Ok(RecipeId::Case3),
            other => Err(Error::Recipe(format!("unknown recipe id {other:?}"))),
        }
    }
}

impl fmt::Display for RecipeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecipeId::Case1 => "case1",
            RecipeId::Case2 => "case2",
            RecipeId::Case3 => "case3",
        })
    }
}

/// 1-based write access to a template under construction.
struct Grid {
    t: usize,
    cells: Vec<Vec<Affine>>,
}

impl Grid {
    fn new(t: usize) -> Self {
        Grid { t, cells: vec![vec![Affine::zero(); t]; t] }
    }

    fn set(&mut self, i: usize, j: usize, a: Affine) {
        self.cells[i - 1][j - 1] = a;
    }

    fn one(&mut self, i: usize, j: usize) {
        self.set(i, j, Affine::constant(1));
    }

    fn parity(&mut self, i: usize, j: usize, odd_value: i64, even_value: i64, k: usize) {
        let c = if k % 2 == 1 { odd_value } else { even_value };
        self.set(i, j, Affine::constant(c));
    }

    fn core_identity(&mut self) {
        for i in 2..self.t {
            self.one(i, i);
        }
    }
}

const X: usize = 0;
const Y: usize = 1;

fn case1_even(g: &mut Grid) {
    let t = g.t;
    for k in 1..=t {
        g.parity(k, 1, 1, 0, k);
        g.parity(1, k, 1, 0, k);
    }
    for k in 1..=t {
        g.parity(k, t, 0, 1, k);
    }
    for k in 1..=t {
        match k {
            2 => g.set(t, 2, Affine::var(X)),
            _ => g.parity(t, k, 0, 1, k),
        }
    }
    for i in 2..t {
        g.one(i, t + 1 - i);
    }
}

fn case1_odd(g: &mut Grid) {
    let t = g.t;
    for k in 1..=t {
        let v = if k == 1 || (k % 2 == 0 && k != 2) { 1 } else { 0 };
        g.set(1, k, Affine::constant(v));
    }
    for k in 1..t {
        g.parity(k + 1, 1, 0, 1, k);
        g.parity(k, t, 0, 1, k);
    }
    for k in 2..=t {
        match k {
            2 => g.set(t, 2, Affine::var(X)),
            _ => g.parity(t, k, 0, 1, k),
        }
    }
    g.core_identity();
}

fn case2_even(g: &mut Grid) {
    let t = g.t;
    let h = t / 2;
    for k in 1..=t {
        if k == h {
            g.set(k, 1, Affine::var(Y));
        } else {
            g.parity(k, 1, 1, 0, k);
        }
    }
    g.set(1, 2, Affine::var(Y).plus(X, 1));
    g.set(1, t - 1, Affine::var(Y));
    g.set(t, 2, Affine::var(X));
    g.set(t, t - 1, Affine::var(Y).plus(X, -1));
    for k in 1..=t {
        if k == h + 1 {
            g.set(k, t, Affine::var(X));
        } else {
            g.parity(k, t, 0, 1, k);
        }
    }
    g.core_identity();
}

fn case2_odd(g: &mut Grid) {
    let t = g.t;
    let h = (t - 1) / 2;
    for k in 1..=t {
        if k == h {
            g.set(k, 1, Affine::var(Y));
        } else {
            g.parity(k, 1, 1, 0, k);
        }
    }
    g.set(t, 2, Affine::var(X));
    g.set(t, t - 1, Affine::var(Y).plus(X, -1));
    g.set(1, 2, Affine::var(Y).plus(X, 1));
    g.set(1, t - 1, Affine::var(Y));
    if t == 5 {
        g.one(1, 3);
    } else {
        g.one(1, (t + 3) / 2);
        g.one(1, (t - 1) / 2);
    }
    for k in 1..=t {
        if k == t.div_ceil(2) + 1 {
            g.set(k, t, Affine::var(X));
        } else {
            g.parity(k, t, 0, 1, k);
        }
    }
    g.core_identity();
}

/// Variable indices along the core antidiagonal, outermost pair first:
/// `x2`, then `x2` padding, then `x5, x6, ..., xk, x4`, then `x1` innermost.
fn case3_antidiagonal(t: usize, k: usize) -> Vec<usize> {
    let pairs = (t - 2) / 2;
    let mut mids: Vec<usize> = (5..=k).map(|i| i - 1).collect();
    if k >= 4 {
        mids.push(3);
    }
    let pad = pairs - 2 - mids.len();
    let mut seq = vec![1];
    seq.extend(std::iter::repeat_n(1, pad));
    seq.extend(mids);
    seq.push(0);
    seq
}

fn case3(g: &mut Grid, k: usize) {
    let t = g.t;
    let x = |i: usize| Affine::var(i - 1);
    for i in 1..=t {
        g.one(i, i);
    }
    for (p, &v) in case3_antidiagonal(t, k).iter().enumerate() {
        let i = 2 + p;
        g.set(i, t + 1 - i, Affine::var(v));
        g.set(t + 1 - i, i, Affine::var(v));
    }
    if t.is_multiple_of(2) {
        g.set(1, 2, x(2));
        g.set(1, t / 2, x(3));
        g.set(1, (t + 2) / 2, x(3));
        g.set(1, t - 1, x(1));
        g.set(2, t - 2, x(3));
        g.set(t / 2, 1, x(2));
        g.set((t + 2) / 2, 1, x(3));
        g.set(t / 2, t, x(3));
        g.set((t + 2) / 2, t, x(1));
        g.one(t - 1, 1);
        g.set(t, 2, x(3));
        g.set(t, t - 1, x(2));
    } else {
        g.set(1, 2, x(2));
        g.set(1, t.div_ceil(2), x(3));
        g.set(1, t - 1, x(1));
        g.set(2, t - 2, x(3));
        g.set((t - 1) / 2, 1, x(2));
        g.one(t.div_ceil(2), 1);
        g.set((t + 3) / 2, 1, x(3));
        g.one(t - 1, 1);
        g.set((t - 1) / 2, t, x(3));
        g.set((t + 3) / 2, t, x(1));
        g.set(t, 2, x(3));
        g.set(t, t - 1, x(2));
    }
}

/// Comma-separated rationals, e.g. `2,3` or `7/3, -2/5`.
pub fn parse_point(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|c| c.parse::<Rational>().map_err(|e| Error::Parse(format!("coordinate {c:?}: {e}"))))
        .collect()
}
