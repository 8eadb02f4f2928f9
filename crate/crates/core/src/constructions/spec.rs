use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::matrix::Matrix;

/// One eigenvalue block of a diagonal generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub weight: Rational,
    pub multiplicity: usize,
}

/// Diagonal spectrum as blocks of strictly decreasing weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Block>", into = "Vec<Block>")]
pub struct EigenSpec {
    blocks: Vec<Block>,
}

impl TryFrom<Vec<Block>> for EigenSpec {
    type Error = Error;
    fn try_from(blocks: Vec<Block>) -> Result<Self> {
        EigenSpec::from_blocks(blocks)
    }
}

impl From<EigenSpec> for Vec<Block> {
    fn from(s: EigenSpec) -> Self {
        s.blocks
    }
}

impl EigenSpec {
    pub fn from_blocks(blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Spec("no blocks".into()));
        }
        if let Some(b) = blocks.iter().find(|b| b.multiplicity == 0) {
            return Err(Error::Spec(format!("weight {} has multiplicity 0", b.weight)));
        }
        if let Some(w) = blocks.windows(2).find(|w| w[0].weight <= w[1].weight) {
            return Err(Error::Spec(format!(
                "weights must strictly decrease, got {} then {}",
                w[0].weight, w[1].weight
            )));
        }
        Ok(EigenSpec { blocks })
    }

    /// Convenience constructor from `(weight, multiplicity)` pairs.
    pub fn new(pairs: &[(Rational, usize)]) -> Result<Self> {
        EigenSpec::from_blocks(
            pairs
                .iter()
                .map(|(w, m)| Block { weight: w.clone(), multiplicity: *m })
                .collect(),
        )
    }

    /// Sorts arbitrary `(weight, multiplicity)` pairs into canonical order,
    /// merging nothing: equal weights are still an error.
    pub fn sorted(pairs: &[(Rational, usize)]) -> Result<Self> {
        let mut v = pairs.to_vec();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        EigenSpec::new(&v)
    }

    /// Spectrum of `C_i` on `RP^n`: weights `i+1 > ... > 2 > 1 > 1/2 > ... > 1/(i+1)`,
    /// the weight 1 block (multiplicity `n+1-2i`) omitted when empty.
    pub fn c_i(n: usize, i: usize) -> Result<Self> {
        let t = n + 1;
        if i == 0 || 2 * i > t {
            return Err(Error::Parameter(format!(
                "C_i on RP^{n} needs 1 <= i <= {}",
                t / 2
            )));
        }
        let mut pairs: Vec<(Rational, usize)> =
            (1..=i).rev().map(|j| (Rational::from(j + 1), 1)).collect();
        if t > 2 * i {
            pairs.push((Rational::one(), t - 2 * i));
        }
        pairs.extend((1..=i).map(|j| (Rational::new(1, j as i64 + 1).expect("nonzero"), 1)));
        EigenSpec::new(&pairs)
    }

    /// Spectrum for `A^2 = -Id` on `RP^(2k-1)`: `lambda` and `1/lambda`, each `k` times.
    pub fn symplectic(k: usize, lambda: &Rational) -> Result<Self> {
        if k == 0 || *lambda <= Rational::one() {
            return Err(Error::Spec("symplectic spectrum needs k >= 1 and lambda > 1".into()));
        }
        EigenSpec::new(&[(lambda.clone(), k), (lambda.recip()?, k)])
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total multiplicity `t`.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(|b| b.multiplicity).sum()
    }

    /// Diagonal entries in block order.
    pub fn diagonal(&self) -> Vec<Rational> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.weight.clone(), b.multiplicity))
            .collect()
    }

    /// Every weight `w` has a partner `1/w` of equal multiplicity.
    pub fn is_reciprocal_symmetric(&self) -> bool {
        self.blocks.iter().all(|b| {
            !b.weight.is_zero()
                && self.blocks.iter().any(|c| {
                    c.multiplicity == b.multiplicity && &c.weight * &b.weight == Rational::one()
                })
        })
    }

    /// Every weight is replaced by its negative (the reversed flow).
    pub fn negated(&self) -> Self {
        EigenSpec {
            blocks: self
                .blocks
                .iter()
                .rev()
                .map(|b| Block { weight: -&b.weight, multiplicity: b.multiplicity })
                .collect(),
        }
    }

    /// Reads blocks off a diagonal matrix with strictly decreasing diagonal runs.
    pub fn from_diagonal(m: &Matrix<Rational>) -> Result<Self> {
        if !m.is_diagonal() {
            return Err(Error::Spec("matrix is not diagonal".into()));
        }
        let mut pairs: Vec<(Rational, usize)> = Vec::new();
        for d in m.diagonal_entries() {
            match pairs.last_mut() {
                Some((w, mult)) if *w == d => *mult += 1,
                _ => pairs.push((d, 1)),
            }
        }
        EigenSpec::new(&pairs)
    }
}

pub fn build_c_diag(spec: &EigenSpec) -> Matrix<Rational> {
    Matrix::diagonal(&spec.diagonal())
}
