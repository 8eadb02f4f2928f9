use std::fmt;

use serde::{Serialize, Serializer};

use crate::constructions::EigenSpec;
use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentKind {
    Point,
    /// `RP^dim`.
    Projective { dim: usize },
}

/// A connected component of the zero set of the generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedComponent {
    /// 1-based, ascending weight; `p1` is the source.
    pub index: usize,
    pub weight: Rational,
    /// Centered rank `2 index - (m + 1)`.
    pub weight_rank: i64,
    pub multiplicity: usize,
    pub dimension: usize,
    #[serde(flatten)]
    pub kind: ComponentKind,
}

impl fmt::Display for FixedComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ComponentKind::Point => write!(f, "p{}: point (weight {})", self.index, self.weight),
            ComponentKind::Projective { dim } => {
                write!(f, "p{}: RP^{dim} (weight {})", self.index, self.weight)
            }
        }
    }
}

pub fn fixed_components(spec: &EigenSpec) -> Result<Vec<FixedComponent>> {
    let m = spec.len();
    if m < 2 {
        return Err(Error::DegenerateFlow(format!(
            "a single weight gives the trivial flow on RP^{}",
            spec.size().saturating_sub(1)
        )));
    }
    Ok(spec
        .blocks()
        .iter()
        .rev()
        .enumerate()
        .map(|(pos, b)| {
            let index = pos + 1;
            let dimension = b.multiplicity - 1;
            FixedComponent {
                index,
                weight: b.weight.clone(),
                weight_rank: 2 * index as i64 - (m as i64 + 1),
                multiplicity: b.multiplicity,
                dimension,
                kind: if dimension == 0 {
                    ComponentKind::Point
                } else {
                    ComponentKind::Projective { dim: dimension }
                },
            }
        })
        .collect())
}

/// Multiplicities in ascending weight order.
pub(crate) fn ascending_multiplicities(spec: &EigenSpec) -> Vec<usize> {
    spec.blocks().iter().rev().map(|b| b.multiplicity).collect()
}

/// `S^dim`, possibly with a lower sphere removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Sphere(usize),
    Difference(usize, usize),
}

impl Descriptor {
    pub fn dimension(&self) -> usize {
        match *self {
            Descriptor::Sphere(d) | Descriptor::Difference(d, _) => d,
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Sphere(d) => write!(f, "S^{d}"),
            Descriptor::Difference(d, e) => write!(f, "S^{d} minus S^{e}"),
        }
    }
}

impl Serialize for Descriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Flow classes leaving component `source` and arriving at `sink`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowlineStratum {
    pub source: usize,
    pub sink: usize,
    pub nonempty: bool,
    #[serde(rename = "dim")]
    pub dimension: Option<usize>,
    pub descriptor: Option<Descriptor>,
}

pub fn flowline_stratum(spec: &EigenSpec, a: usize, b: usize) -> Result<FlowlineStratum> {
    stratum_from_multiplicities(&ascending_multiplicities(spec), a, b)
}

pub(crate) fn stratum_from_multiplicities(mults: &[usize], a: usize, b: usize) -> Result<FlowlineStratum> {
    let m = mults.len();
    for idx in [a, b] {
        if idx == 0 || idx > m {
            return Err(Error::IndexOutOfRange { index: idx, bound: m + 1 });
        }
    }
    if a >= b {
        return Ok(FlowlineStratum { source: a, sink: b, nonempty: false, dimension: None, descriptor: None });
    }
    let n: usize = mults[a - 1..b].iter().sum();
    let dim = n - 2;
    let descriptor = if b == a + 1 {
        Descriptor::Sphere(dim)
    } else {
        let removed = mults[a - 1].max(mults[b - 1]);
        Descriptor::Difference(dim, dim - removed)
    };
    Ok(FlowlineStratum {
        source: a,
        sink: b,
        nonempty: true,
        dimension: Some(dim),
        descriptor: Some(descriptor),
    })
}

/// Every nonempty stratum, ordered by sink then source.
pub fn stratum_table(spec: &EigenSpec) -> Result<Vec<FlowlineStratum>> {
    let mults = ascending_multiplicities(spec);
    if mults.len() < 2 {
        fixed_components(spec)?;
    }
    let m = mults.len();
    let mut out = Vec::new();
    for b in 1..=m {
        for a in 1..b {
            out.push(stratum_from_multiplicities(&mults, a, b)?);
        }
    }
    Ok(out)
}
