use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::components::fixed_components;
use crate::constructions::EigenSpec;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Default dominance tolerance for [`numeric_limits`].
pub const DOMINANCE_TOLERANCE: f64 = 1e-8;
/// Support coordinates of smaller magnitude make the numeric answer inconclusive.
pub const SUPPORT_THRESHOLD: f64 = 1e-10;

/// Component indices (ascending weight) of the limits as `t -> -inf` and `t -> +inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub alpha: usize,
    pub omega: usize,
}

/// Coordinates follow the block order of `spec` (decreasing weight).
pub fn analytic_limits(point: &[Rational], spec: &EigenSpec) -> Result<Limits> {
    let weights = coordinate_blocks(spec, point.len())?;
    let mut support = point.iter().zip(&weights).filter(|(x, _)| !x.is_zero()).map(|(_, b)| *b);
    let first = support.next().ok_or_else(|| Error::Domain("zero vector is not a point".into()))?;
    let (hi, lo) = support.fold((first, first), |(hi, lo), b| (hi.min(b), lo.max(b)));
    let m = spec.len();
    Ok(Limits { alpha: m - lo, omega: m - hi })
}

/// Block index (into `spec.blocks()`) of every coordinate.
fn coordinate_blocks(spec: &EigenSpec, len: usize) -> Result<Vec<usize>> {
    if len != spec.size() {
        return Err(Error::Dimension(format!(
            "point has {len} coordinates, spec has size {}",
            spec.size()
        )));
    }
    Ok(spec
        .blocks()
        .iter()
        .enumerate()
        .flat_map(|(i, b)| std::iter::repeat_n(i, b.multiplicity))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NumericLimits {
    Classified { alpha: usize, omega: usize },
    Inconclusive { reason: String },
}

impl NumericLimits {
    pub fn limits(&self) -> Option<Limits> {
        match *self {
            NumericLimits::Classified { alpha, omega } => Some(Limits { alpha, omega }),
            NumericLimits::Inconclusive { .. } => None,
        }
    }
}

/// Weights as floats, coordinate by coordinate.
pub fn float_weights(spec: &EigenSpec) -> Vec<f64> {
    spec.diagonal().iter().map(Rational::to_f64).collect()
}

/// A horizon at which neighbouring blocks separate by `e^60`.
pub fn default_horizon(spec: &EigenSpec) -> f64 {
    let w: Vec<f64> = spec.blocks().iter().map(|b| b.weight.to_f64()).collect();
    let gap = w.windows(2).map(|p| (p[0] - p[1]).abs()).fold(f64::INFINITY, f64::min);
    if gap.is_finite() && gap > 0.0 {
        60.0 / gap
    } else {
        60.0
    }
}

/// Classifies the limits of `[x_i exp(w_i t)]` by evaluating at `t = -T, +T`
/// in log space and asking which weight block carries all the mass.
pub fn numeric_limits(point: &[f64], weights: &[f64], horizon: f64) -> Result<NumericLimits> {
    numeric_limits_with(point, weights, horizon, DOMINANCE_TOLERANCE, SUPPORT_THRESHOLD)
}

pub fn numeric_limits_with(
    point: &[f64],
    weights: &[f64],
    horizon: f64,
    tolerance: f64,
    threshold: f64,
) -> Result<NumericLimits> {
    if point.len() != weights.len() {
        return Err(Error::Dimension(format!(
            "point has {} coordinates, {} weights given",
            point.len(),
            weights.len()
        )));
    }
    if !(horizon > 0.0 && horizon.is_finite()) {
        return Err(Error::Parameter(format!("horizon must be positive, got {horizon}")));
    }
    if point.iter().chain(weights).any(|v| !v.is_finite()) {
        return Err(Error::Domain("non-finite input".into()));
    }
    let norm = point.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::Domain("zero vector is not a point".into()));
    }
    if let Some(x) = point.iter().find(|x| **x != 0.0 && (*x / norm).abs() < threshold) {
        return Ok(NumericLimits::Inconclusive {
            reason: format!("support coordinate {x:e} below threshold {threshold:e}"),
        });
    }

    // distinct weights, decreasing; component index is counted from the bottom
    let mut levels: Vec<f64> = weights.to_vec();
    levels.sort_by(|a, b| b.total_cmp(a));
    levels.dedup();
    let m = levels.len();
    let block_of = |w: f64| levels.iter().position(|l| *l == w).expect("weight is listed");

    let dominant = |t: f64| -> Option<usize> {
        let logs: Vec<(usize, f64)> = point
            .iter()
            .zip(weights)
            .filter(|(x, _)| **x != 0.0)
            .map(|(x, w)| (block_of(*w), (x / norm).abs().ln() + w * t))
            .collect();
        let top = logs.iter().map(|(_, l)| *l).fold(f64::NEG_INFINITY, f64::max);
        let mut mass = vec![0.0; m];
        for (b, l) in logs {
            mass[b] += (2.0 * (l - top)).exp();
        }
        let total: f64 = mass.iter().sum();
        let (best, share) = mass
            .iter()
            .enumerate()
            .map(|(b, v)| (b, v / total))
            .max_by(|a, b| a.1.total_cmp(&b.1))?;
        (share >= 1.0 - tolerance && 1.0 - share <= tolerance).then_some(m - best)
    };

    match (dominant(-horizon), dominant(horizon)) {
        (Some(alpha), Some(omega)) => Ok(NumericLimits::Classified { alpha, omega }),
        _ => Ok(NumericLimits::Inconclusive {
            reason: format!("no block dominates within {tolerance:e} at horizon {horizon}"),
        }),
    }
}

/// A random unit vector whose support is a random nonempty set of coordinates.
pub fn random_support_point<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..len).collect();
    idx.shuffle(rng);
    let keep = rng.gen_range(1..=len);
    let mut v = vec![0.0; len];
    for &i in &idx[..keep] {
        let mut x: f64 = rng.sample(StandardNormal);
        while x.abs() < 1e-3 {
            x = rng.sample(StandardNormal);
        }
        v[i] = x;
    }
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
    v
}

/// Analytic and numeric answers for one point.
pub fn compare_limits(point: &[f64], spec: &EigenSpec) -> Result<(Limits, NumericLimits)> {
    fixed_components(spec)?;
    let exact: Vec<Rational> = point
        .iter()
        .map(|x| Rational::from_f64(*x).ok_or_else(|| Error::Domain("non-finite coordinate".into())))
        .collect::<Result<_>>()?;
    let analytic = analytic_limits(&exact, spec)?;
    let numeric = numeric_limits(point, &float_weights(spec), default_horizon(spec))?;
    Ok((analytic, numeric))
}
