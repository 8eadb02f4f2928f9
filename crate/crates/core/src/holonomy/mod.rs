//! `Q = APAP^-1`, trace maps and their Jacobians, admissibility of `C`.

mod formulas;

pub use formulas::{closed_form_trace, TraceFormula};

use serde::{Deserialize, Serialize};

use crate::constructions::{build_from_template, build_involution, Affine, InvolutionProfile, PRecipe};
use crate::error::{Error, Result};
use crate::exact::{Dual, Rational, Scalar};
use crate::matrix::Matrix;

/// `A P A P^-1`.
pub fn conjugator_image<T: Scalar>(a: &Matrix<T>, p: &Matrix<T>) -> Result<Matrix<T>> {
    if a.size() != p.size() {
        return Err(Error::Dimension(format!(
            "A is {0}x{0} but P is {1}x{1}",
            a.size(),
            p.size()
        )));
    }
    let p_inv = p.inverse()?;
    Ok(a.mul(p).mul(a).mul(&p_inv))
}

/// `(tr Q, tr Q^2, ..., tr Q^k)`.
pub fn trace_vector<T: Scalar>(q: &Matrix<T>, k: usize) -> Result<Vec<T>> {
    if k == 0 {
        return Err(Error::Parameter("trace vector needs k >= 1".into()));
    }
    let mut out = Vec::with_capacity(k);
    let mut power = q.clone();
    out.push(power.trace());
    for _ in 1..k {
        power = power.mul(q);
        out.push(power.trace());
    }
    Ok(out)
}

/// Exact Jacobian of `x -> (tr Q(x), ..., tr Q(x)^k)` at a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobianReport {
    pub recipe: String,
    pub t: usize,
    pub k: usize,
    pub involution: InvolutionProfile,
    pub point: Vec<Rational>,
    /// Entry `(i, j)` is `d tr(Q^(i+1)) / d x_(j+1)`.
    pub jacobian: Vec<Vec<Rational>>,
    #[serde(rename = "det")]
    pub determinant: Rational,
    /// The conjugator is an extrapolation of the displayed pattern.
    pub extension: bool,
}

pub fn jacobian(
    recipe: &PRecipe,
    profile: &InvolutionProfile,
    point: &[Rational],
) -> Result<JacobianReport> {
    let mut report = jacobian_of_template(&recipe.template(), recipe.arity(), profile, point)?;
    report.recipe = recipe.id().to_string();
    report.extension = recipe.is_extension();
    Ok(report)
}

/// Same as [`jacobian`] for an arbitrary affine template.
pub fn jacobian_of_template(
    template: &[Vec<Affine>],
    arity: usize,
    profile: &InvolutionProfile,
    point: &[Rational],
) -> Result<JacobianReport> {
    if point.len() != arity {
        return Err(Error::Parameter(format!(
            "expected {arity} coordinates, got {}",
            point.len()
        )));
    }
    let t = template.len();
    if profile.size() != t {
        return Err(Error::Dimension(format!(
            "involution has size {}, conjugator has size {t}",
            profile.size()
        )));
    }
    let seeds = Dual::seed_all(point);
    let p = build_from_template(template, arity, &seeds)?;
    let a = build_involution(profile)?.map(|v| Dual::constant(v.clone(), arity));
    let q = conjugator_image(&a, &p)?;
    let traces = trace_vector(&q, arity)?;
    let jac: Vec<Vec<Rational>> = traces.iter().map(|d| d.partials().to_vec()).collect();
    let determinant = Matrix::from_rows(jac.clone())?.det();
    Ok(JacobianReport {
        recipe: String::from("template"),
        t,
        k: arity,
        involution: *profile,
        point: point.to_vec(),
        jacobian: jac,
        determinant,
        extension: false,
    })
}

/// `trace(APAP^-1)` for a recipe at a rational point, computed directly.
pub fn direct_trace(recipe: &PRecipe, profile: &InvolutionProfile, point: &[Rational]) -> Result<Rational> {
    let p = recipe.build(point)?;
    let a = build_involution(profile)?;
    Ok(conjugator_image(&a, &p)?.trace())
}

/// Spectral summary of `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub distinct_eigenvalue_count: usize,
    pub expected: usize,
    pub multiplicity_of_one: usize,
    pub reciprocal: bool,
    pub admissible: bool,
    pub power: u32,
}

/// Admissibility of an explicit `C`: exactly `2k+1` distinct eigenvalues.
pub fn admissibility_of(c: &Matrix<Rational>, k: usize) -> AdmissibilityReport {
    admissibility_of_power(c, k, 1)
}

/// Same test applied to `C^power`.
pub fn admissibility_of_power(c: &Matrix<Rational>, k: usize, power: u32) -> AdmissibilityReport {
    let c = c.pow(power);
    let cp = c.charpoly();
    let distinct = cp.distinct_roots();
    let expected = 2 * k + 1;
    AdmissibilityReport {
        distinct_eigenvalue_count: distinct,
        expected,
        multiplicity_of_one: cp.multiplicity(&Rational::one()),
        reciprocal: cp.is_reciprocal(),
        admissible: distinct == expected,
        power,
    }
}

pub fn admissibility_check(a: &Matrix<Rational>, p: &Matrix<Rational>, k: usize) -> Result<AdmissibilityReport> {
    admissibility_check_power(a, p, k, 1)
}

/// Replaces `C` by `C^power` before counting (power 2 forces `lambda != -1`).
pub fn admissibility_check_power(
    a: &Matrix<Rational>,
    p: &Matrix<Rational>,
    k: usize,
    power: u32,
) -> Result<AdmissibilityReport> {
    if power == 0 {
        return Err(Error::Parameter("power must be >= 1".into()));
    }
    let c = conjugator_image(a, p)?;
    Ok(admissibility_of_power(&c, k, power))
}

/// For `C = diag(lambda x t/2, 1/lambda x t/2)`, checks
/// `(tr C)^2 = (t/2) tr(C^2) + t^2/2`.
pub fn nonadmissible_relation_check(t: usize, lambda: &Rational) -> Result<bool> {
    if t == 0 || t % 2 == 1 {
        return Err(Error::Parameter(format!("t must be even and positive, got {t}")));
    }
    if lambda.is_zero() {
        return Err(Error::Domain("lambda must be nonzero".into()));
    }
    let inv = lambda.recip()?;
    let diag: Vec<Rational> = (0..t)
        .map(|i| if i < t / 2 { lambda.clone() } else { inv.clone() })
        .collect();
    let c = Matrix::diagonal(&diag);
    let tv = trace_vector(&c, 2)?;
    let half = Rational::new(t as i64, 2)?;
    let lhs = &tv[0] * &tv[0];
    let rhs = &(&half * &tv[1]) + &Rational::new((t * t) as i64, 2)?;
    Ok(lhs == rhs)
}
