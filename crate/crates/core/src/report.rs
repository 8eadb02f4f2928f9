//! Verification reports: reproduction of the reference values, stratum
//! tables, Monte Carlo scenarios.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{build_involution, EigenSpec, InvolutionProfile, PRecipe};
use crate::error::{Error, Result};
use crate::exact::{q, Rational};
use crate::flow::{
    compare_limits, default_horizon, fixed_components, involution_on_strata, leaf_space,
    random_support_point, stratum_table, Descriptor, FixedComponent, LeafStratum, NumericLimits,
    StratumLabel,
};
use crate::holonomy::{admissibility_check, direct_trace, jacobian, jacobian_of_template, TraceFormula};
use crate::matrix::Matrix;
use crate::reference::{self, Claim, StratumTableRef};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimRow {
    pub claim: String,
    pub description: String,
    pub paper_value: Option<String>,
    pub computed: String,
    pub matches_paper: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub command: String,
    pub inputs: serde_json::Value,
    pub results: Vec<ClaimRow>,
    /// Wall-clock seconds; left empty unless asked for so output is reproducible.
    pub timing: Option<f64>,
}

impl VerificationReport {
    fn new(command: &str, inputs: serde_json::Value) -> Self {
        VerificationReport {
            version: VERSION.to_string(),
            command: command.to_string(),
            inputs,
            results: Vec::new(),
            timing: None,
        }
    }

    pub fn all_match(&self) -> bool {
        self.results.iter().all(|r| r.matches_paper)
    }

    pub fn mismatches(&self) -> Vec<&ClaimRow> {
        self.results.iter().filter(|r| !r.matches_paper).collect()
    }

    pub fn row(&self, claim: &str) -> Option<&ClaimRow> {
        self.results.iter().find(|r| r.claim == claim)
    }

    /// 0 when every row matches, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_match() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let width = self.results.iter().map(|r| r.claim.len()).max().unwrap_or(0);
        let mut out = format!("{} (rpstruct {})\n", self.command, self.version);
        for r in &self.results {
            let mark = if r.matches_paper { "ok  " } else { "FAIL" };
            let _ = write!(out, "{mark} {:width$}  {}", r.claim, r.computed);
            if let Some(p) = &r.paper_value {
                if !r.matches_paper {
                    let _ = write!(out, "  (expected {p})");
                }
            }
            if let Some(d) = &r.detail {
                let _ = write!(out, "  [{d}]");
            }
            out.push('\n');
        }
        let bad = self.mismatches().len();
        let _ = writeln!(out, "{} rows, {} mismatches", self.results.len(), bad);
        if let Some(t) = self.timing {
            let _ = writeln!(out, "elapsed {t:.3} s");
        }
        out
    }
}

fn value_row(claim: &Claim, suffix: Option<String>, computed: Result<Rational>) -> ClaimRow {
    let expected = claim.rational().map(|r| r.expect("reference values parse"));
    let id = match suffix {
        Some(s) => format!("{}[{s}]", claim.id),
        None => claim.id.to_string(),
    };
    let (computed, matches, detail) = match computed {
        Ok(v) => {
            let m = expected.as_ref().is_none_or(|e| *e == v);
            let detail = match (&expected, m) {
                (Some(e), false) => Some(format!("difference {}", &v - e)),
                _ => None,
            };
            (v.to_string(), m, detail)
        }
        Err(e) => (format!("error: {e}"), false, None),
    };
    ClaimRow {
        claim: id,
        description: claim.description.to_string(),
        paper_value: expected.map(|e| e.to_string()),
        computed,
        matches_paper: matches,
        detail,
    }
}

fn flag_row(claim: String, description: String, ok: bool, computed: String, detail: Option<String>) -> ClaimRow {
    ClaimRow { claim, description, paper_value: None, computed, matches_paper: ok, detail }
}

fn det_at(recipe: Result<PRecipe>, point: &[Rational]) -> Result<Rational> {
    let r = recipe?;
    Ok(jacobian(&r, &r.default_profile(), point)?.determinant)
}

fn point_23() -> Vec<Rational> {
    vec![q(2, 1), q(3, 1)]
}

fn integer_point(from: i64, len: usize) -> Vec<Rational> {
    (0..len as i64).map(|i| Rational::from(from + i)).collect()
}

/// Case 2 determinant at `(2,3)` for one size, with its parity class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub t: usize,
    pub variant: String,
    pub det: Rational,
}

pub fn case2_class_table(lo: usize, hi: usize) -> Result<Vec<ClassEntry>> {
    (lo.max(4)..=hi)
        .map(|t| {
            let r = PRecipe::case2(t)?;
            Ok(ClassEntry { t, variant: r.variant().to_string(), det: det_at(Ok(r), &point_23())? })
        })
        .collect()
}

/// One evaluation of a closed form against the direct trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceCheck {
    pub formula: TraceFormula,
    pub t: usize,
    pub point: Vec<Rational>,
    pub closed_form: Rational,
    pub direct: Rational,
    pub agree: bool,
}

pub fn trace_check(formula: TraceFormula, t: usize, point: &[Rational]) -> Result<TraceCheck> {
    let recipe = formula.recipe(t)?;
    let closed_form = formula.eval(t, point)?;
    let direct = direct_trace(&recipe, &recipe.default_profile(), point)?;
    Ok(TraceCheck {
        formula,
        t,
        point: point.to_vec(),
        agree: closed_form == direct,
        closed_form,
        direct,
    })
}

/// Small random rational with numerator in `[-12, 12]`, denominator in `[1, 6]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    q(rng.gen_range(-12..=12), rng.gen_range(1..=6))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceAgreement {
    pub formula: TraceFormula,
    pub t: usize,
    pub checked: usize,
    pub agreed: usize,
    pub first_failure: Option<TraceCheck>,
}

/// Compares at `count` random points avoiding poles and singular `P`.
pub fn trace_agreement<R: Rng + ?Sized>(
    formula: TraceFormula,
    t: usize,
    count: usize,
    rng: &mut R,
) -> Result<TraceAgreement> {
    formula.recipe(t)?;
    let mut out = TraceAgreement { formula, t, checked: 0, agreed: 0, first_failure: None };
    let mut attempts = 0;
    while out.checked < count {
        attempts += 1;
        if attempts > 100 * count + 100 {
            return Err(Error::Domain(format!("could not sample regular points for {formula} at t = {t}")));
        }
        let point: Vec<Rational> = (0..formula.arity()).map(|_| random_rational(rng)).collect();
        match trace_check(formula, t, &point) {
            Ok(c) => {
                out.checked += 1;
                if c.agree {
                    out.agreed += 1;
                } else if out.first_failure.is_none() {
                    out.first_failure = Some(c);
                }
            }
            Err(Error::Pole | Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AppendixOptions {
    pub seed: u64,
    pub points_per_size: usize,
    /// Test hook: perturbs one entry of the `t = 9` conjugator.
    pub corrupt_recipe: bool,
}

impl Default for AppendixOptions {
    fn default() -> Self {
        AppendixOptions { seed: 0, points_per_size: 25, corrupt_recipe: false }
    }
}

/// Sizes the closed-form trace checks run over.
pub const TRACE_SIZES: (usize, usize) = (3, 14);
/// Sizes the Case 2 class table covers.
pub const CLASS_SIZES: (usize, usize) = (6, 14);

pub fn reproduce_appendix(opts: &AppendixOptions) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "reproduce-appendix",
        serde_json::json!({
            "seed": opts.seed,
            "points_per_size": opts.points_per_size,
            "corrupt_recipe": opts.corrupt_recipe,
        }),
    );

    let t9 = if opts.corrupt_recipe {
        PRecipe::case2(9).and_then(|r| {
            let mut template = r.template();
            template[0][0] = template[0][0].shifted(1);
            Ok(jacobian_of_template(&template, 2, &r.default_profile(), &point_23())?.determinant)
        })
    } else {
        det_at(PRecipe::case2(9), &point_23())
    };
    report.results.push(value_row(&reference::DET_CASE2_T9, None, t9));
    report.results.push(value_row(
        &reference::DET_CASE3_T13,
        None,
        det_at(PRecipe::case3(13, 5), &integer_point(2, 5)),
    ));
    report.results.push(value_row(
        &reference::DET_CASE3_T14,
        None,
        det_at(PRecipe::case3(14, 6), &integer_point(2, 6)),
    ));

    let table = case2_class_table(CLASS_SIZES.0, CLASS_SIZES.1)?;
    for (claim, variant) in [
        (reference::DET_CASE2_EVEN_CLASS, "even"),
        (reference::DET_CASE2_HALF_ODD_CLASS, "odd-half-odd"),
    ] {
        let members: Vec<&ClassEntry> = table.iter().filter(|e| e.variant == variant).collect();
        for e in &members {
            report.results.push(value_row(&claim, Some(format!("t={}", e.t)), Ok(e.det.clone())));
        }
        let constant = members.windows(2).all(|w| w[0].det == w[1].det);
        let sizes: Vec<String> = members.iter().map(|e| e.t.to_string()).collect();
        report.results.push(flag_row(
            format!("{}.t-independent", claim.id),
            format!("the class value does not depend on t (t in {{{}}})", sizes.join(",")),
            constant,
            constant.to_string(),
            None,
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for (formula, claim) in TraceFormula::ALL.into_iter().zip(reference::TRACE_CLAIMS) {
        for t in formula.sizes(TRACE_SIZES.0, TRACE_SIZES.1) {
            let row = match trace_agreement(formula, t, opts.points_per_size, &mut rng) {
                Ok(a) => flag_row(
                    format!("{}[t={t}]", claim.id),
                    claim.description.to_string(),
                    a.agreed == a.checked,
                    format!("{}/{} points agree", a.agreed, a.checked),
                    a.first_failure.map(|f| {
                        format!(
                            "at ({}) closed form {} but direct {}",
                            f.point.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "),
                            f.closed_form,
                            f.direct
                        )
                    }),
                ),
                Err(e) => flag_row(
                    format!("{}[t={t}]", claim.id),
                    claim.description.to_string(),
                    false,
                    format!("error: {e}"),
                    None,
                ),
            };
            report.results.push(row);
        }
    }
    Ok(report)
}

/// Result of comparing one reference stratum table at one `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCheck {
    pub table: String,
    pub k: usize,
    pub n: usize,
    pub dimensions_match: bool,
    pub emptiness_match: bool,
    /// Cells whose difference notation differs although the dimension agrees.
    pub descriptor_mismatches: Vec<String>,
}

pub fn check_stratum_table(table: &StratumTableRef, k: usize) -> Result<TableCheck> {
    let n = usize::try_from(table.n.at(k))
        .map_err(|_| Error::Parameter(format!("{} has no n at k = {k}", table.id)))?;
    let spec = EigenSpec::c_i(n, table.i)?;
    let computed = stratum_table(&spec)?;
    let components = fixed_components(&spec)?;

    // reference index -> computed index, skipping empty components
    let mut position = vec![None; table.components.len() + 1];
    let mut kept = 0;
    let mut dimensions_match = true;
    for (j, dim) in table.components.iter().enumerate() {
        if dim.at(k) >= 0 {
            kept += 1;
            position[j + 1] = Some(kept);
            if components.get(kept - 1).map(|c| c.dimension as i64) != Some(dim.at(k)) {
                dimensions_match = false;
            }
        }
    }
    let mut emptiness_match = kept == components.len();
    let mut descriptor_mismatches = Vec::new();
    for sink in 1..=table.components.len() {
        for source in 1..=table.components.len() {
            let (Some(a), Some(b)) = (position[source], position[sink]) else { continue };
            let reference = table.cells.iter().find(|c| c.source == source && c.sink == sink);
            let ours = computed.iter().find(|s| s.source == a && s.sink == b);
            match (reference, ours) {
                (None, None) => {}
                (Some(r), Some(s)) => {
                    let d = s.descriptor.expect("nonempty");
                    let dim = r.dim.at(k);
                    if Some(dim) != s.dimension.map(|x| x as i64) {
                        dimensions_match = false;
                        continue;
                    }
                    let expected = match r.minus.map(|e| e.at(k)) {
                        Some(e) if e >= 0 => Descriptor::Difference(dim as usize, e as usize),
                        _ => Descriptor::Sphere(dim as usize),
                    };
                    if expected != d {
                        descriptor_mismatches.push(format!(
                            "p{source}->p{sink}: table {expected}, computed {d}"
                        ));
                    }
                }
                _ => emptiness_match = false,
            }
        }
    }
    Ok(TableCheck {
        table: table.id.to_string(),
        k,
        n,
        dimensions_match,
        emptiness_match,
        descriptor_mismatches,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumRow {
    pub source: usize,
    pub sink: usize,
    pub dim: usize,
    pub descriptor: Descriptor,
    pub label: StratumLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionSummary {
    pub pairs: Vec<(StratumLabel, StratumLabel)>,
    pub fixed: Vec<StratumLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafspaceReport {
    pub n: usize,
    pub i: usize,
    pub components: Vec<FixedComponent>,
    pub strata: Vec<StratumRow>,
    pub leaf_space: Vec<LeafStratum>,
    pub involution: InvolutionSummary,
}

pub fn leafspace_report(n: usize, i: usize) -> Result<LeafspaceReport> {
    let leaf = leaf_space(n, i)?;
    let spec = EigenSpec::c_i(n, i)?;
    let diagram = crate::flow::strata_diagram(&spec)?;
    let strata = stratum_table(&spec)?
        .into_iter()
        .map(|s| {
            let label = diagram
                .iter()
                .find(|d| d.source == s.source && d.sink == s.sink)
                .map(|d| d.label)
                .expect("every stratum is labelled");
            StratumRow {
                source: s.source,
                sink: s.sink,
                dim: s.dimension.expect("nonempty"),
                descriptor: s.descriptor.expect("nonempty"),
                label,
            }
        })
        .collect();
    let inv = involution_on_strata(n, i)?;
    Ok(LeafspaceReport {
        n,
        i,
        components: fixed_components(&spec)?,
        strata,
        leaf_space: leaf.strata().to_vec(),
        involution: InvolutionSummary { pairs: inv.pairs, fixed: inv.fixed },
    })
}

impl LeafspaceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Components, the sink-by-source stratum table, leaf space and involution.
    pub fn render_text(&self) -> String {
        let m = self.components.len();
        let mut out = format!("C_{} on RP^{}\n\ncomponents\n", self.i, self.n);
        for c in &self.components {
            let _ = writeln!(out, "  {c}");
        }
        let cell = |source: usize, sink: usize| -> String {
            self.strata
                .iter()
                .find(|s| s.source == source && s.sink == sink)
                .map_or_else(|| "-".to_string(), |s| s.descriptor.to_string())
        };
        let width = (1..=m)
            .flat_map(|a| (1..=m).map(move |b| (a, b)))
            .map(|(a, b)| cell(a, b).len())
            .max()
            .unwrap_or(1)
            .max(4);
        let _ = write!(out, "\nstrata (rows: sink, columns: source)\n  {:5}", "");
        for a in 1..=m {
            let _ = write!(out, " {:width$}", format!("p{a}"));
        }
        out.push('\n');
        for b in 1..=m {
            let _ = write!(out, "  {:5}", format!("p{b}"));
            for a in 1..=m {
                let _ = write!(out, " {:width$}", cell(a, b));
            }
            out.push('\n');
        }
        let dims: Vec<String> = self
            .leaf_space
            .iter()
            .map(|s| format!("S^{}{}", s.dim, if s.double_equator { "*" } else { "" }))
            .collect();
        let _ = writeln!(out, "\nleaf space: {}   (* double equator)", dims.join(" u "));
        let _ = writeln!(out, "\ninvolution");
        for (a, b) in &self.involution.pairs {
            let _ = writeln!(out, "  {a} <-> {b}");
        }
        for f in &self.involution.fixed {
            let _ = writeln!(out, "  {f} fixed");
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scenario {
    Admissibility,
    FlowOracle,
}

impl Scenario {
    pub fn id(&self) -> &'static str {
        match self {
            Scenario::Admissibility => "admissibility",
            Scenario::FlowOracle => "flow-oracle",
        }
    }
}

impl FromStr for Scenario {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "admissibility" => Ok(Scenario::Admissibility),
            "flow-oracle" => Ok(Scenario::FlowOracle),
            _ => Err(Error::Parse(format!("unknown scenario {s:?}"))),
        }
    }
}

/// Required admissible share, in percent.
pub const ADMISSIBILITY_THRESHOLD_PERCENT: usize = 95;

/// Outcome of the density scenario.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DensityCount {
    pub trials: usize,
    pub admissible: usize,
    pub singular: usize,
}

/// Random integer `P` (entries in `[-5, 5]`, `t = 6`) against `DiagonalPM(6,2)`;
/// singular draws count as not admissible.
pub fn admissibility_density(seed: u64, trials: usize) -> Result<DensityCount> {
    let (t, k) = (6, 2);
    let a = build_involution(&InvolutionProfile::diagonal_pm(t, k)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut count = DensityCount { trials, admissible: 0, singular: 0 };
    for _ in 0..trials {
        let p = Matrix::from_fn(t, |_, _| Rational::from(rng.gen_range(-5i64..=5)));
        match admissibility_check(&a, &p, k) {
            Ok(r) if r.admissible => count.admissible += 1,
            Ok(_) => {}
            Err(Error::Singular) => count.singular += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(count)
}

/// The eigenvalue specs the limit oracle runs over.
pub fn oracle_specs() -> Result<Vec<(String, EigenSpec)>> {
    let mut out = Vec::new();
    for (n, i) in [(6, 1), (6, 2), (6, 3), (5, 2), (5, 3)] {
        out.push((format!("C_{i} on RP^{n}"), EigenSpec::c_i(n, i)?));
    }
    out.push(("symplectic k=3, lambda=2".to_string(), EigenSpec::symplectic(3, &q(2, 1))?));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCount {
    pub trials: usize,
    pub agree: usize,
    pub disagree: usize,
    pub inconclusive: usize,
}

pub fn flow_oracle<R: Rng + ?Sized>(spec: &EigenSpec, trials: usize, rng: &mut R) -> Result<OracleCount> {
    let mut c = OracleCount { trials, agree: 0, disagree: 0, inconclusive: 0 };
    for _ in 0..trials {
        let point = random_support_point(rng, spec.size());
        let (analytic, numeric) = compare_limits(&point, spec)?;
        match numeric {
            NumericLimits::Classified { .. } if numeric.limits() == Some(analytic) => c.agree += 1,
            NumericLimits::Classified { .. } => c.disagree += 1,
            NumericLimits::Inconclusive { .. } => c.inconclusive += 1,
        }
    }
    Ok(c)
}

pub fn montecarlo(scenario: Scenario, seed: u64, trials: usize) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::Parameter("trials must be >= 1".into()));
    }
    let mut report = VerificationReport::new(
        "montecarlo",
        serde_json::json!({ "scenario": scenario.id(), "seed": seed, "trials": trials }),
    );
    match scenario {
        Scenario::Admissibility => {
            let c = admissibility_density(seed, trials)?;
            report.results.push(flag_row(
                "montecarlo.admissibility".into(),
                format!(
                    "share of random integer P with admissible C, threshold {ADMISSIBILITY_THRESHOLD_PERCENT}%"
                ),
                100 * c.admissible >= ADMISSIBILITY_THRESHOLD_PERCENT * c.trials,
                format!("{}/{} admissible", c.admissible, c.trials),
                Some(format!("{} singular", c.singular)),
            ));
        }
        Scenario::FlowOracle => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for (name, spec) in oracle_specs()? {
                let c = flow_oracle(&spec, trials, &mut rng)?;
                report.results.push(flag_row(
                    format!("montecarlo.flow-oracle[{name}]"),
                    "analytic and numeric limits agree".into(),
                    c.agree == c.trials,
                    format!("{}/{} agree", c.agree, c.trials),
                    Some(format!(
                        "{} disagree, {} inconclusive, horizon {:.16e}",
                        c.disagree,
                        c.inconclusive,
                        default_horizon(&spec)
                    )),
                ));
            }
        }
    }
    Ok(report)
}

/// Obstruction rows for `i = 1..=max_i` plus the identity-involution control.
pub fn interval_report(max_i: usize) -> Result<VerificationReport> {
    use crate::flow::{interval_quotient, invariant_embedding_obstruction, IntervalStar};
    if max_i == 0 {
        return Err(Error::Parameter("need i >= 1".into()));
    }
    let mut report =
        VerificationReport::new("interval-obstruction", serde_json::json!({ "max_i": max_i }));
    for i in 1..=max_i {
        let star = interval_quotient(i)?;
        let holds = invariant_embedding_obstruction(&star);
        report.results.push(flag_row(
            format!("interval.obstruction[i={i}]"),
            "no embedded interval through one origin copy is invariant".into(),
            holds,
            holds.to_string(),
            Some(format!("{} candidates", star.candidate_embeddings().len())),
        ));
    }
    let control = IntervalStar::new(3, vec![1, 2, 3], false)?;
    let holds = invariant_embedding_obstruction(&control);
    report.results.push(flag_row(
        "interval.control".into(),
        "identity involution leaves every candidate invariant".into(),
        !holds,
        holds.to_string(),
        None,
    ));
    Ok(report)
}
