use std::fmt::Write as _;
use std::fs;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use rpstruct::constructions::{build_involution, parse_point, InvolutionProfile, PRecipe};
use rpstruct::holonomy::{admissibility_check_power, conjugator_image, jacobian as jacobian_report, TraceFormula};
use rpstruct::report::{self, AppendixOptions, Scenario, VerificationReport};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::Global;

pub const OK: u8 = 0;
pub const MISMATCH: u8 = 1;
pub const USAGE: u8 = 2;

/// Text to stdout, JSON to the `--json` target; `--json -` replaces the text.
fn emit(g: &Global, text: &str, json: &str) -> Result<()> {
    match &g.json {
        Some(p) if p.as_os_str() == "-" => println!("{json}"),
        Some(p) => {
            print!("{text}");
            fs::write(p, format!("{json}\n")).with_context(|| format!("writing {}", p.display()))?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn finish(g: &Global, mut report: VerificationReport, start: Instant) -> Result<u8> {
    if g.timing {
        report.timing = Some(start.elapsed().as_secs_f64());
    }
    emit(g, &report.render_text(), &report.to_json())?;
    Ok(if report.all_match() { OK } else { MISMATCH })
}

pub fn reproduce_appendix(g: &Global, points: usize, corrupt_recipe: bool) -> Result<u8> {
    if points == 0 {
        bail!("--points must be at least 1");
    }
    let start = Instant::now();
    let opts = AppendixOptions { seed: g.seed, points_per_size: points, corrupt_recipe };
    finish(g, report::reproduce_appendix(&opts)?, start)
}

pub fn leafspace(g: &Global, n: usize, i: usize) -> Result<u8> {
    let r = report::leafspace_report(n, i)?;
    emit(g, &r.render_text(), &r.to_json())?;
    Ok(OK)
}

fn recipe_and_profile(recipe: &str, t: usize, k: Option<usize>, symplectic: bool) -> Result<(PRecipe, InvolutionProfile)> {
    let r = PRecipe::from_id(recipe, t, k)?;
    let profile = if symplectic { InvolutionProfile::symplectic(t)? } else { r.default_profile() };
    Ok((r, profile))
}

pub fn jacobian(g: &Global, recipe: &str, t: usize, k: Option<usize>, point: &str, symplectic: bool) -> Result<u8> {
    let (r, profile) = recipe_and_profile(recipe, t, k, symplectic)?;
    let rep = jacobian_report(&r, &profile, &parse_point(point)?)?;
    let mut text = format!("{r} with {profile}{}\n", if rep.extension { " (extension)" } else { "" });
    for (i, row) in rep.jacobian.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(text, "  d tr(Q^{}): [{}]", i + 1, cells.join(", "));
    }
    let _ = writeln!(text, "det = {}", rep.determinant);
    emit(g, &text, &serde_json::to_string_pretty(&rep)?)?;
    Ok(OK)
}

pub fn trace_check(g: &Global, formula: &str, t: usize, point: Option<&str>, samples: usize) -> Result<u8> {
    let f: TraceFormula = formula.parse()?;
    match point {
        Some(p) => {
            let c = report::trace_check(f, t, &parse_point(p)?)?;
            let text = format!(
                "{f} at t = {t}: closed form {}, direct {}, {}\n",
                c.closed_form,
                c.direct,
                if c.agree { "agree" } else { "DIFFER" }
            );
            emit(g, &text, &serde_json::to_string_pretty(&c)?)?;
            Ok(if c.agree { OK } else { MISMATCH })
        }
        None => {
            if samples == 0 {
                bail!("--samples must be at least 1");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
            let a = report::trace_agreement(f, t, samples, &mut rng)?;
            let mut text = format!("{f} at t = {t}: {}/{} points agree\n", a.agreed, a.checked);
            if let Some(c) = &a.first_failure {
                let pt: Vec<String> = c.point.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(
                    text,
                    "  first difference at ({}): closed form {}, direct {}",
                    pt.join(", "),
                    c.closed_form,
                    c.direct
                );
            }
            emit(g, &text, &serde_json::to_string_pretty(&a)?)?;
            Ok(if a.agreed == a.checked { OK } else { MISMATCH })
        }
    }
}

pub fn admissibility(g: &Global, recipe: &str, t: usize, k: Option<usize>, point: &str, power: u32) -> Result<u8> {
    let (r, profile) = recipe_and_profile(recipe, t, k, false)?;
    let a = build_involution(&profile)?;
    let p = r.build(&parse_point(point)?)?;
    let rep = admissibility_check_power(&a, &p, r.arity(), power)?;
    let cp = conjugator_image(&a, &p)?.pow(power).charpoly();
    let text = format!(
        "{r} with {profile}, C^{power}\n  charpoly {}\n  distinct eigenvalues {} (admissible needs {})\n  multiplicity of 1: {}\n  reciprocal: {}\n  admissible: {}\n",
        cp.polynomial(),
        rep.distinct_eigenvalue_count,
        rep.expected,
        rep.multiplicity_of_one,
        rep.reciprocal,
        rep.admissible
    );
    emit(g, &text, &serde_json::to_string_pretty(&rep)?)?;
    Ok(OK)
}

pub fn montecarlo(g: &Global, scenario: &str, trials: usize) -> Result<u8> {
    let s: Scenario = scenario.parse()?;
    if trials == 0 {
        bail!("--trials must be at least 1");
    }
    let start = Instant::now();
    finish(g, report::montecarlo(s, g.seed, trials)?, start)
}

pub fn interval_obstruction(g: &Global, max_i: usize) -> Result<u8> {
    let start = Instant::now();
    finish(g, report::interval_report(max_i)?, start)
}
