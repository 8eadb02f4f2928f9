//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines are always printed; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rpstruct::constructions::{build_involution, InvolutionProfile, PRecipe};
use rpstruct::flow::{
    interval_quotient, invariant_embedding_obstruction, involution_on_strata, leaf_space, IntervalStar,
};
use rpstruct::holonomy::{conjugator_image, jacobian, nonadmissible_relation_check, TraceFormula};
use rpstruct::reference::{self, LEAF_SPACES, STRATUM_TABLES};
use rpstruct::report::{self, ADMISSIBILITY_THRESHOLD_PERCENT};
use rpstruct::{q, Matrix, Rational};

const SEED: u64 = 0;
const DETERMINANT_BUDGET: Duration = Duration::from_secs(60);
const TRACE_POINTS: usize = 25;
const TRACE_MAX_T: usize = 14;
const DENSITY_TRIALS: usize = 200;
const ORACLE_POINTS: usize = 1000;
const OBSTRUCTION_MAX_I: usize = 6;

type Outcome = (bool, String);

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cases = [
        (PRecipe::case2(9), ints(&[2, 3]), reference::DET_CASE2_T9),
        (PRecipe::case3(13, 5), ints(&[2, 3, 4, 5, 6]), reference::DET_CASE3_T13),
        (PRecipe::case3(14, 6), ints(&[2, 3, 4, 5, 6, 7]), reference::DET_CASE3_T14),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for (r, point, claim) in cases {
        let r = r.unwrap();
        let det = jacobian(&r, &r.default_profile(), &point).unwrap().determinant;
        let expected = claim.rational().unwrap().unwrap();
        ok &= det == expected;
        notes.push(format!("{r}: {det}"));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < DETERMINANT_BUDGET;
    (ok, format!("{} in {:.2}s", notes.join("; "), elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let table = report::case2_class_table(report::CLASS_SIZES.0, report::CLASS_SIZES.1).unwrap();
    let even = reference::DET_CASE2_EVEN_CLASS.rational().unwrap().unwrap();
    let half_odd = reference::DET_CASE2_HALF_ODD_CLASS.rational().unwrap().unwrap();
    let class = |pred: fn(usize) -> bool| -> Vec<(usize, Rational)> {
        table.iter().filter(|e| pred(e.t)).map(|e| (e.t, e.det.clone())).collect()
    };
    let evens = class(|t| t % 2 == 0);
    let half_odds = class(|t| t % 2 == 1 && ((t - 1) / 2) % 2 == 1);
    let hit = |c: &[(usize, Rational)], v: &Rational| c.iter().filter(|e| &e.1 == v).map(|e| e.0).collect::<Vec<_>>();
    let constant = |c: &[(usize, Rational)]| c.windows(2).all(|w| w[0].1 == w[1].1);
    let (he, ho) = (hit(&evens, &even), hit(&half_odds, &half_odd));
    let rows: Vec<String> = table.iter().map(|e| format!("t={}:{}", e.t, e.det)).collect();
    (
        !he.is_empty() && !ho.is_empty(),
        format!(
            "-128 at t={he:?} (t-independent: {}), -768/6859 at t={ho:?} (t-independent: {}); table {}",
            constant(&evens),
            constant(&half_odds),
            rows.join(" ")
        ),
    )
}

fn criterion_3() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for f in TraceFormula::ALL {
        let mut bad = Vec::new();
        let sizes = f.sizes(3, TRACE_MAX_T);
        for &t in &sizes {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (t as u64) << 8);
            let a = report::trace_agreement(f, t, TRACE_POINTS, &mut rng).unwrap();
            if a.agreed != a.checked || a.checked < TRACE_POINTS {
                bad.push(format!("t={} {}/{}", t, a.agreed, a.checked));
            }
        }
        ok &= bad.is_empty();
        notes.push(if bad.is_empty() {
            format!("{f} ok at t={sizes:?}")
        } else {
            format!("{f} differs at {}", bad.join(", "))
        });
    }
    (ok, notes.join("; "))
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for table in STRATUM_TABLES {
        let (lo, hi) = table.k_range;
        let mut bad = Vec::new();
        let mut descriptor_notes = 0;
        for k in lo..=hi {
            let c = report::check_stratum_table(&table, k).unwrap();
            if !(c.dimensions_match && c.emptiness_match) {
                bad.push(k);
            }
            descriptor_notes += c.descriptor_mismatches.len();
        }
        ok &= bad.is_empty();
        notes.push(format!(
            "{} k={lo}..{hi} {} ({} notation notes)",
            table.id,
            if bad.is_empty() { "ok".to_string() } else { format!("differs at k={bad:?}") },
            descriptor_notes
        ));
    }
    let inv = involution_on_strata(6, 3).unwrap();
    let tau_ok = inv.images.iter().all(|(s, t)| (t.dim, t.j) == reference::table3_tau(s.dim, s.j));
    ok &= tau_ok;
    notes.push(format!("tau on C_3, RP^6: {}", if tau_ok { "ok" } else { "differs" }));
    for (n, i, dims) in LEAF_SPACES {
        let same = leaf_space(n, i).unwrap().dimensions() == dims;
        ok &= same;
        notes.push(format!("L_{i} on RP^{n}: {}", if same { "ok" } else { "differs" }));
    }
    (ok, notes.join("; "))
}

fn random_profile(rng: &mut ChaCha8Rng, t: usize) -> InvolutionProfile {
    if t.is_multiple_of(2) && rng.gen_bool(0.3) {
        InvolutionProfile::Symplectic { t }
    } else {
        InvolutionProfile::DiagonalPm { t, k: rng.gen_range(1..=t / 2) }
    }
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();

    let mut matrices = 0;
    while matrices < 100 {
        let t = rng.gen_range(1..=6);
        let m = Matrix::from_fn(t, |_, _| Rational::from(rng.gen_range(-6i64..=6)));
        matrices += 1;
        if let Ok(inv) = m.inverse() {
            if !m.mul(&inv).is_identity() {
                failures.push(format!("inverse t={t}"));
            }
        }
        if !m.eval_poly(m.charpoly().polynomial()).is_zero() {
            failures.push(format!("Cayley-Hamilton t={t}"));
        }
    }

    let draw = |rng: &mut ChaCha8Rng| q(rng.gen_range(-9..=9), rng.gen_range(1..=4));
    for case in 1..=3 {
        let mut pairs = 0;
        while pairs < 100 {
            let r = match case {
                1 => PRecipe::case1(rng.gen_range(3..=14)),
                2 => PRecipe::case2(rng.gen_range(4..=14)),
                _ => {
                    let t = rng.gen_range(6..=12);
                    PRecipe::case3(t, rng.gen_range(3..=t / 2))
                }
            }
            .unwrap();
            let t = r.t;
            let a = build_involution(&random_profile(&mut rng, t)).unwrap();
            let point: Vec<Rational> = (0..r.arity()).map(|_| draw(&mut rng)).collect();
            let Ok(p) = r.build(&point) else { continue };
            let Ok(qm) = conjugator_image(&a, &p) else { continue };
            pairs += 1;
            if qm.det() != Rational::one() || !qm.charpoly().is_reciprocal() {
                failures.push(format!("{r} at {point:?}"));
            }
        }
    }

    for t in 5..=8 {
        let r = PRecipe::case1(t).unwrap();
        let a = build_involution(&r.default_profile()).unwrap();
        let mut done = 0;
        while done < 20 {
            let Ok(p) = r.build(&[draw(&mut rng)]) else { continue };
            let Ok(c) = conjugator_image(&a, &p) else { continue };
            done += 1;
            if c.charpoly().multiplicity(&Rational::one()) < t - 2 {
                failures.push(format!("eigenvalue 1 multiplicity, t={t}"));
            }
        }
    }

    for t in [4, 6, 8] {
        for _ in 0..50 {
            let mut lambda = draw(&mut rng);
            while lambda.is_zero() {
                lambda = draw(&mut rng);
            }
            if !nonadmissible_relation_check(t, &lambda).unwrap() {
                failures.push(format!("relation t={t}, lambda={lambda}"));
            }
        }
    }

    (
        failures.is_empty(),
        if failures.is_empty() {
            "100 matrices, 3x100 (A,P) pairs, 80 Case 1 points, 150 lambdas".to_string()
        } else {
            failures.join("; ")
        },
    )
}

fn criterion_6() -> Outcome {
    let c = report::admissibility_density(SEED, DENSITY_TRIALS).unwrap();
    (
        100 * c.admissible >= ADMISSIBILITY_THRESHOLD_PERCENT * c.trials,
        format!(
            "{}/{} admissible ({} singular), need {ADMISSIBILITY_THRESHOLD_PERCENT}%",
            c.admissible, c.trials, c.singular
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, spec) in report::oracle_specs().unwrap() {
        let c = report::flow_oracle(&spec, ORACLE_POINTS, &mut rng).unwrap();
        ok &= c.agree == ORACLE_POINTS && c.disagree == 0 && c.inconclusive == 0;
        notes.push(format!("{name} {}/{} ({} inconclusive)", c.agree, c.trials, c.inconclusive));
    }
    (ok, notes.join("; "))
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    for i in 1..=OBSTRUCTION_MAX_I {
        ok &= invariant_embedding_obstruction(&interval_quotient(i).unwrap());
    }
    let control = IntervalStar::new(3, vec![1, 2, 3], false).unwrap();
    let control_holds = invariant_embedding_obstruction(&control);
    (
        ok && !control_holds,
        format!("obstruction for i=1..{OBSTRUCTION_MAX_I}: {ok}; identity control: {control_holds}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("appendix determinants", criterion_1),
        ("class determinants", criterion_2),
        ("closed-form traces", criterion_3),
        ("stratum tables", criterion_4),
        ("exact property suites", criterion_5),
        ("admissibility density", criterion_6),
        ("flow oracle", criterion_7),
        ("interval obstruction", criterion_8),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = run();
        failed += usize::from(!ok);
        println!("{} criterion {}: {name}: {detail}", if ok { "PASS" } else { "FAIL" }, n + 1);
    }
    println!("acceptance: {} of 8 criteria pass", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
