use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rpstruct::constructions::{build_involution, InvolutionProfile, PRecipe};
use rpstruct::holonomy::{
    conjugator_image, jacobian, nonadmissible_relation_check, trace_vector, TraceFormula,
};
use rpstruct::{q, Dual, Matrix, Rational};

fn random_int_matrix(rng: &mut ChaCha8Rng, t: usize) -> Matrix<Rational> {
    Matrix::from_fn(t, |_, _| Rational::from(rng.gen_range(-5i64..=5)))
}

fn random_profile(rng: &mut ChaCha8Rng, t: usize) -> InvolutionProfile {
    if t.is_multiple_of(2) && rng.gen_bool(0.3) {
        InvolutionProfile::Symplectic { t }
    } else {
        InvolutionProfile::DiagonalPm { t, k: rng.gen_range(1..=t / 2) }
    }
}

#[test]
fn involutions_square_to_plus_minus_identity() {
    for t in 2..=14 {
        for k in 1..=t / 2 {
            let a = build_involution(&InvolutionProfile::DiagonalPm { t, k }).unwrap();
            assert!(a.mul(&a).is_identity());
        }
        if t % 2 == 0 {
            let s = build_involution(&InvolutionProfile::Symplectic { t }).unwrap();
            assert!(s.mul(&s).neg().is_identity());
        }
    }
}

#[test]
fn q_has_unit_determinant_and_is_conjugate_to_its_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 100 {
        let t = rng.gen_range(2..=14);
        let a = build_involution(&random_profile(&mut rng, t)).unwrap();
        let p = random_int_matrix(&mut rng, t);
        let Ok(qm) = conjugator_image(&a, &p) else { continue };
        checked += 1;
        assert_eq!(qm.det(), Rational::one(), "t = {t}");
        let qinv = qm.inverse().unwrap();
        let ainv = a.inverse().unwrap();
        assert_eq!(a.mul(&qinv).mul(&ainv), qm);
        assert!(qm.charpoly().is_reciprocal());
    }
}

/// Directional derivative of `tr(Q^i)` from `dQ = A dP A P^-1 - Q dP P^-1`,
/// with `dP = P(e_j) - P(0)` since every recipe is affine in its parameters.
fn jacobian_by_differentials(recipe: &PRecipe, point: &[Rational]) -> Vec<Vec<Rational>> {
    let k = recipe.arity();
    let a = build_involution(&recipe.default_profile()).unwrap();
    let p = recipe.build(point).unwrap();
    let p_inv = p.inverse().unwrap();
    let qm = a.mul(&p).mul(&a).mul(&p_inv);
    let p0 = recipe.build(&vec![Rational::zero(); k]).unwrap();
    let mut powers = vec![Matrix::identity(p.size())];
    for _ in 1..k {
        powers.push(powers.last().unwrap().mul(&qm));
    }
    let mut jac = vec![vec![Rational::zero(); k]; k];
    for j in 0..k {
        let mut e = vec![Rational::zero(); k];
        e[j] = Rational::one();
        let dp = recipe.build(&e).unwrap().sub(&p0);
        let dq = a.mul(&dp).mul(&a).mul(&p_inv).sub(&qm.mul(&dp).mul(&p_inv));
        for (i, row) in jac.iter_mut().enumerate() {
            // d tr(Q^(i+1)) = (i+1) tr(Q^i dQ)
            row[j] = &Rational::from(i as i64 + 1) * &powers[i].mul(&dq).trace();
        }
    }
    jac
}

#[test]
fn jacobian_matches_differential_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let recipes = [
        PRecipe::case1(5).unwrap(),
        PRecipe::case1(6).unwrap(),
        PRecipe::case2(6).unwrap(),
        PRecipe::case2(7).unwrap(),
        PRecipe::case2(9).unwrap(),
        PRecipe::case3(8, 3).unwrap(),
        PRecipe::case3(9, 4).unwrap(),
    ];
    for r in recipes {
        let mut done = 0;
        while done < 4 {
            let point: Vec<Rational> =
                (0..r.arity()).map(|_| q(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
            let Ok(rep) = jacobian(&r, &r.default_profile(), &point) else { continue };
            assert_eq!(rep.jacobian, jacobian_by_differentials(&r, &point), "{r} at {point:?}");
            done += 1;
        }
    }
}

#[test]
fn jacobian_close_to_symmetric_difference_quotient() {
    let r = PRecipe::case2(7).unwrap();
    let point = [q(2, 1), q(3, 1)];
    let rep = jacobian(&r, &r.default_profile(), &point).unwrap();
    let a = build_involution(&r.default_profile()).unwrap();
    let traces = |x: &[Rational]| {
        let qm = conjugator_image(&a, &r.build(x).unwrap()).unwrap();
        trace_vector(&qm, 2).unwrap()
    };
    let h = q(1, 10_000);
    for j in 0..2 {
        let mut plus = point.to_vec();
        let mut minus = point.to_vec();
        plus[j] = &plus[j] + &h;
        minus[j] = &minus[j] - &h;
        let (fp, fm) = (traces(&plus), traces(&minus));
        for i in 0..2 {
            let fd = &(&fp[i] - &fm[i]) / &(&h + &h);
            let err = (&fd - &rep.jacobian[i][j]).abs();
            assert!(err < q(1, 100_000), "entry ({i},{j}) off by {err}");
        }
    }
}

/// Bivariate polynomial over the rationals, keyed by `(deg_x, deg_y)`.
#[derive(Clone, Debug, Default, PartialEq)]
struct Bi(BTreeMap<(u32, u32), Rational>);

impl Bi {
    fn c(v: i64) -> Bi {
        Bi(BTreeMap::from([((0, 0), Rational::from(v))]))
    }
    fn x() -> Bi {
        Bi(BTreeMap::from([((1, 0), Rational::one())]))
    }
    fn y() -> Bi {
        Bi(BTreeMap::from([((0, 1), Rational::one())]))
    }
    fn add(&self, o: &Bi) -> Bi {
        let mut m = self.0.clone();
        for (k, v) in &o.0 {
            let e = m.entry(*k).or_insert_with(Rational::zero);
            *e = &*e + v;
        }
        Bi(m)
    }
    fn neg(&self) -> Bi {
        Bi(self.0.iter().map(|(k, v)| (*k, -v)).collect())
    }
    fn sub(&self, o: &Bi) -> Bi {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Bi) -> Bi {
        let mut out = Bi::default();
        for ((a, b), v) in &self.0 {
            for ((c, d), w) in &o.0 {
                out = out.add(&Bi(BTreeMap::from([((a + c, b + d), v * w)])));
            }
        }
        out
    }
    fn dx(&self) -> Bi {
        Bi(self
            .0
            .iter()
            .filter(|((a, _), _)| *a > 0)
            .map(|((a, b), v)| ((a - 1, *b), &Rational::from(*a as i64) * v))
            .collect())
    }
    fn dy(&self) -> Bi {
        Bi(self
            .0
            .iter()
            .filter(|((_, b), _)| *b > 0)
            .map(|((a, b), v)| ((*a, b - 1), &Rational::from(*b as i64) * v))
            .collect())
    }
    fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.0
            .iter()
            .map(|((a, b), v)| &(v * &x.pow(*a as i32).unwrap()) * &y.pow(*b as i32).unwrap())
            .sum()
    }
}

/// `f = c + S / D` as printed, with `S` the signed sum of the numerators.
fn case2_parts(f: TraceFormula, t: i64) -> (i64, Bi, Bi) {
    let (x, y, c) = (Bi::x(), Bi::y(), Bi::c);
    let xy = x.mul(&y);
    let xx = x.mul(&x);
    let yy = y.mul(&y);
    let sum = |terms: Vec<(i64, Bi)>| {
        terms.into_iter().fold(Bi::default(), |acc, (s, p)| if s > 0 { acc.add(&p) } else { acc.sub(&p) })
    };
    match f {
        TraceFormula::Case2Even => (
            t - 4,
            sum(vec![
                (-1, c(2).mul(&c(-1).add(&x))),
                (-1, y.neg().sub(&x).mul(&y.neg().add(&x))),
                (-1, c(-1).add(&x).mul(&y)),
                (-1, c(2).mul(&y.sub(&c(1)))),
                (-1, x.neg().add(&xy).sub(&yy).add(&xx)),
                (-1, yy.neg().sub(&y).add(&xy).add(&xx)),
                (-1, x.mul(&y.sub(&c(1)))),
                (-1, y.sub(&x).mul(&y.add(&x))),
            ]),
            c(1).sub(&x).sub(&y).add(&xy).sub(&yy).add(&xx),
        ),
        TraceFormula::Case2OddHalfEven => (
            t - 6,
            sum(vec![
                (-1, c(2).mul(&y)),
                (-1, y.neg().sub(&x)),
                (-1, c(1).add(&yy)),
                (-1, c(-1).sub(&c(2).mul(&x)).sub(&yy).add(&xy)),
                (-1, y.mul(&c(1).add(&x))),
                (-1, yy.neg()),
                (1, y.add(&c(2).mul(&x))),
                (1, c(1)),
                (1, c(1).add(&y).add(&x).add(&yy)),
                (1, c(1).add(&y).add(&x).add(&xy)),
                (-1, x.neg().sub(&yy).add(&xy)),
                (-1, c(1).add(&c(2).mul(&y)).add(&c(2).mul(&x))),
                (-1, x.mul(&c(-1).add(&y))),
                (1, y.sub(&x).mul(&c(-1).add(&y))),
            ]),
            c(1).add(&y).add(&c(2).mul(&x)).add(&yy),
        ),
        TraceFormula::Case2OddHalfOdd => (
            t - 6,
            sum(vec![
                (-1, c(3).mul(&y)),
                (-1, y.neg().sub(&x)),
                (-1, c(2).mul(&yy)),
                (-1, y.add(&x)),
                (-1, yy.neg().add(&xy).sub(&y).sub(&x)),
                (-1, xy.add(&y).add(&x)),
                (1, yy.add(&y).add(&x)),
                (1, x.clone()),
                (1, xy.add(&c(2).mul(&x)).add(&y)),
                (-1, y.mul(&x.sub(&y).sub(&c(1)))),
                (-1, xy.clone()),
                (1, y.mul(&y.sub(&x))),
            ]),
            yy.add(&c(2).mul(&y)).add(&c(2).mul(&x)),
        ),
        _ => unreachable!(),
    }
}

#[test]
fn formula_gradients_match_hand_derivatives() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let draw = |rng: &mut ChaCha8Rng| q(rng.gen_range(-15..=15), rng.gen_range(1..=7));
    for f in TraceFormula::ALL {
        let t = f.sizes(3, 14)[0];
        let ti = t as i64;
        let mut done = 0;
        while done < 10 {
            let point: Vec<Rational> = (0..f.arity()).map(|_| draw(&mut rng)).collect();
            let Ok(value) = f.eval(t, &Dual::seed_all(&point)) else { continue };
            let x = &point[0];
            let grad: Vec<Rational> = match f {
                TraceFormula::Case1Odd => vec![-(&Rational::from(2 * ti - 6) / &(x * x))],
                TraceFormula::Case1Even => {
                    let a = q(ti * ti - 6 * ti + 8, 2);
                    let b = q(ti * ti * ti - 10 * ti * ti + 28 * ti - 32, 4);
                    let c = q(ti - 2, 2);
                    let d = q(ti * ti - 6 * ti + 4, 4);
                    let den = &(&c * x) + &d;
                    vec![&(&(&a * &d) - &(&b * &c)) / &(&den * &den)]
                }
                _ => {
                    let (c0, s, d) = case2_parts(f, ti);
                    let y = &point[1];
                    let dv = d.eval(x, y);
                    let sv = s.eval(x, y);
                    let d2 = &dv * &dv;
                    assert_eq!(value.value(), &(&Rational::from(c0) + &(&sv / &dv)), "{f}");
                    vec![
                        &(&(&s.dx().eval(x, y) * &dv) - &(&sv * &d.dx().eval(x, y))) / &d2,
                        &(&(&s.dy().eval(x, y) * &dv) - &(&sv * &d.dy().eval(x, y))) / &d2,
                    ]
                }
            };
            assert_eq!(value.partials(), grad.as_slice(), "{f} at {point:?}");
            done += 1;
        }
    }
}

#[test]
fn case1_eigenvalue_one_has_multiplicity_at_least_n_minus_1() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for t in 3..=10 {
        let r = PRecipe::case1(t).unwrap();
        let a = build_involution(&r.default_profile()).unwrap();
        let mut done = 0;
        while done < 20 {
            let x = q(rng.gen_range(-20..=20), rng.gen_range(1..=5));
            let Ok(p) = r.build(&[x]) else { continue };
            let Ok(c) = conjugator_image(&a, &p) else { continue };
            assert!(c.eigenvalue_multiplicity(&Rational::one()) >= t - 2, "t = {t}");
            done += 1;
        }
    }
}

proptest! {
    #[test]
    fn nonadmissible_relation_holds(n in -40i64..=40, d in 1i64..=13, half in 2usize..=4) {
        prop_assume!(n != 0);
        prop_assert!(nonadmissible_relation_check(2 * half, &q(n, d)).unwrap());
    }
}

/// Stated density of nonsingular conjugators: every recipe, 100 seeded
/// integer parameter vectors in `[-5, 5]`, at least 95 nonsingular.
#[test]
fn conjugators_nonsingular_at_95_percent_of_integer_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut recipes = Vec::new();
    recipes.extend((3..=14).map(|t| PRecipe::case1(t).unwrap()));
    recipes.extend((4..=14).map(|t| PRecipe::case2(t).unwrap()));
    for t in 6..=14 {
        recipes.extend((3..=t / 2).map(|k| PRecipe::case3(t, k).unwrap()));
    }
    let mut failures = Vec::new();
    for r in recipes {
        let nonsingular = (0..100)
            .filter(|_| {
                let params: Vec<Rational> =
                    (0..r.arity()).map(|_| Rational::from(rng.gen_range(-5i64..=5))).collect();
                !r.build(&params).unwrap().det().is_zero()
            })
            .count();
        if nonsingular < 95 {
            failures.push(format!("{r}: {nonsingular}/100"));
        }
    }
    assert!(failures.is_empty(), "below 95/100 nonsingular: {}", failures.join(", "));
}
