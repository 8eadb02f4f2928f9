use proptest::prelude::*;
use rpstruct::{q, Dual, Matrix, Polynomial, Rational};

fn int_matrix(max_t: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max_t).prop_flat_map(|t| {
        prop::collection::vec(-6i64..=6, t * t)
            .prop_map(move |v| Matrix::from_fn(t, |i, j| Rational::from(v[i * t + j])))
    })
}

fn rational_matrix(max_t: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max_t).prop_flat_map(|t| {
        prop::collection::vec((-9i64..=9, 1i64..=5), t * t)
            .prop_map(move |v| Matrix::from_fn(t, |i, j| q(v[i * t + j].0, v[i * t + j].1)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn inverse_round_trip(m in rational_matrix(6)) {
        match m.inverse() {
            Ok(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
                prop_assert_eq!(inv.inverse().unwrap(), m.clone());
                prop_assert!(!m.det().is_zero());
            }
            Err(_) => prop_assert!(m.det().is_zero()),
        }
    }

    #[test]
    fn cayley_hamilton(m in int_matrix(6)) {
        let cp = m.charpoly();
        prop_assert!(m.eval_poly(cp.polynomial()).is_zero());
        prop_assert_eq!(cp.degree(), m.size());
    }

    #[test]
    fn charpoly_coefficients(m in rational_matrix(6)) {
        let t = m.size();
        let cp = m.charpoly();
        let p = cp.polynomial();
        prop_assert!(p.is_monic());
        prop_assert_eq!(m.trace(), -p.coeff(t - 1));
        let c0 = p.coeff(0);
        prop_assert_eq!(m.det(), if t % 2 == 0 { c0 } else { -c0 });
        // independent recurrence
        prop_assert_eq!(p, &Polynomial::new(m.faddeev_leverrier()));
    }

    #[test]
    fn det_is_multiplicative(a in int_matrix(5), b in int_matrix(5)) {
        prop_assume!(a.size() == b.size());
        prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
        prop_assert_eq!(a.transpose().det(), a.det());
    }

    #[test]
    fn dual_det_value_and_jacobi(m in int_matrix(4), dir in prop::collection::vec(-3i64..=3, 16)) {
        // d det(M + eps E) = tr(adj(M) E); check against det(M) tr(M^-1 E)
        let t = m.size();
        let e = Matrix::from_fn(t, |i, j| Rational::from(dir[i * t + j]));
        let md = Matrix::from_fn(t, |i, j| {
            Dual::from_parts(m[(i, j)].clone(), vec![e[(i, j)].clone()])
        });
        let d = md.det();
        prop_assert_eq!(d.value(), &m.det());
        if let Ok(inv) = m.inverse() {
            prop_assert_eq!(d.partial(0), &(&m.det() * &inv.mul(&e).trace()));
        }
    }

    #[test]
    fn json_round_trip(m in rational_matrix(5)) {
        prop_assert_eq!(Matrix::from_json(&m.to_json()).unwrap(), m);
    }
}

#[test]
fn json_rejects_malformed() {
    for bad in [
        r#"{"t":2,"entries":[["1"],["2"]]}"#,
        r#"{"t":1,"entries":[["1/0"]]}"#,
        r#"{"t":2,"entries":[["1","2"]]}"#,
        r#"{"t":0,"entries":[]}"#,
        r#"{"t":1,"entries":[["x"]],"extra":1}"#,
        r#"[1,2]"#,
    ] {
        assert!(Matrix::from_json(bad).is_err(), "{bad}");
    }
}

#[test]
fn singular_has_no_inverse() {
    let m = Matrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).unwrap();
    assert!(m.inverse().is_err());
    assert!(m.det().is_zero());
    assert_eq!(m.charpoly().multiplicity(&Rational::zero()), 1);
}
