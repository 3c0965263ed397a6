use coxdeform::algebra::*;
use dashu_ratio::RBig;

fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| gcd(*k, n) == 1).count() as u64
}

fn eval_f64(p: &RationalPoly, x: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |acc, c| {
        acc * x
            + c.to_string().parse::<f64>().unwrap_or_else(|_| {
                let s = c.to_string();
                let (a, b) = s.split_once('/').unwrap();
                a.parse::<f64>().unwrap() / b.parse::<f64>().unwrap()
            })
    })
}

#[test]
fn minpoly_small_cases() {
    assert_eq!(minpoly_two_cos(1), RationalPoly::from_ints(&[-2, 1]));
    assert_eq!(minpoly_two_cos(2), RationalPoly::from_ints(&[2, 1]));
    assert_eq!(minpoly_two_cos(5), RationalPoly::from_ints(&[-1, 1, 1]));
    assert_eq!(minpoly_two_cos(10), RationalPoly::from_ints(&[-1, -1, 1]));
    assert_eq!(minpoly_two_cos(12), RationalPoly::from_ints(&[-3, 0, 1]));
    assert_eq!(minpoly_two_cos(4), RationalPoly::from_ints(&[0, 1]));
}

#[test]
fn minpoly_degree_and_root() {
    for n in 3..80u64 {
        let p = minpoly_two_cos(n);
        assert_eq!(p.degree().unwrap() as u64, totient(n) / 2, "n = {n}");
        assert_eq!(*p.leading().unwrap(), RBig::ONE);
        let x = 2.0 * (2.0 * std::f64::consts::PI / n as f64).cos();
        let scale = eval_f64(
            &p.coeffs()
                .iter()
                .map(|c| c.clone() * c.clone())
                .collect::<Vec<_>>()
                .into_iter()
                .fold(RationalPoly::zero(), |acc, c| {
                    let k = acc.degree().map_or(0, |d| d + 1);
                    let mut v = acc.coeffs().to_vec();
                    v.resize(k, RBig::ZERO);
                    v.push(c);
                    RationalPoly::new(v)
                }),
            2.0,
        )
        .sqrt();
        assert!(eval_f64(&p, x).abs() < 1e-9 * scale.max(1.0), "n = {n}");
    }
}

#[test]
fn fields_for_labels() {
    let f = field_for_labels(&[2, 3]).unwrap();
    assert_eq!(f.l(), 6);
    assert_eq!(f.modulus(), &RationalPoly::from_ints(&[-3, 0, 1]));
    let f = field_for_labels(&[5]).unwrap();
    assert_eq!(f.modulus(), &RationalPoly::from_ints(&[-1, -1, 1]));
    let f = field_for_labels(&[2]).unwrap();
    assert_eq!(f.modulus(), &RationalPoly::from_ints(&[0, 1]));
    assert!(matches!(
        field_for_labels_bounded(&[7, 11, 13], 500),
        Err(AlgebraError::FieldTooLarge { .. })
    ));
}

#[test]
fn golden_ratio_arithmetic() {
    let f = field_for_labels(&[5]).unwrap();
    let lam = AlgebraicReal::primitive(&f);
    let one = AlgebraicReal::one(&f);
    assert_eq!(&lam * &lam, &lam + &one);
    assert_eq!(lam.inv().unwrap(), &lam - &one);
    assert_eq!(&lam + &AlgebraicReal::zero(&f), lam);
    assert_eq!((&lam - &one).sign(), 1);
    assert_eq!((&one - &lam).sign(), -1);
    assert_eq!(AlgebraicReal::zero(&f).sign(), 0);
    assert!(AlgebraicReal::zero(&f).inv().is_err());
    assert_eq!(embed_cos(5, &f).unwrap(), lam.half());
}

#[test]
fn embedded_cosines() {
    let f = field_for_labels(&[2, 3, 5]).unwrap();
    assert_eq!(f.l(), 30);
    assert!(embed_cos(2, &f).unwrap().is_zero());
    assert_eq!(
        embed_cos(3, &f).unwrap(),
        AlgebraicReal::from_rational(&(RBig::ONE / RBig::from(2)), &f)
    );
    assert!(matches!(
        embed_cos(7, &f),
        Err(AlgebraError::NotInField { .. })
    ));
    for m in [1u64, 2, 3, 5, 6, 10, 15, 30] {
        let c = embed_cos(m, &f).unwrap();
        let want = (std::f64::consts::PI / m as f64).cos();
        assert!((c.to_f64() - want).abs() < 1e-12, "m = {m}");
    }
    // 2cos(pi/m)^2 = 1 + cos(2pi/m) when 2m | 2L, i.e. cos(pi/m)^2 = (1 + cos(pi/(m/2)))/2
    for m in [2u64, 6, 10, 30] {
        let c = embed_cos(m, &f).unwrap();
        let c2 = embed_cos(m / 2, &f).unwrap();
        let lhs = (&c * &c).mul_int(2);
        assert_eq!(lhs, &AlgebraicReal::one(&f) + &c2, "m = {m}");
    }
}

#[test]
fn cos_equality_outside_the_field() {
    let f = field_for_labels(&[5]).unwrap();
    let c5 = embed_cos(5, &f).unwrap();
    assert!(equals_cos_pi_over(&c5, 5));
    // cos(2pi/5) = (lambda - 1)/2 is a conjugate root, not cos(pi/5)
    let c25 = (&AlgebraicReal::primitive(&f) - &AlgebraicReal::one(&f)).half();
    assert!(!equals_cos_pi_over(&c25, 5));
    assert!(!equals_cos_pi_over(&c5, 7));
    let half = AlgebraicReal::one(&f).half();
    assert!(equals_cos_pi_over(&half, 3));
    assert!(!equals_cos_pi_over(&half, 4));
}

mod props {
    use super::*;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn elem(f: &Arc<NumberField>, v: &[i64], d: i64) -> AlgebraicReal {
        let p = RationalPoly::new(v.iter().map(|&c| RBig::from(c) / RBig::from(d)).collect());
        AlgebraicReal::from_poly(&p, f)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn field_axioms(a in prop::collection::vec(-9i64..9, 8), b in prop::collection::vec(-9i64..9, 8),
                        c in prop::collection::vec(-9i64..9, 8), d in 1i64..6) {
            let f = field_for_labels(&[2, 3, 5]).unwrap();
            let (x, y, z) = (elem(&f, &a, d), elem(&f, &b, 1), elem(&f, &c, d + 1));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
            let s = x.sign();
            let approx = x.to_f64();
            if approx.abs() > 1e-9 {
                prop_assert_eq!(s, if approx > 0.0 { 1 } else { -1 });
            }
        }
    }
}
