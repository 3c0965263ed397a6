use std::time::Instant;

use coxdeform::algebra::AlgebraicReal;
use coxdeform::coxcore::*;

fn w(s: &str, m: &CoxeterMatrix) -> Word {
    parse_roles(s, |c| m.index_of(&c.to_string()))
}

#[test]
fn dihedral_five_basics() {
    let m = examples::dihedral(5);
    let sys = build_system(&m).unwrap();
    let f = sys.field().clone();
    let lam = AlgebraicReal::primitive(&f);
    assert_eq!(*sys.gram().get(0, 1), -lam.half());
    for r in 0..2 {
        let g = sys.generator(r);
        assert!(g.mul(g).is_identity());
        assert_eq!(g.transpose().mul(sys.gram()).mul(g), *sys.gram());
    }
    assert!(eval(&Word::empty(), &sys).is_identity());
    let ab = eval(&w("ab", &m), &sys);
    assert_eq!(order_with_cap(&ab, 100), Order::Finite(5));
    let a_bab = eval(&w("abab", &m), &sys);
    assert_eq!(order_with_cap(&a_bab, 100), Order::Finite(5));
    assert_eq!(
        order_with_cap(&eval(&Word::empty(), &sys), 10),
        Order::Finite(1)
    );
    // rs(e_r) = lam e_r + lam e_s
    let v = eval(&w("ab", &m), &sys).matrix.column(0);
    assert_eq!(v, vec![lam.clone(), lam.clone()]);
    // b(e_a) = e_a + lam e_b
    let rec = reflection_from_conjugate(&w("b", &m), 0, &sys);
    assert_eq!(rec.root.coords, vec![AlgebraicReal::one(&f), lam.clone()]);
    assert_eq!(rec.element, eval(&w("bab", &m), &sys));
    let rec = reflection_from_conjugate(&Word::empty(), 0, &sys);
    assert_eq!(rec.root.coords, unit_vector(2, 0, &f));
}

#[test]
fn a1_a1_generators_are_sign_flips() {
    let m = examples::dihedral(2);
    let sys = build_system(&m).unwrap();
    let f = sys.field().clone();
    let g = sys.generator(0);
    assert_eq!(*g.get(0, 0), AlgebraicReal::from_int(-1, &f));
    assert!(g.get(0, 1).is_zero() && g.get(1, 0).is_zero());
    assert!(g.get(1, 1).is_one());
}

#[test]
fn h3_alpha2() {
    let m = examples::h3();
    let sys = build_system(&m).unwrap();
    let f = sys.field().clone();
    for r in 0..3 {
        let g = sys.generator(r);
        assert!(g.mul(g).is_identity());
        assert_eq!(g.transpose().mul(sys.gram()).mul(g), *sys.gram());
    }
    let lam = coxdeform::algebra::embed_two_cos(5, &f).unwrap();
    let one = AlgebraicReal::one(&f);
    let v = eval(&w("srstrs", &m), &sys).matrix.column(0);
    assert_eq!(v, vec![&lam + &one, lam.mul_int(2), lam.clone()]);
}

#[test]
fn group_orders() {
    let sys = build_system(&examples::dihedral(5)).unwrap();
    assert_eq!(enumerate_group(&sys, 100).unwrap().len(), 10);
    for m in 2..9 {
        let sys = build_system(&examples::dihedral(m)).unwrap();
        assert_eq!(enumerate_group(&sys, 100).unwrap().len() as u64, 2 * m);
    }
    let sys = build_system(&examples::h3()).unwrap();
    assert_eq!(enumerate_group(&sys, 1000).unwrap().len(), 120);
    let inf = CoxeterMatrix::from_edges(&["a", "b"], &[(0, 1, Label::Infinite)], Label::Infinite);
    let sys = build_system(&inf).unwrap();
    assert!(matches!(
        enumerate_group(&sys, 50),
        Err(CoxError::GroupTooLarge { cap: 50 })
    ));
}

#[test]
fn h4_order() {
    let sys = build_system(&examples::h4()).unwrap();
    let t = Instant::now();
    let n = enumerate_group(&sys, 20000).unwrap().len();
    eprintln!("H4 enumeration: {:?}", t.elapsed());
    assert_eq!(n, 14400);
}

#[test]
fn coxeter_matrix_of_reflections() {
    let m = examples::dihedral(5);
    let sys = build_system(&m).unwrap();
    let a = reflection_from_conjugate(&Word::empty(), 0, &sys);
    let b = reflection_from_conjugate(&Word::empty(), 1, &sys);
    let got = coxeter_matrix_of(&[a.clone(), b], vec!["a".into(), "b".into()], &sys, 100).unwrap();
    assert_eq!(got, m);
    let bab = reflection_from_conjugate(&w("b", &m), 0, &sys);
    let got = coxeter_matrix_of(&[a, bab], vec!["x".into(), "y".into()], &sys, 100).unwrap();
    assert_eq!(got.label(0, 1), Label::Finite(5));

    let inf = CoxeterMatrix::from_edges(&["r", "x"], &[(0, 1, Label::Infinite)], Label::Infinite);
    let sys = build_system(&inf).unwrap();
    let r = reflection_from_conjugate(&Word::empty(), 0, &sys);
    let x = reflection_from_conjugate(&Word::empty(), 1, &sys);
    let got = coxeter_matrix_of(&[r, x], vec!["r".into(), "x".into()], &sys, 10).unwrap();
    assert_eq!(got.label(0, 1), Label::Infinite);
}

#[test]
fn invalid_matrices() {
    let names = vec!["a".to_string(), "b".to_string()];
    let asym = vec![
        vec![Label::Finite(1), Label::Finite(3)],
        vec![Label::Finite(4), Label::Finite(1)],
    ];
    assert!(CoxeterMatrix::new(names.clone(), asym).is_err());
    let diag = vec![
        vec![Label::Finite(2), Label::Finite(3)],
        vec![Label::Finite(3), Label::Finite(1)],
    ];
    assert!(CoxeterMatrix::new(names, diag).is_err());
}

#[test]
fn words() {
    let x = Word(vec![0, 1, 1, 0, 2]);
    assert_eq!(x.reduced(), Word(vec![2]));
    let c = Word(vec![1, 0]).conjugate_of(2);
    assert_eq!(c.split_conjugate(), Some((Word(vec![1, 0]), 2)));
    assert_eq!(Word(vec![0, 1]).split_conjugate(), None);
    assert_eq!(Word(vec![1, 0, 0]).conjugator_for(0), Word(vec![1]));
    assert_eq!(Word(vec![1, 0]).conjugator_for(0), Word(vec![1]));
}

mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn conjugates_are_reflections_with_roots(letters in prop::collection::vec(0usize..3, 0..14), r in 0usize..3) {
            let m = CoxeterMatrix::from_edges(
                &["a", "b", "c"],
                &[(0, 1, Label::Finite(5)), (1, 2, Label::Infinite), (0, 2, Label::Finite(3))],
                Label::Finite(2),
            );
            let sys = build_system(&m).unwrap();
            let rec = reflection_from_conjugate(&Word(letters), r, &sys);
            prop_assert!(!rec.element.is_identity());
            prop_assert!(rec.element.matrix.mul(&rec.element.matrix).is_identity());
            prop_assert!(rec.root.coords.iter().all(|c| c.sign() >= 0));
            prop_assert!(sys.pairing(&rec.root.coords, &rec.root.coords).is_one());
            prop_assert_eq!(reflection_matrix(&rec.root.coords, &sys), rec.element.matrix.clone());
        }
    }
}

#[test]
fn shortest_conjugate_is_minimal() {
    let sys = build_system(&examples::h3()).unwrap();
    let elems = enumerate_group(&sys, 200).unwrap();
    for g in &elems {
        for r in 0..3 {
            let rec = reflection_from_conjugate(g.word.as_ref().unwrap(), r, &sys);
            let (w, b) = shortest_conjugate(&rec.root.coords, &sys);
            let word = w.conjugate_of(b);
            assert_eq!(sys.word_matrix(&word), rec.element.matrix);
            let shortest = elems
                .iter()
                .find(|h| h.matrix == rec.element.matrix)
                .unwrap();
            assert_eq!(word.len(), shortest.word.as_ref().unwrap().len());
        }
    }
}
