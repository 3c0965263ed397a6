use coxdeform::coxcore::{build_system, enumerate_group, examples, CoxError, CoxeterMatrix, Label};
use coxdeform::diagrams::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const INF: Label = Label::Infinite;

fn f(m: u64) -> Label {
    Label::Finite(m)
}

/// Diagram on the given names; unlisted pairs get `default`.
fn dg(names: &str, edges: &[(&str, &str, Label)], default: Label) -> Diagram {
    let names: Vec<&str> = names.split_whitespace().collect();
    let idx = |n: &str| names.iter().position(|&x| x == n).unwrap();
    let e: Vec<_> = edges.iter().map(|&(a, b, l)| (idx(a), idx(b), l)).collect();
    Diagram::from_matrix(&CoxeterMatrix::from_edges(&names, &e, default))
}

fn v(d: &Diagram, n: &str) -> usize {
    d.names().iter().position(|x| x == n).unwrap()
}

fn vs(d: &Diagram, ns: &str) -> VSet {
    ns.split_whitespace().fold(0, |acc, n| acc | bit(v(d, n)))
}

fn four_cycle() -> Diagram {
    dg(
        "a b c d",
        &[
            (&"a", &"b", f(3)),
            ("b", "c", f(3)),
            ("c", "d", f(3)),
            ("d", "a", f(3)),
        ],
        INF,
    )
}

/// `H4` on `r s t u` plus `y` with labels 2 to `r s t` and infinity to `u`.
fn minimal_wild() -> Diagram {
    dg(
        "r s t u y",
        &[
            ("r", "s", f(5)),
            ("s", "t", f(3)),
            ("t", "u", f(3)),
            ("u", "y", INF),
        ],
        f(2),
    )
}

#[test]
fn perp_fin_inf_examples() {
    let d = dg(
        "a b c",
        &[("a", "b", f(3)), ("b", "c", f(3)), ("a", "c", INF)],
        f(2),
    );
    let (p, fin, inf) = perp_fin_inf(&d, vs(&d, "a b"));
    assert_eq!((p, fin, inf), (0, 0, vs(&d, "c")));

    let d = dg("a b d", &[("a", "b", f(3))], f(2));
    let (p, _, _) = perp_fin_inf(&d, vs(&d, "a b"));
    assert_eq!(p, vs(&d, "d"));

    let d = four_cycle();
    let (_, _, inf) = perp_fin_inf(&d, vs(&d, "a b"));
    assert_eq!(inf, vs(&d, "c d"));
}

#[test]
fn j_component_examples() {
    let d = four_cycle();
    assert_eq!(j_components(&d, vs(&d, "a b")), vec![vs(&d, "c d")]);

    let d = dg("a b", &[("a", "b", f(5))], f(2));
    assert!(j_components(&d, vs(&d, "a b")).is_empty());

    let d = dg("a b x y", &[("a", "b", f(5))], INF);
    assert_eq!(j_components(&d, vs(&d, "a b")).len(), 2);
}

#[test]
fn flexibility_examples() {
    let d = four_cycle();
    let fl = is_flexible(&d, v(&d, "a"), v(&d, "b"));
    assert!(!fl.flexible);
    let c = fl.witness.unwrap();
    assert_eq!(c.len(), 4);
    assert_eq!((c[0], c[3]), (v(&d, "a"), v(&d, "b")));
    assert!(is_chordfree_circuit(&d, &c));

    let d = dg("r s", &[("r", "s", f(5))], f(2));
    assert!(is_flexible(&d, 0, 1).flexible);

    let d = dg("r s x", &[("r", "s", f(5))], INF);
    assert!(is_flexible(&d, 0, 1).flexible);
}

#[test]
fn theta_edge_examples() {
    let d = dg("r s x", &[("r", "s", f(5))], INF);
    assert!(is_theta_edge(&d, 0, 1));
    let d = Diagram::from_matrix(&examples::h3());
    assert!(!is_theta_edge(&d, 0, 1));
    let d = dg("r s t", &[("r", "s", f(5))], f(2));
    assert!(is_theta_edge(&d, 0, 1));
}

#[test]
fn spherical_examples() {
    assert!(is_spherical(&Diagram::from_matrix(&examples::h3()), 0b111));
    assert!(is_spherical(&Diagram::from_matrix(&examples::h4()), 0b1111));
    let tri = dg("a b c", &[], f(3));
    assert!(!is_spherical(&tri, 0b111));
    assert!(is_spherical(&tri, 0b1));
    // affine H3 analogue: r-5-s-3-t-5-x is hyperbolic
    let d = dg(
        "r s t x",
        &[("r", "s", f(5)), ("s", "t", f(3)), ("t", "x", f(5))],
        f(2),
    );
    assert!(!is_spherical(&d, 0b1111));
}

#[test]
fn delta_edge_examples() {
    let d = dg("r s", &[("r", "s", f(5))], f(2));
    assert!(is_delta_edge(&d, 0, 1).delta);

    let d = four_cycle();
    let rep = is_delta_edge(&d, 0, 1);
    assert!(!rep.delta);
    assert_eq!(rep.violation.unwrap().pattern, "DE2");

    let d = Diagram::from_matrix(&examples::h3());
    assert!(is_delta_edge(&d, 0, 1).delta);
    assert!(is_delta_edge(&Diagram::from_matrix(&examples::h4()), 0, 1).delta);

    // a 2-spherical, irreducible, non-spherical superset
    let d = dg(
        "r s t x",
        &[("r", "s", f(5)), ("s", "t", f(3)), ("t", "x", f(5))],
        f(2),
    );
    assert_eq!(is_delta_edge(&d, 0, 1).violation.unwrap().pattern, "DE1");
}

#[test]
fn de3_and_de4_templates_match() {
    // H3 core, p0 commutes with r, s and has infinity to t; p1 meets t and
    // has infinity to r.
    let d = dg(
        "r s t p q",
        &[
            ("r", "s", f(5)),
            ("s", "t", f(3)),
            ("r", "t", f(2)),
            ("p", "r", f(2)),
            ("p", "s", f(2)),
            ("p", "q", f(3)),
            ("q", "t", f(2)),
            ("q", "s", f(2)),
        ],
        INF,
    );
    let rep = is_delta_edge(&d, 0, 1);
    assert!(!rep.delta);
    let viol = rep.violation.unwrap();
    assert_eq!(viol.pattern, "DE3");
    assert_eq!(viol.vertices.len(), 5);

    // H4 core, p0 commutes with r, s, t and has infinity to u; p1 meets u
    // and has infinity to r.
    let d = dg(
        "r s t u p q",
        &[
            ("r", "s", f(5)),
            ("s", "t", f(3)),
            ("t", "u", f(3)),
            ("r", "t", f(2)),
            ("r", "u", f(2)),
            ("s", "u", f(2)),
            ("p", "r", f(2)),
            ("p", "s", f(2)),
            ("p", "t", f(2)),
            ("p", "q", f(3)),
            ("q", "u", f(2)),
            ("q", "s", f(2)),
            ("q", "t", f(2)),
        ],
        INF,
    );
    let rep = is_delta_edge(&d, 0, 1);
    assert!(!rep.delta);
    assert_eq!(rep.violation.unwrap().pattern, "DE4");
}

#[test]
fn context_examples() {
    let d = Diagram::from_matrix(&examples::h3());
    let c = edge_context(&d, 0, 1).unwrap();
    assert_eq!(c.t, bit(2));
    assert_eq!(c.t_s, bit(2));
    assert_eq!(c.u, 0);
    assert_eq!(c.t3, bit(2));
    assert_eq!(c.degree, 0);

    let d = Diagram::from_matrix(&examples::h4());
    let c = edge_context(&d, 0, 1).unwrap();
    assert_eq!(c.t, bit(2));
    assert_eq!(c.u_of[&2], bit(3));
    assert_eq!(c.t4, bit(2));
    assert!(c.is_tame(2));

    let d = dg("r s x", &[("r", "s", f(5))], INF);
    let c = edge_context(&d, 0, 1).unwrap();
    assert_eq!(c.t, 0);
    assert_eq!(c.degree, 0);
}

#[test]
fn tameness_examples() {
    let d = Diagram::from_matrix(&examples::h3());
    assert!(is_tame(&d, 0, 1, 2));
    assert!(is_tame(&Diagram::from_matrix(&examples::h4()), 0, 1, 2));

    // two elements in U_t with infinity between them
    let d = dg(
        "r s t u w",
        &[
            ("r", "s", f(5)),
            ("s", "t", f(3)),
            ("t", "u", f(3)),
            ("t", "w", f(3)),
            ("u", "w", INF),
        ],
        f(2),
    );
    assert!(!is_tame(&d, 0, 1, 2));

    let d = minimal_wild();
    assert!(is_delta_edge(&d, 0, 1).delta);
    assert!(!is_tame(&d, 0, 1, 2));
    let c = edge_context(&d, 0, 1).unwrap();
    assert_eq!(c.degree, 1);
    let pieces = wild_pieces(&d, &c, 2);
    assert_eq!(pieces[0].y, vs(&d, "r s t y"));
    assert_eq!(pieces[1].y, vs(&d, "r s t u"));
    assert!(structure_violations(&d, &c).is_empty());
}

fn random_diagram(rng: &mut StdRng, n: usize, labels: &[Label]) -> Diagram {
    let mut m = vec![vec![f(1); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let l = labels[rng.gen_range(0..labels.len())];
            m[i][j] = l;
            m[j][i] = l;
        }
    }
    let names = (0..n).map(|i| format!("S{i}")).collect();
    Diagram::from_matrix(&CoxeterMatrix::new(names, m).unwrap())
}

#[test]
fn flexibility_agrees_with_circuit_search() {
    let mut rng = StdRng::seed_from_u64(7);
    let labels = [f(2), f(3), f(5), INF];
    let mut checked = 0;
    let mut inflexible = 0;
    while checked < 1500 {
        let n = rng.gen_range(2..=7);
        let d = random_diagram(&mut rng, n, &labels);
        for (r, s) in d.edges() {
            let fl = is_flexible(&d, r, s);
            let circuit = chordfree_circuit_through(&d, r, s);
            assert_eq!(fl.flexible, circuit.is_none());
            if let Some(c) = &fl.witness {
                assert!(c.len() >= 4 && is_chordfree_circuit(&d, c));
                assert_eq!((c[0], c[c.len() - 1]), (r, s));
                inflexible += 1;
            }
            if let Some(c) = circuit {
                assert!(c.len() >= 4 && is_chordfree_circuit(&d, &c));
            }
        }
        checked += 1;
    }
    assert!(inflexible > 50);
}

#[test]
fn spherical_agrees_with_enumeration() {
    let mut cases = vec![
        examples::dihedral(5),
        examples::h3(),
        examples::h4(),
        CoxeterMatrix::from_edges(&["a", "b", "c"], &[], f(3)),
    ];
    let mut rng = StdRng::seed_from_u64(11);
    let labels = [f(2), f(2), f(3), f(4), INF];
    for _ in 0..30 {
        let n = rng.gen_range(2..=4);
        cases.push(random_diagram(&mut rng, n, &labels).to_matrix());
    }
    let labels5 = [f(2), f(2), f(3), f(5)];
    for _ in 0..10 {
        cases.push(random_diagram(&mut rng, 3, &labels5).to_matrix());
    }
    for m in cases {
        let d = Diagram::from_matrix(&m);
        let sys = build_system(&m).unwrap();
        let finite = match enumerate_group(&sys, 20000) {
            Ok(_) => true,
            Err(CoxError::GroupTooLarge { .. }) => false,
            Err(e) => panic!("{e}"),
        };
        assert_eq!(is_spherical(&d, d.active()), finite, "{m:?}");
    }
}

/// Random diagrams around a 5-edge on `S0, S1`, with an H3 vertex forced in.
fn random_h_diagram(rng: &mut StdRng) -> Diagram {
    let n = rng.gen_range(3..=7);
    let labels = [f(2), f(2), f(3), f(5), INF, INF];
    let mut m = vec![vec![f(1); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let l = labels[rng.gen_range(0..labels.len())];
            m[i][j] = l;
            m[j][i] = l;
        }
    }
    let set = |m: &mut Vec<Vec<Label>>, i: usize, j: usize, l: Label| {
        m[i][j] = l;
        m[j][i] = l;
    };
    set(&mut m, 0, 1, f(5));
    let (a, b) = if rng.gen_bool(0.5) { (2, 3) } else { (3, 2) };
    set(&mut m, 0, 2, f(a));
    set(&mut m, 1, 2, f(b));
    if n > 3 && rng.gen_bool(0.5) {
        set(&mut m, 0, 3, f(2));
        set(&mut m, 1, 3, f(2));
        set(&mut m, 2, 3, f(3));
    }
    let names = (0..n).map(|i| format!("S{i}")).collect();
    Diagram::from_matrix(&CoxeterMatrix::new(names, m).unwrap())
}

#[test]
fn structure_invariants_on_delta_edges() {
    let mut rng = StdRng::seed_from_u64(3);
    let mut contexts = 0;
    let mut wild = 0;
    let mut with_u = 0;
    let mut fixed = vec![
        Diagram::from_matrix(&examples::h3()),
        Diagram::from_matrix(&examples::h4()),
        minimal_wild(),
    ];
    for _ in 0..4000 {
        fixed.push(random_h_diagram(&mut rng));
    }
    for d in fixed {
        if !is_delta_edge(&d, 0, 1).delta {
            continue;
        }
        let c = match edge_context(&d, 0, 1) {
            Ok(c) => c,
            Err(e) => panic!("{e} on {:?}", d.to_matrix()),
        };
        let bad = structure_violations(&d, &c);
        assert!(bad.is_empty(), "{bad:?} on {:?}", d.to_matrix());
        // the partition of S around a Delta-edge
        assert_eq!(c.j | c.jfin | c.jinf, d.active());
        assert_eq!(c.j & (c.jfin | c.jinf), 0);
        assert_eq!(c.jfin & c.jinf, 0);
        for &t in c.u_of.keys() {
            if c.is_tame(t) {
                assert!(size(c.u_of[&t]) <= 1);
            }
        }
        if c.t3 != 0 {
            assert_eq!(c.t3 & c.tame, c.t3);
        }
        contexts += 1;
        wild += usize::from(c.degree > 0);
        with_u += usize::from(c.u != 0);
    }
    assert!(contexts > 100, "{contexts}");
    assert!(with_u > 10, "{with_u}");
    assert!(wild > 0, "{wild}");
}

#[test]
fn degree_is_monotone() {
    let mut rng = StdRng::seed_from_u64(5);
    let mut checked = 0;
    for _ in 0..2000 {
        let d = random_h_diagram(&mut rng);
        if !is_delta_edge(&d, 0, 1).delta {
            continue;
        }
        let full = degree(&d, 0, 1);
        let keep: VSet = 0b11 | (rng.gen::<u64>() & d.active());
        let sub = d.restrict(keep);
        assert!(degree(&sub, 0, 1) <= full);
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn templates_load() {
    let t = templates();
    assert_eq!(t.paths.len(), 2);
    assert!(t.vertices.iter().any(|v| v.name == "tameness"));
}
