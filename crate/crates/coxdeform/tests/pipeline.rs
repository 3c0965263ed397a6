use coxdeform::coxcore::{build_system, CoxeterMatrix, Label, Word};
use coxdeform::deform::{angle_deformation, theta_deformation, Deformation};
use coxdeform::diagrams::Diagram;
use coxdeform::pipeline::*;

const INF: Label = Label::Infinite;

fn f(m: u64) -> Label {
    Label::Finite(m)
}

fn matrix(names: &str, edges: &[(&str, &str, Label)], default: Label) -> CoxeterMatrix {
    let names: Vec<&str> = names.split_whitespace().collect();
    let idx = |n: &str| names.iter().position(|&x| x == n).unwrap();
    let e: Vec<_> = edges.iter().map(|&(a, b, l)| (idx(a), idx(b), l)).collect();
    CoxeterMatrix::from_edges(&names, &e, default)
}

/// `delta(R)` as an instance over `(W, R)`.
fn deformed(m: &CoxeterMatrix, def: &Deformation) -> ProblemInstance {
    let sys = build_system(m).unwrap();
    let words = (0..m.rank())
        .map(|x| def.delta[&x].conjugate_of(x).reduced())
        .collect();
    with_words(m.clone(), sys, words, Caps::default()).unwrap()
}

fn simple(m: &CoxeterMatrix) -> ProblemInstance {
    let sys = build_system(m).unwrap();
    with_words(
        m.clone(),
        sys,
        (0..m.rank()).map(Word::letter).collect(),
        Caps::default(),
    )
    .unwrap()
}

fn h3_free() -> CoxeterMatrix {
    matrix(
        "r s t x",
        &[
            ("r", "s", f(5)),
            ("s", "t", f(3)),
            ("s", "x", f(3)),
            ("r", "x", INF),
        ],
        f(2),
    )
}

fn check_trace(trace: &TraceFile, steps: usize) {
    assert_eq!(trace.steps.len(), steps);
    assert!(trace.sharp);
    for (i, st) in trace.steps.iter().enumerate() {
        assert_eq!(st.non_sharp_before, steps - i);
        assert_eq!(st.non_sharp_after + 1, st.non_sharp_before);
        assert!(st.verification.ok(), "{:?}", st.verification);
    }
    let rep = replay(trace).unwrap();
    assert_eq!(rep.steps, steps);
    assert!(rep.sharp);
    let json = serde_json::to_string(trace).unwrap();
    let back: TraceFile = serde_json::from_str(&json).unwrap();
    assert_eq!(replay(&back).unwrap().counts, rep.counts);
}

#[test]
fn load_accepts_the_dihedral_example() {
    let text =
        r#"{"generators": ["a", "b"], "matrix": [[1, 5], [5, 1]], "S": [["a"], ["b", "a", "b"]]}"#;
    let inst = parse(text).unwrap();
    assert_eq!(inst.labels(), vec!["a", "bab"]);
    assert_eq!(non_sharp_edges(&inst).unwrap(), vec![(0, 1)]);
}

#[test]
fn load_rejects_bad_input() {
    let id = r#"{"generators": ["a", "b"], "matrix": [[1, 5], [5, 1]], "S": [["a", "a"]]}"#;
    assert!(matches!(
        parse(id),
        Err(PipelineError::NotAReflection { index: 0, .. })
    ));
    let asym = r#"{"generators": ["a", "b"], "matrix": [[1, 5], [4, 1]], "S": []}"#;
    assert!(matches!(parse(asym), Err(PipelineError::Parse(_))));
    let unknown = r#"{"generators": ["a"], "matrix": [[1]], "S": [], "extra": 1}"#;
    assert!(matches!(parse(unknown), Err(PipelineError::Parse(_))));
    let not_conj = r#"{"generators": ["a", "b"], "matrix": [[1, 5], [5, 1]], "S": [["a", "b", "a", "b", "a", "b"]]}"#;
    assert!(matches!(
        parse(not_conj),
        Err(PipelineError::NotAReflection { .. })
    ));
    let opts =
        r#"{"generators": ["a"], "matrix": [[1]], "S": [], "options": {"order_cap": 5, "cap": 1}}"#;
    assert!(matches!(parse(opts), Err(PipelineError::Parse(_))));
}

#[test]
fn dihedral_sharpens_in_one_step() {
    let inst = parse(
        r#"{"generators": ["a", "b"], "matrix": [[1, 5], [5, 1]], "S": [["a"], ["b", "a", "b"]]}"#,
    )
    .unwrap();
    let trace = sharpen_no_h3(&inst).unwrap();
    check_trace(&trace, 1);
    assert_eq!(trace.steps[0].route, Route::Theta);
    let again = sharpen(&inst).unwrap();
    assert_eq!(
        serde_json::to_value(&again).unwrap(),
        serde_json::to_value(&trace).unwrap()
    );
}

#[test]
fn sharp_input_takes_no_steps() {
    let trace = sharpen(&simple(&h3_free())).unwrap();
    check_trace(&trace, 0);
}

#[test]
fn theta_example_with_infinite_vertex() {
    let m = matrix("r s x", &[("r", "s", f(5))], INF);
    let d = Diagram::from_matrix(&m);
    let def = theta_deformation(&d, 0, 1, &Word(vec![1, 0, 1])).unwrap();
    let inst = deformed(&m, &def);
    assert_eq!(non_sharp_edges(&inst).unwrap().len(), 1);
    check_trace(&sharpen_no_h3(&inst).unwrap(), 1);
}

#[test]
fn higher_dihedral_orders_take_the_theta_route() {
    for (m, b) in [
        (7u64, vec![1, 0, 1]),
        (8, vec![1, 0, 1, 0, 1]),
        (9, vec![1, 0, 1]),
    ] {
        let cm = matrix("a b", &[("a", "b", f(m))], f(2));
        let sys = build_system(&cm).unwrap();
        let inst = with_words(cm, sys, vec![Word(vec![0]), Word(b)], Caps::default()).unwrap();
        let trace = sharpen(&inst).unwrap();
        check_trace(&trace, 1);
        assert!(trace.steps[0].rationale.contains(&format!("o = {m}")));
    }
}

#[test]
fn two_non_sharp_edges_take_two_steps() {
    let m = matrix("a b c d", &[("a", "b", f(5)), ("c", "d", f(5))], INF);
    let sys = build_system(&m).unwrap();
    let words = vec![
        Word(vec![0]),
        Word(vec![1, 0, 1]),
        Word(vec![2]),
        Word(vec![3, 2, 3]),
    ];
    let inst = with_words(m, sys, words, Caps::default()).unwrap();
    assert_eq!(non_sharp_edges(&inst).unwrap().len(), 2);
    check_trace(&sharpen(&inst).unwrap(), 2);
}

#[test]
fn h3_with_free_vertex_takes_the_main_route() {
    let m = h3_free();
    let d = Diagram::from_matrix(&m);
    let def = angle_deformation(&d, 0, 1, &build_system(&m).unwrap()).unwrap();
    let inst = deformed(&m, &def);
    assert_eq!(non_sharp_edges(&inst).unwrap().len(), 1);
    assert!(matches!(
        sharpen_no_h3(&inst),
        Err(PipelineError::HasH3Subset(_))
    ));
    let trace = sharpen(&inst).unwrap();
    check_trace(&trace, 1);
    assert_eq!(trace.steps[0].route, Route::Mainthm);
    assert!(trace.steps[0].verification.complete());
}

#[test]
fn wild_instance_sharpens() {
    let m = matrix(
        "r s t u y",
        &[
            ("r", "s", f(5)),
            ("s", "t", f(3)),
            ("t", "u", f(3)),
            ("u", "y", INF),
        ],
        f(2),
    );
    let d = Diagram::from_matrix(&m);
    let def = angle_deformation(&d, 0, 1, &build_system(&m).unwrap()).unwrap();
    let inst = deformed(&m, &def);
    let trace = sharpen(&inst).unwrap();
    check_trace(&trace, 1);
    assert!(trace.steps[0]
        .construction
        .iter()
        .any(|c| c.contains("wild")));
}

#[test]
fn tampered_trace_is_rejected() {
    let inst = parse(
        r#"{"generators": ["a", "b"], "matrix": [[1, 5], [5, 1]], "S": [["a"], ["b", "a", "b"]]}"#,
    )
    .unwrap();
    let mut trace = sharpen(&inst).unwrap();
    trace.steps[0].post_s[0] = vec!["a".into()];
    assert!(matches!(replay(&trace), Err(PipelineError::Replay(_))));
    let mut trace = sharpen(&inst).unwrap();
    trace.steps[0].omega = vec![];
    assert!(replay(&trace).is_err());
}

#[test]
fn analyze_reports_edges() {
    let rep = analyze(&simple(&matrix(
        "r s t",
        &[("r", "s", f(5)), ("s", "t", f(3))],
        f(2),
    )))
    .unwrap();
    let e = rep.edges.iter().find(|e| e.edge == ["r", "s"]).unwrap();
    assert!(e.delta && e.in_h3 && e.sharp);
    let c = e.context.as_ref().unwrap();
    assert_eq!((c.t.clone(), c.degree), (vec!["t".to_string()], 0));

    let cycle = matrix(
        "a b c d",
        &[
            ("a", "b", f(3)),
            ("b", "c", f(3)),
            ("c", "d", f(3)),
            ("d", "a", f(3)),
        ],
        INF,
    );
    let rep = analyze(&simple(&cycle)).unwrap();
    assert_eq!(rep.edges.len(), 4);
    for e in &rep.edges {
        assert!(!e.delta);
        assert_eq!(e.violation.as_ref().unwrap().pattern, "DE2");
    }

    let empty = parse(r#"{"generators": ["a"], "matrix": [[1]], "S": []}"#).unwrap();
    assert!(analyze(&empty).unwrap().edges.is_empty());
}

#[test]
fn oracle_matches_root_verdicts() {
    let inst = parse(
        r#"{"generators": ["a", "b"], "matrix": [[1, 5], [5, 1]], "S": [["a"], ["b", "a", "b"]]}"#,
    )
    .unwrap();
    let rep = oracle(&inst).unwrap();
    assert_eq!(rep.group_order, 10);
    assert_eq!(rep.reflections, 5);
    assert!(rep.agree);
    assert!(!rep.pairs[0].brute_sharp);

    let h3 = simple(&matrix(
        "r s t",
        &[("r", "s", f(5)), ("s", "t", f(3))],
        f(2),
    ));
    let rep = oracle(&h3).unwrap();
    assert_eq!((rep.group_order, rep.reflections), (120, 15));
    assert!(rep.agree);

    let inf = simple(&matrix("a b c", &[], INF));
    assert!(matches!(oracle(&inf), Err(PipelineError::CapExceeded(_))));
}

#[test]
fn exit_codes() {
    assert_eq!(PipelineError::Parse("x".into()).exit_code(), 2);
    assert_eq!(PipelineError::CapExceeded("x".into()).exit_code(), 3);
    assert_eq!(PipelineError::InputInconsistent("x".into()).exit_code(), 4);
}
