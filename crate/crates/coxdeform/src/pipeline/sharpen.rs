use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coxcore::{
    build_system, coxeter_matrix_of, reflection_from_conjugate, shortest_conjugate, Word,
};
use crate::deform::{
    angle_deformation, sharpening_omega, theta_deformation, verify_deformation, Deformation,
    Realization, VerificationReport,
};
use crate::diagrams::{
    find_h3_subset, is_delta_edge, is_h3_vertex, is_theta_edge, set_of, Diagram,
};
use crate::roots::is_sharp_angled_set;

use super::instance::{with_words, ProblemInstance};
use super::trace::{EdgeJson, StepJson, TraceFile};
use super::PipelineError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Theta,
    Mainthm,
}

/// One rewriting step before serialization.
#[derive(Clone, Debug)]
pub struct Step {
    pub edge: (usize, usize),
    pub route: Route,
    pub rationale: String,
    pub deformation: Deformation,
    pub verification: VerificationReport,
    pub after: ProblemInstance,
}

/// `Gamma(S)` computed from the reflections of `S`.
pub fn current_diagram(inst: &ProblemInstance) -> Result<Diagram, PipelineError> {
    let m = coxeter_matrix_of(&inst.refl, inst.labels(), &inst.sys, inst.caps.order_cap)?;
    Ok(Diagram::from_matrix(&m))
}

/// Edges of `Gamma(S)` that are not sharp-angled, ordered by the names of
/// their endpoints.
pub fn non_sharp_edges(inst: &ProblemInstance) -> Result<Vec<(usize, usize)>, PipelineError> {
    let rep = is_sharp_angled_set(&inst.refl, &inst.sys, inst.caps.order_cap)?;
    let labels = inst.labels();
    let mut edges = rep.offending;
    edges.sort_by(|a, b| {
        let key = |e: &(usize, usize)| {
            let (x, y) = (&labels[e.0], &labels[e.1]);
            if x <= y {
                (x.clone(), y.clone())
            } else {
                (y.clone(), x.clone())
            }
        };
        key(a).cmp(&key(b))
    });
    Ok(edges)
}

/// `delta(S)` written in `R`.
fn apply(inst: &ProblemInstance, def: &Deformation) -> Result<ProblemInstance, PipelineError> {
    let to_r = |w: &Word| {
        w.letters()
            .iter()
            .fold(Word::empty(), |acc, &x| acc.concat(&inst.s_words[x]))
    };
    let words = (0..inst.s_words.len())
        .map(|x| {
            let c = to_r(&def.delta[&x]);
            let (w, base) = c
                .concat(&inst.s_words[x])
                .concat(&c.inverse())
                .split_conjugate()
                .expect("conjugates of palindromes are palindromes");
            let rec = reflection_from_conjugate(&w, base, &inst.sys);
            let (w, base) = shortest_conjugate(&rec.root.coords, &inst.sys);
            w.conjugate_of(base)
        })
        .collect();
    with_words(inst.matrix.clone(), inst.sys.clone(), words, inst.caps)
}

fn step(inst: &ProblemInstance, theta_only: bool) -> Result<Option<Step>, PipelineError> {
    let edges = non_sharp_edges(inst)?;
    let Some(&(r, s)) = edges.first() else {
        return Ok(None);
    };
    let d = current_diagram(inst)?;
    let real = Realization::from_reflections(&inst.sys, &inst.refl);
    let cap = inst.caps.order_cap;
    let label = d.label(r, s);
    let in_h3 = d.vertices().any(|t| is_h3_vertex(&d, r, s, t));
    let edge_name = format!("{{{}, {}}}", d.name(r), d.name(s));
    let (def, route, rationale) = if theta_only || !in_h3 {
        if !is_theta_edge(&d, r, s) {
            return Err(PipelineError::InputInconsistent(format!(
                "{edge_name} is not sharp-angled and lies in no subset of type H3, but is not a Theta-edge"
            )));
        }
        let omega = sharpening_omega(r, s, &real, cap)?;
        let why = if label.is(5) {
            format!("o = 5 and no subset of type H3 contains {edge_name}: Theta-edge deformation with omega = srs")
        } else {
            format!("o = {label}: no irreducible 2-spherical superset exists, so the edge is a Theta-edge; omega from the dihedral search")
        };
        (theta_deformation(&d, r, s, &omega)?, Route::Theta, why)
    } else {
        if !label.is(5) {
            return Err(PipelineError::InputInconsistent(format!(
                "{edge_name} lies in a subset of type H3 but has label {label}"
            )));
        }
        let rep = is_delta_edge(&d, r, s);
        if !rep.delta {
            let what = rep
                .violation
                .map(|v| format!("{} on {:?}", v.pattern, d.set_names(set_of(&v.vertices))))
                .unwrap_or_default();
            return Err(PipelineError::InputInconsistent(format!(
                "{edge_name} is not a Delta-edge ({what}), so S cannot be a Coxeter generating set"
            )));
        }
        let abs = build_system(&d.to_matrix())?;
        let def = angle_deformation(&d, r, s, &abs)?;
        let why = format!("{edge_name} lies in a subset of type H3 and has label 5: tame deformation sending it to {{rsr, s}}");
        (def, Route::Mainthm, why)
    };
    let verification = verify_deformation(&def, &d, &real, cap, inst.caps.group_cap);
    if !verification.ok() {
        let msg: Vec<String> = verification
            .failures()
            .iter()
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        return Err(PipelineError::InputInconsistent(format!(
            "the deformation of {edge_name} fails verification: {}",
            msg.join("; ")
        )));
    }
    let after = apply(inst, &def)?;
    let remaining = non_sharp_edges(&after)?.len();
    if remaining + 1 != edges.len() {
        return Err(PipelineError::InputInconsistent(format!(
            "non-sharp edge count went from {} to {remaining}",
            edges.len()
        )));
    }
    Ok(Some(Step {
        edge: (r, s),
        route,
        rationale,
        deformation: def,
        verification,
        after,
    }))
}

fn run(inst: &ProblemInstance, theta_only: bool) -> Result<TraceFile, PipelineError> {
    let mut cur = inst.clone();
    let mut steps = Vec::new();
    let budget = non_sharp_edges(inst)?.len();
    while let Some(st) = step(&cur, theta_only)? {
        steps.push(step_json(&cur, &st, budget - steps.len()));
        cur = st.after;
        if steps.len() > budget {
            return Err(PipelineError::InputInconsistent("no termination".into()));
        }
    }
    let sharp = is_sharp_angled_set(&cur.refl, &cur.sys, cur.caps.order_cap)?.sharp;
    let input = inst.to_input();
    Ok(TraceFile {
        generators: input.generators,
        matrix: input.matrix,
        initial_s: input.s,
        options: inst.caps,
        steps,
        final_s: cur
            .s_words
            .iter()
            .map(|w| w.to_names(cur.names()))
            .collect(),
        sharp,
    })
}

fn step_json(inst: &ProblemInstance, st: &Step, before: usize) -> StepJson {
    let labels = inst.labels();
    let names = |w: &Word| w.to_names(&labels);
    let def = &st.deformation;
    let delta: BTreeMap<String, Vec<String>> = def
        .delta
        .iter()
        .map(|(&x, w)| (labels[x].clone(), names(&w.conjugate_of(x).reduced())))
        .collect();
    let edge_map = def
        .edge_map
        .iter()
        .map(|(&(a, b), e)| EdgeJson {
            from: [labels[a].clone(), labels[b].clone()],
            to: [labels[e.to.0].clone(), labels[e.to.1].clone()],
            conjugator: e.conjugator.as_ref().map(names),
        })
        .collect();
    StepJson {
        edge: [labels[st.edge.0].clone(), labels[st.edge.1].clone()],
        route: st.route,
        rationale: st.rationale.clone(),
        omega: names(&def.omega),
        delta,
        edge_map,
        tame_witnesses: def
            .tame_witnesses
            .iter()
            .map(|(&t, w)| (labels[t].clone(), names(w)))
            .collect(),
        construction: def.trace.clone(),
        post_s: st
            .after
            .s_words
            .iter()
            .map(|w| w.to_names(inst.names()))
            .collect(),
        non_sharp_before: before,
        non_sharp_after: before - 1,
        verification: st.verification.clone(),
    }
}

/// Sharpen with Theta-edge deformations only. Requires `Gamma(S)` free of
/// subsets of type H3.
pub fn sharpen_no_h3(inst: &ProblemInstance) -> Result<TraceFile, PipelineError> {
    let d = current_diagram(inst)?;
    if let Some(k) = find_h3_subset(&d) {
        return Err(PipelineError::HasH3Subset(
            k.iter().map(|&v| d.name(v).to_string()).collect(),
        ));
    }
    run(inst, true)
}

pub fn sharpen(inst: &ProblemInstance) -> Result<TraceFile, PipelineError> {
    run(inst, false)
}
