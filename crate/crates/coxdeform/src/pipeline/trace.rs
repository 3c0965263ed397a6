use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coxcore::{eval, Label, Word};
use crate::deform::{verify_deformation, Deformation, Realization, VerificationReport};
use crate::roots::is_sharp_angled_set;

use super::instance::{from_input, with_words, Caps, InputFile, InputOptions, ProblemInstance};
use super::sharpen::{current_diagram, non_sharp_edges, Route};
use super::PipelineError;

/// An edge of the current `S` with its image; elements are named by their
/// words in `R`, conjugators are words in the current `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: [String; 2],
    pub to: [String; 2],
    pub conjugator: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StepJson {
    pub edge: [String; 2],
    pub route: Route,
    pub rationale: String,
    pub omega: Vec<String>,
    pub delta: BTreeMap<String, Vec<String>>,
    pub edge_map: Vec<EdgeJson>,
    pub tame_witnesses: BTreeMap<String, Vec<String>>,
    pub construction: Vec<String>,
    #[serde(rename = "post_S")]
    pub post_s: Vec<Vec<String>>,
    pub non_sharp_before: usize,
    pub non_sharp_after: usize,
    pub verification: VerificationReport,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TraceFile {
    pub generators: Vec<String>,
    pub matrix: Vec<Vec<Label>>,
    #[serde(rename = "initial_S")]
    pub initial_s: Vec<Vec<String>>,
    pub options: Caps,
    pub steps: Vec<StepJson>,
    #[serde(rename = "final_S")]
    pub final_s: Vec<Vec<String>>,
    pub sharp: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReplayReport {
    pub steps: usize,
    pub sharp: bool,
    pub counts: Vec<usize>,
}

fn bad(msg: String) -> PipelineError {
    PipelineError::Replay(msg)
}

fn instance_of(trace: &TraceFile, s: &[Vec<String>]) -> Result<ProblemInstance, PipelineError> {
    from_input(&InputFile {
        generators: trace.generators.clone(),
        matrix: trace.matrix.clone(),
        s: s.to_vec(),
        options: Some(InputOptions {
            order_cap: Some(trace.options.order_cap),
            group_cap: Some(trace.options.group_cap),
        }),
    })
}

fn same_elements(a: &ProblemInstance, b: &ProblemInstance) -> bool {
    a.s_words.len() == b.s_words.len()
        && a.s_words
            .iter()
            .zip(&b.s_words)
            .all(|(x, y)| eval(x, &a.sys).matrix == eval(y, &b.sys).matrix)
}

fn rebuild(inst: &ProblemInstance, step: &StepJson) -> Result<Deformation, PipelineError> {
    let labels = inst.labels();
    let index: BTreeMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let word = |ls: &[String]| -> Result<Word, PipelineError> {
        ls.iter()
            .map(|l| {
                index
                    .get(l.as_str())
                    .copied()
                    .ok_or_else(|| bad(format!("unknown element {l}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    };
    let pair = |p: &[String; 2]| -> Result<(usize, usize), PipelineError> {
        Ok((word(&p[..1])?.0[0], word(&p[1..])?.0[0]))
    };
    let (r, s) = pair(&step.edge)?;
    let n = labels.len();
    let domain = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut def = Deformation::new(r, s, word(&step.omega)?, domain);
    def.edge_map.clear();
    for (x, img) in &step.delta {
        let xi = *index
            .get(x.as_str())
            .ok_or_else(|| bad(format!("unknown element {x}")))?;
        let (w, y) = word(img)?
            .split_conjugate()
            .ok_or_else(|| bad(format!("delta({x}) is not a conjugate of a generator")))?;
        if y != xi {
            return Err(bad(format!("delta({x}) is not a conjugate of {x}")));
        }
        def.delta.insert(xi, w);
    }
    for e in &step.edge_map {
        let (a, b) = pair(&e.from)?;
        let to = pair(&e.to)?;
        match &e.conjugator {
            Some(c) => def.set_edge(a, b, to, word(c)?),
            None => {
                def.edge_map.insert(
                    crate::deform::edge_key(a, b),
                    crate::deform::EdgeImage {
                        to: crate::deform::edge_key(to.0, to.1),
                        conjugator: None,
                    },
                );
            }
        }
    }
    for (t, w) in &step.tame_witnesses {
        let ti = word(std::slice::from_ref(t))?.0[0];
        def.tame_witnesses.insert(ti, word(w)?);
    }
    Ok(def)
}

/// Re-check a trace from scratch: every step is re-verified, `S_i` is
/// recomputed and compared as matrices, and the non-sharp edge counts are
/// recounted.
pub fn replay(trace: &TraceFile) -> Result<ReplayReport, PipelineError> {
    let mut cur = instance_of(trace, &trace.initial_s)?;
    let mut counts = vec![non_sharp_edges(&cur)?.len()];
    for (i, step) in trace.steps.iter().enumerate() {
        let before = *counts.last().unwrap();
        if step.non_sharp_before != before {
            return Err(bad(format!(
                "step {i}: recorded {} non-sharp edges, found {before}",
                step.non_sharp_before
            )));
        }
        let def = rebuild(&cur, step)?;
        let d = current_diagram(&cur)?;
        let real = Realization::from_reflections(&cur.sys, &cur.refl);
        let rep = verify_deformation(&def, &d, &real, cur.caps.order_cap, cur.caps.group_cap);
        if !rep.ok() {
            let f: Vec<String> = rep
                .failures()
                .iter()
                .map(|c| format!("{}: {}", c.name, c.detail))
                .collect();
            return Err(bad(format!("step {i}: {}", f.join("; "))));
        }
        let words = (0..cur.s_words.len())
            .map(|x| {
                let c = def.delta[&x]
                    .letters()
                    .iter()
                    .fold(Word::empty(), |acc, &y| acc.concat(&cur.s_words[y]));
                c.concat(&cur.s_words[x]).concat(&c.inverse())
            })
            .collect();
        let next = with_words(cur.matrix.clone(), cur.sys.clone(), words, cur.caps)?;
        let recorded = instance_of(trace, &step.post_s)?;
        if !same_elements(&next, &recorded) {
            return Err(bad(format!("step {i}: recorded S differs from delta(S)")));
        }
        let after = non_sharp_edges(&next)?.len();
        if after + 1 != before || step.non_sharp_after != after {
            return Err(bad(format!(
                "step {i}: non-sharp count {before} -> {after}"
            )));
        }
        counts.push(after);
        cur = recorded;
    }
    let fin = instance_of(trace, &trace.final_s)?;
    if !same_elements(&cur, &fin) {
        return Err(bad("final S differs from the last step".into()));
    }
    let sharp = is_sharp_angled_set(&cur.refl, &cur.sys, cur.caps.order_cap)?.sharp;
    if sharp != trace.sharp {
        return Err(bad("recorded sharpness is wrong".into()));
    }
    Ok(ReplayReport {
        steps: trace.steps.len(),
        sharp,
        counts,
    })
}
