use serde::Serialize;

use crate::coxcore::Label;
use crate::diagrams::{
    edge_context, find_h3_subset, is_delta_edge, is_h3_vertex, is_theta_edge, members, set_of,
    Diagram, VSet,
};
use crate::roots::is_sharp_angled_pair;

use super::instance::ProblemInstance;
use super::sharpen::current_diagram;
use super::PipelineError;

#[derive(Clone, Debug, Serialize)]
pub struct ContextSummary {
    pub t: Vec<String>,
    pub u: Vec<String>,
    pub tame: Vec<String>,
    pub wild: Vec<String>,
    pub degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub pattern: String,
    pub vertices: Vec<String>,
    pub roles: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeAnalysis {
    pub edge: [String; 2],
    pub label: Label,
    pub sharp: bool,
    pub theta: bool,
    pub in_h3: bool,
    pub delta: bool,
    pub violation: Option<Violation>,
    pub context: Option<ContextSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    #[serde(rename = "S")]
    pub s: Vec<String>,
    pub diagram: Vec<Vec<Label>>,
    pub h3_subset: Option<Vec<String>>,
    pub non_sharp: usize,
    pub edges: Vec<EdgeAnalysis>,
}

fn names(d: &Diagram, set: VSet) -> Vec<String> {
    members(set).map(|v| d.name(v).to_string()).collect()
}

/// Per-edge classification of `Gamma(S)`.
pub fn analyze(inst: &ProblemInstance) -> Result<AnalysisReport, PipelineError> {
    let d = current_diagram(inst)?;
    let mut edges = Vec::new();
    for (a, b) in d.edges() {
        let sharp =
            is_sharp_angled_pair(&inst.refl[a], &inst.refl[b], &inst.sys, inst.caps.order_cap)?
                .sharp;
        let rep = is_delta_edge(&d, a, b);
        let context = if d.label(a, b).is(5) {
            edge_context(&d, a, b).ok().map(|c| ContextSummary {
                t: names(&d, c.t),
                u: names(&d, c.u),
                tame: names(&d, c.tame),
                wild: names(&d, c.wild()),
                degree: c.degree,
            })
        } else {
            None
        };
        edges.push(EdgeAnalysis {
            edge: [d.name(a).to_string(), d.name(b).to_string()],
            label: d.label(a, b),
            sharp,
            theta: is_theta_edge(&d, a, b),
            in_h3: d.vertices().any(|t| is_h3_vertex(&d, a, b, t)),
            delta: rep.delta,
            violation: rep.violation.map(|v| Violation {
                pattern: v.pattern,
                vertices: names(&d, set_of(&v.vertices)),
                roles: v
                    .roles
                    .into_iter()
                    .map(|(k, x)| (k, d.name(x).to_string()))
                    .collect(),
            }),
            context,
        });
    }
    Ok(AnalysisReport {
        s: inst.labels(),
        diagram: d.to_matrix().rows().to_vec(),
        h3_subset: find_h3_subset(&d).map(|k| k.iter().map(|&v| d.name(v).to_string()).collect()),
        non_sharp: edges.iter().filter(|e| !e.sharp).count(),
        edges,
    })
}
