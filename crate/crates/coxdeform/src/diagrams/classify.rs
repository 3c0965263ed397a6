use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::coxcore::Label;

use super::graph::{bit, is_flexible, members, set_of, Diagram, VSet};
use super::spherical::is_spherical;

/// One admissible label in a template: a number, `"inf"` or `"finite"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum LabelSpec {
    Exact(u64),
    Named(String),
}

impl LabelSpec {
    fn admits(&self, l: Label) -> bool {
        match self {
            LabelSpec::Exact(m) => l == Label::Finite(*m),
            LabelSpec::Named(n) => match n.as_str() {
                "inf" => l == Label::Infinite,
                "finite" => l.is_finite(),
                other => panic!("unknown label spec {other:?} in template table"),
            },
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleSpec {
    pub roles: Vec<String>,
    pub allowed: Vec<Vec<u64>>,
}

/// Constraints on one template vertex relative to the core roles.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSpec {
    #[serde(default)]
    pub tuple: Option<TupleSpec>,
    #[serde(default)]
    pub labels: BTreeMap<String, Vec<LabelSpec>>,
    #[serde(default)]
    pub infinite_to_one_of: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathTemplate {
    pub name: String,
    pub core: String,
    pub min_vertices: usize,
    pub start: VertexSpec,
    pub interior: VertexSpec,
    pub end: VertexSpec,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexTemplate {
    pub name: String,
    pub core: String,
    pub vertex: VertexSpec,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TemplateTable {
    pub paths: Vec<PathTemplate>,
    pub vertices: Vec<VertexTemplate>,
}

pub fn templates() -> &'static TemplateTable {
    static TABLE: OnceLock<TemplateTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        serde_json::from_str(include_str!("templates.json")).expect("template table parses")
    })
}

type Roles = Vec<(String, usize)>;

fn role(roles: &Roles, name: &str) -> usize {
    roles
        .iter()
        .find(|(n, _)| n == name)
        .unwrap_or_else(|| panic!("template uses unknown role {name:?}"))
        .1
}

impl VertexSpec {
    fn admits(&self, d: &Diagram, x: usize, roles: &Roles) -> bool {
        if let Some(t) = &self.tuple {
            let got: Vec<Label> = t.roles.iter().map(|n| d.label(x, role(roles, n))).collect();
            let ok = t
                .allowed
                .iter()
                .any(|row| row.iter().zip(&got).all(|(&m, &l)| l == Label::Finite(m)));
            if !ok {
                return false;
            }
        }
        for (n, specs) in &self.labels {
            let l = d.label(x, role(roles, n));
            if !specs.iter().any(|s| s.admits(l)) {
                return false;
            }
        }
        if !self.infinite_to_one_of.is_empty()
            && !self
                .infinite_to_one_of
                .iter()
                .any(|n| d.infinite(x, role(roles, n)))
        {
            return false;
        }
        true
    }
}

/// `{r, s, t}` is of type H3 with `o(rs) = 5`.
pub fn is_h3_vertex(d: &Diagram, r: usize, s: usize, t: usize) -> bool {
    if t == r || t == s || !d.label(r, s).is(5) {
        return false;
    }
    let (a, b) = (d.label(r, t), d.label(s, t));
    (a.is(2) && b.is(3)) || (a.is(3) && b.is(2))
}

/// `{r, s, t, u}` is of type H4, given that `{r, s, t}` is of type H3.
pub fn is_h4_vertex(d: &Diagram, r: usize, s: usize, t: usize, u: usize) -> bool {
    u != r && u != s && u != t && d.label(u, r).is(2) && d.label(u, s).is(2) && d.label(u, t).is(3)
}

/// All role assignments of a core type around `J = {r, s}`.
fn cores(d: &Diagram, r: usize, s: usize, core: &str) -> Vec<Roles> {
    let mut out = Vec::new();
    for t in d.vertices().filter(|&t| is_h3_vertex(d, r, s, t)) {
        let base: Roles = vec![("r".into(), r), ("s".into(), s), ("t".into(), t)];
        match core {
            "H3" => out.push(base),
            "H4" => {
                for u in d.vertices().filter(|&u| is_h4_vertex(d, r, s, t, u)) {
                    let mut roles = base.clone();
                    roles.push(("u".into(), u));
                    out.push(roles);
                }
            }
            other => panic!("unknown core type {other:?} in template table"),
        }
    }
    out
}

/// A matched template: the vertex set `K` and the role assignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TemplateMatch {
    pub pattern: String,
    pub vertices: Vec<usize>,
    pub roles: Vec<(String, usize)>,
}

/// Search for an induced path attached to a core as described by `tpl`.
pub fn match_path_template(
    d: &Diagram,
    r: usize,
    s: usize,
    tpl: &PathTemplate,
) -> Option<TemplateMatch> {
    for roles in cores(d, r, s, &tpl.core) {
        let core = set_of(&roles.iter().map(|(_, v)| *v).collect::<Vec<_>>());
        for p0 in d.vertices() {
            if core & bit(p0) != 0 || !tpl.start.admits(d, p0, &roles) {
                continue;
            }
            let mut path = vec![p0];
            if extend_path(d, tpl, &roles, core, &mut path) {
                let mut roles = roles.clone();
                for (i, &p) in path.iter().enumerate() {
                    roles.push((format!("p{i}"), p));
                }
                let mut vertices: Vec<usize> = members(core | set_of(&path)).collect();
                vertices.sort_unstable();
                return Some(TemplateMatch {
                    pattern: tpl.name.clone(),
                    vertices,
                    roles,
                });
            }
        }
    }
    None
}

fn extend_path(
    d: &Diagram,
    tpl: &PathTemplate,
    roles: &Roles,
    core: VSet,
    path: &mut Vec<usize>,
) -> bool {
    let last = *path.last().unwrap();
    let used = set_of(path);
    let earlier = set_of(&path[..path.len() - 1]);
    for x in d.vertices() {
        if (core | used) & bit(x) != 0 || !d.is_edge(last, x) {
            continue;
        }
        if members(earlier).any(|p| d.finite(p, x)) {
            continue;
        }
        if path.len() + 1 >= tpl.min_vertices && tpl.end.admits(d, x, roles) {
            path.push(x);
            return true;
        }
        if tpl.interior.admits(d, x, roles) {
            path.push(x);
            if extend_path(d, tpl, roles, core, path) {
                return true;
            }
            path.pop();
        }
    }
    false
}

/// Search for a single extra vertex attached to a core.
pub fn match_vertex_template(
    d: &Diagram,
    r: usize,
    s: usize,
    tpl: &VertexTemplate,
    t: Option<usize>,
) -> Option<TemplateMatch> {
    for roles in cores(d, r, s, &tpl.core) {
        if let Some(t) = t {
            if role(&roles, "t") != t {
                continue;
            }
        }
        let core = set_of(&roles.iter().map(|(_, v)| *v).collect::<Vec<_>>());
        for y in d.vertices() {
            if core & bit(y) != 0 || !tpl.vertex.admits(d, y, &roles) {
                continue;
            }
            let mut roles = roles.clone();
            roles.push(("y".into(), y));
            return Some(TemplateMatch {
                pattern: tpl.name.clone(),
                vertices: members(core | bit(y)).collect(),
                roles,
            });
        }
    }
    None
}

/// Irreducible: the Coxeter diagram on `k` (labels at least 3) is connected.
pub fn is_irreducible(d: &Diagram, k: VSet) -> bool {
    if k == 0 {
        return false;
    }
    let start = k.trailing_zeros() as usize;
    let mut comp = bit(start);
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        for v in members(frontier) {
            for x in members(k & !comp) {
                if d.is_diagram_edge(v, x) {
                    next |= bit(x);
                }
            }
        }
        comp |= next;
        frontier = next;
    }
    comp == k
}

pub fn is_two_spherical(d: &Diagram, k: VSet) -> bool {
    let vs: Vec<usize> = members(k).collect();
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| d.finite(a, b)))
}

/// A non-spherical, 2-spherical, irreducible `K` containing `J`, grown one
/// vertex at a time along Coxeter-diagram edges.
pub fn find_de1(d: &Diagram, j: VSet) -> Option<VSet> {
    let mut seen = HashSet::new();
    let mut stack = vec![j];
    seen.insert(j);
    while let Some(k) = stack.pop() {
        for x in d.vertices() {
            if k & bit(x) != 0 {
                continue;
            }
            if !members(k).all(|y| d.finite(x, y)) || !members(k).any(|y| d.is_diagram_edge(x, y)) {
                continue;
            }
            let k2 = k | bit(x);
            if !seen.insert(k2) {
                continue;
            }
            if is_irreducible(d, k2) && !is_spherical(d, k2) {
                return Some(k2);
            }
            stack.push(k2);
        }
    }
    None
}

/// Theta-edge test: flexible, and no `t` outside `J` with finite labels to
/// both ends of `J` and one of them at least 3. Such a `t` gives the
/// irreducible 2-spherical superset `{r, s, t}`; conversely any proper
/// irreducible 2-spherical superset contains a vertex adjacent to `J` in the
/// Coxeter diagram, which is such a `t`.
pub fn is_theta_edge(d: &Diagram, r: usize, s: usize) -> bool {
    if !is_flexible(d, r, s).flexible {
        return false;
    }
    !d.vertices().any(|t| {
        t != r
            && t != s
            && d.finite(t, r)
            && d.finite(t, s)
            && (d.is_diagram_edge(t, r) || d.is_diagram_edge(t, s))
    })
}

/// Which pattern excludes `J` from being a Delta-edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaViolation {
    pub pattern: String,
    pub vertices: Vec<usize>,
    pub roles: Vec<(String, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub delta: bool,
    pub violation: Option<DeltaViolation>,
}

pub fn is_delta_edge(d: &Diagram, r: usize, s: usize) -> DeltaReport {
    let j = bit(r) | bit(s);
    let found = |pattern: &str, vertices: Vec<usize>, roles: Vec<(String, usize)>| DeltaReport {
        delta: false,
        violation: Some(DeltaViolation {
            pattern: pattern.into(),
            vertices,
            roles,
        }),
    };
    if let Some(k) = find_de1(d, j) {
        return found("DE1", members(k).collect(), vec![]);
    }
    if let Some(c) = is_flexible(d, r, s).witness {
        let mut vs = c.clone();
        vs.sort_unstable();
        let roles = c
            .iter()
            .enumerate()
            .map(|(i, &v)| (format!("c{i}"), v))
            .collect();
        return found("DE2", vs, roles);
    }
    for tpl in &templates().paths {
        if let Some(m) = match_path_template(d, r, s, tpl) {
            return found(&m.pattern, m.vertices, m.roles);
        }
    }
    DeltaReport {
        delta: true,
        violation: None,
    }
}

/// `t` is tame in the active set: no tameness obstruction through `t`.
pub fn is_tame(d: &Diagram, r: usize, s: usize, t: usize) -> bool {
    templates()
        .vertices
        .iter()
        .filter(|tpl| tpl.name == "tameness")
        .all(|tpl| match_vertex_template(d, r, s, tpl, Some(t)).is_none())
}

/// The H3 vertices `T` of `J`.
pub fn h3_vertices(d: &Diagram, r: usize, s: usize) -> VSet {
    d.vertices()
        .filter(|&t| is_h3_vertex(d, r, s, t))
        .fold(0, |acc, t| acc | bit(t))
}

/// Some H3 subset of the diagram, anywhere.
pub fn find_h3_subset(d: &Diagram) -> Option<[usize; 3]> {
    let vs: Vec<usize> = d.vertices().collect();
    for &a in &vs {
        for &b in &vs {
            if a < b && d.label(a, b).is(5) {
                if let Some(t) = vs.iter().copied().find(|&t| is_h3_vertex(d, a, b, t)) {
                    return Some([a, b, t]);
                }
            }
        }
    }
    None
}
