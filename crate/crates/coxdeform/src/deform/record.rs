use std::collections::BTreeMap;

use crate::coxcore::{CoxeterSystem, Word};
use crate::diagrams::{bit, members, Diagram, VSet};

use super::DeformError;

/// Image of an edge under `Delta`: `conjugator * from * conjugator^-1` equals
/// `{delta(to.0), delta(to.1)}`. The edge `J` itself carries no conjugator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeImage {
    pub to: (usize, usize),
    pub conjugator: Option<Word>,
}

/// An `(r, s, omega)`-deformation of the vertex set `domain`, with every
/// image stored as `delta(x) = w_x x w_x^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deformation {
    pub r: usize,
    pub s: usize,
    pub omega: Word,
    pub domain: VSet,
    pub delta: BTreeMap<usize, Word>,
    pub edge_map: BTreeMap<(usize, usize), EdgeImage>,
    pub tame_witnesses: BTreeMap<usize, Word>,
    pub trace: Vec<String>,
}

pub fn edge_key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Deformation {
    pub fn new(r: usize, s: usize, omega: Word, domain: VSet) -> Self {
        let mut edge_map = BTreeMap::new();
        edge_map.insert(
            edge_key(r, s),
            EdgeImage {
                to: edge_key(r, s),
                conjugator: None,
            },
        );
        Deformation {
            r,
            s,
            omega,
            domain,
            delta: BTreeMap::new(),
            edge_map,
            tame_witnesses: BTreeMap::new(),
            trace: Vec::new(),
        }
    }

    /// The identity map on the vertices of `d`.
    pub fn identity(d: &Diagram, r: usize, s: usize) -> Self {
        let mut out = Deformation::new(r, s, Word::empty(), d.active());
        for x in d.vertices() {
            out.delta.insert(x, Word::empty());
        }
        for (a, b) in d.edges() {
            if edge_key(a, b) != edge_key(r, s) {
                out.set_edge(a, b, (a, b), Word::empty());
            }
        }
        out
    }

    pub fn conjugator(&self, x: usize) -> &Word {
        &self.delta[&x]
    }

    /// `delta(x)` spelled out as a word.
    pub fn image_word(&self, x: usize) -> Word {
        self.delta[&x].conjugate_of(x)
    }

    pub fn set_edge(&mut self, a: usize, b: usize, to: (usize, usize), conjugator: Word) {
        self.edge_map.insert(
            edge_key(a, b),
            EdgeImage {
                to: edge_key(to.0, to.1),
                conjugator: Some(conjugator),
            },
        );
    }

    /// `Int(g) o delta`. Witnesses are carried along.
    pub fn twisted(&self, g: &Word, note: &str) -> Deformation {
        let mut out = self.clone();
        if g.is_empty() {
            return out;
        }
        for w in out.delta.values_mut() {
            *w = g.concat(w);
        }
        for (k, e) in out.edge_map.iter_mut() {
            if *k == edge_key(self.r, self.s) {
                continue;
            }
            if let Some(c) = &e.conjugator {
                e.conjugator = Some(g.concat(c));
            }
        }
        for w in out.tame_witnesses.values_mut() {
            *w = g.concat(w);
        }
        out.trace.push(note.to_string());
        out
    }

    /// The restriction to `set`, keeping edges and witnesses inside it.
    pub fn restrict(&self, set: VSet) -> Deformation {
        let mut out = self.clone();
        out.domain &= set;
        out.delta.retain(|x, _| set & bit(*x) != 0);
        out.edge_map
            .retain(|&(a, b), _| set & bit(a) != 0 && set & bit(b) != 0);
        out.tame_witnesses.retain(|x, _| set & bit(*x) != 0);
        out
    }
}

/// Glue two deformations that agree on the overlap of their domains. Every
/// edge of the union must lie in one of the two domains.
pub fn merge(
    d1: &Deformation,
    d2: &Deformation,
    diagram: &Diagram,
    sys: &CoxeterSystem,
) -> Result<Deformation, DeformError> {
    if (d1.r, d1.s) != (d2.r, d2.s) {
        return Err(DeformError::IncompatibleOverlap("different edges J".into()));
    }
    if sys.word_matrix(&d1.omega) != sys.word_matrix(&d2.omega) {
        return Err(DeformError::IncompatibleOverlap("different omega".into()));
    }
    let overlap = d1.domain & d2.domain;
    for x in members(overlap) {
        let (w1, w2) = (&d1.delta[&x], &d2.delta[&x]);
        if w1 != w2 && sys.conjugate_matrix(w1, x) != sys.conjugate_matrix(w2, x) {
            return Err(DeformError::IncompatibleOverlap(format!(
                "images of {} differ",
                diagram.name(x)
            )));
        }
    }
    let union = d1.domain | d2.domain;
    for (a, b) in diagram.restrict(union).edges() {
        let e = bit(a) | bit(b);
        if e & d1.domain != e && e & d2.domain != e {
            return Err(DeformError::EdgeNotCovered(format!(
                "{{{}, {}}}",
                diagram.name(a),
                diagram.name(b)
            )));
        }
    }
    let mut out = d1.clone();
    out.domain = union;
    for (x, w) in &d2.delta {
        out.delta.entry(*x).or_insert_with(|| w.clone());
    }
    for (k, e) in &d2.edge_map {
        out.edge_map.entry(*k).or_insert_with(|| e.clone());
    }
    for (t, w) in &d2.tame_witnesses {
        out.tame_witnesses.entry(*t).or_insert_with(|| w.clone());
    }
    for note in &d2.trace {
        if !out.trace.contains(note) {
            out.trace.push(note.clone());
        }
    }
    Ok(out)
}
