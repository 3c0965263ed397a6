use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraicReal;
use crate::coxcore::{build_system, pair_label, CoxeterSystem, Label, Mat, ReflectionRecord, Word};
use crate::diagrams::{bit, edge_context, is_spherical, members, Diagram, VSet};

use super::construct::{k_def, standard_deformation};
use super::record::{edge_key, Deformation};

/// Matrices and roots of the generators of `S` inside some geometric
/// representation.
#[derive(Clone, Debug)]
pub struct Realization {
    pub sys: CoxeterSystem,
    pub mats: Vec<Mat>,
    pub roots: Vec<Vec<AlgebraicReal>>,
}

impl Realization {
    /// `S` as the simple reflections of its own system.
    pub fn standard(sys: &CoxeterSystem) -> Self {
        let n = sys.rank();
        let mats = (0..n).map(|i| sys.generator(i).clone()).collect();
        let roots = (0..n).map(|i| sys.identity().column(i)).collect();
        Realization {
            sys: sys.clone(),
            mats,
            roots,
        }
    }

    pub fn from_reflections(sys: &CoxeterSystem, refl: &[ReflectionRecord]) -> Self {
        Realization {
            sys: sys.clone(),
            mats: refl.iter().map(|r| r.element.matrix.clone()).collect(),
            roots: refl.iter().map(|r| r.root.coords.clone()).collect(),
        }
    }

    pub fn word_matrix(&self, w: &Word) -> Mat {
        let mut m = self.sys.identity();
        for &x in w.letters() {
            m = m.mul(&self.mats[x]);
        }
        m
    }

    /// Matrix and root of `w x w^-1`.
    pub fn conjugate(&self, w: &Word, x: usize) -> (Mat, Vec<AlgebraicReal>) {
        let wm = self.word_matrix(w);
        let wi = self.word_matrix(&w.inverse());
        (wm.mul(&self.mats[x]).mul(&wi), wm.apply(&self.roots[x]))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Unverified,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn push(&mut self, name: &str, failures: Vec<String>) {
        let status = if failures.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        self.checks.push(Check {
            name: name.to_string(),
            status,
            detail: failures.join("; "),
        });
    }

    /// No check failed.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    /// Every check passed.
    pub fn complete(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .collect()
    }
}

/// Check every defining property of an angle-deformation. Matrix identities
/// are tested in `real`; generation is tested in the abstract system of the
/// diagram.
pub fn verify_deformation(
    def: &Deformation,
    d: &Diagram,
    real: &Realization,
    cap: u64,
    group_cap: usize,
) -> VerificationReport {
    let mut rep = VerificationReport::default();
    let (r, s) = (def.r, def.s);
    let sub = d.restrict(def.domain);
    let name = |x: usize| d.name(x).to_string();

    let mut bad = Vec::new();
    let keys: VSet = def.delta.keys().fold(0, |a, &x| a | bit(x));
    if keys != def.domain {
        bad.push("delta is not defined on exactly the domain".to_string());
    }
    let mut edges: BTreeSet<(usize, usize)> = sub.edges().into_iter().collect();
    edges.insert(edge_key(r, s));
    let mapped: BTreeSet<(usize, usize)> = def.edge_map.keys().copied().collect();
    if edges != mapped {
        bad.push("edge map is not defined on exactly the edges".to_string());
    }
    rep.push("domain", bad);
    if !rep.ok() {
        return rep;
    }

    let images: BTreeMap<usize, (Mat, Vec<AlgebraicReal>)> = def
        .delta
        .iter()
        .map(|(&x, w)| (x, real.conjugate(w, x)))
        .collect();

    let mut bad = Vec::new();
    let mut seen: HashSet<&Mat> = HashSet::new();
    for (x, (m, _)) in &images {
        if m.is_identity() {
            bad.push(format!("delta({}) is the identity", name(*x)));
        }
        if !m.mul(m).is_identity() {
            bad.push(format!("delta({}) is not an involution", name(*x)));
        }
        if !seen.insert(m) {
            bad.push(format!("delta({}) repeats an image", name(*x)));
        }
    }
    rep.push("involutions", bad);

    let mut bad = Vec::new();
    if images[&r].0 != real.conjugate(&def.omega, r).0 {
        bad.push("delta(r) is not omega r omega^-1".to_string());
    }
    if images[&s].0 != real.mats[s] {
        bad.push("delta(s) is not s".to_string());
    }
    rep.push("fixes J", bad);

    let mut bad = Vec::new();
    if def.omega.letters().iter().any(|&x| x != r && x != s) {
        bad.push("omega is not a word in r, s".to_string());
    }
    let before = pair_label(
        &real.mats[r],
        &real.roots[r],
        &real.mats[s],
        &real.roots[s],
        &real.sys,
        cap,
    );
    let after = pair_label(
        &images[&r].0,
        &images[&r].1,
        &real.mats[s],
        &real.roots[s],
        &real.sys,
        cap,
    );
    match (before, after) {
        (Ok(a), Ok(b)) if a == b => {}
        (Ok(a), Ok(b)) => bad.push(format!("o(delta(r) s) = {b}, expected {a}")),
        (Err(e), _) | (_, Err(e)) => bad.push(e.to_string()),
    }
    rep.push("J generation", bad);

    let mut bad = Vec::new();
    let mut targets: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (&(a, b), e) in &def.edge_map {
        if def.domain & bit(e.to.0) == 0 || def.domain & bit(e.to.1) == 0 || e.to.0 == e.to.1 {
            bad.push(format!(
                "{{{}, {}}} maps outside the domain",
                name(a),
                name(b)
            ));
            continue;
        }
        if !targets.insert(e.to) {
            bad.push(format!(
                "{{{}, {}}} shares its image",
                name(e.to.0),
                name(e.to.1)
            ));
        }
        let Some(c) = &e.conjugator else {
            if (a, b) != edge_key(r, s) || e.to != edge_key(r, s) {
                bad.push(format!("{{{}, {}}} has no conjugator", name(a), name(b)));
            }
            continue;
        };
        let (ca, cb) = (real.conjugate(c, a).0, real.conjugate(c, b).0);
        let (ta, tb) = (&images[&e.to.0].0, &images[&e.to.1].0);
        if !((&ca == ta && &cb == tb) || (&ca == tb && &cb == ta)) {
            bad.push(format!(
                "c {{{}, {}}} c^-1 is not {{delta({}), delta({})}}",
                name(a),
                name(b),
                name(e.to.0),
                name(e.to.1)
            ));
        }
    }
    let xs: Vec<usize> = members(def.domain).collect();
    let mut image_edges: BTreeMap<(usize, usize), Label> = BTreeMap::new();
    for (i, &x) in xs.iter().enumerate() {
        for &y in &xs[i + 1..] {
            let (mx, ax) = &images[&x];
            let (my, ay) = &images[&y];
            match pair_label(mx, ax, my, ay, &real.sys, cap) {
                Ok(Label::Infinite) => {}
                Ok(l) => {
                    image_edges.insert((x, y), l);
                }
                Err(e) => bad.push(e.to_string()),
            }
        }
    }
    let image_keys: BTreeSet<(usize, usize)> = image_edges.keys().copied().collect();
    if targets != image_keys {
        bad.push("the image edges are not exactly the edges of delta(S)".to_string());
    }
    for (&(a, b), e) in &def.edge_map {
        if let Some(l) = image_edges.get(&e.to) {
            if *l != d.label(a, b) {
                bad.push(format!(
                    "label of {{{}, {}}} changes to {l}",
                    name(a),
                    name(b)
                ));
            }
        }
    }
    rep.push("edge map", bad);

    rep.checks.push(generation_check(def, &sub, group_cap));
    rep.push("tame witnesses", witness_failures(def, &sub, real));
    rep
}

/// `<delta(S)> = <S>`: letters are recovered from images whose conjugators
/// use recovered letters only, and otherwise by enumerating a finite
/// standard parabolic subgroup.
fn generation_check(def: &Deformation, d: &Diagram, group_cap: usize) -> Check {
    let mut known: VSet = 0;
    let letters = |w: &Word| w.letters().iter().fold(0, |a, &x| a | bit(x));
    loop {
        let mut grew = false;
        for (&x, w) in &def.delta {
            if known & bit(x) == 0 && letters(w) & !known == 0 {
                known |= bit(x);
                grew = true;
            }
        }
        if grew {
            continue;
        }
        let pending: Vec<usize> = members(def.domain & !known).collect();
        for x in pending {
            if let Some(true) = recover_in_parabolic(def, d, known, x, group_cap) {
                known |= bit(x);
                grew = true;
                break;
            }
        }
        if !grew {
            break;
        }
    }
    let missing = def.domain & !known;
    Check {
        name: "generation".to_string(),
        status: if missing == 0 {
            CheckStatus::Pass
        } else {
            CheckStatus::Unverified
        },
        detail: if missing == 0 {
            String::new()
        } else {
            format!("not recovered: {:?}", d.set_names(missing))
        },
    }
}

type Perm = Vec<u32>;

fn compose(p: &Perm, q: &Perm) -> Perm {
    q.iter().map(|&i| p[i as usize]).collect()
}

/// Generators of a finite Coxeter group as permutations of its roots.
fn root_action(sys: &CoxeterSystem, limit: usize) -> Option<Vec<Perm>> {
    let n = sys.rank();
    let mut roots: Vec<Vec<AlgebraicReal>> = (0..n).map(|i| sys.identity().column(i)).collect();
    let mut index: HashMap<Vec<AlgebraicReal>, u32> = roots
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, v)| (v, i as u32))
        .collect();
    let mut images: Vec<Perm> = vec![Vec::new(); n];
    let mut head = 0;
    while head < roots.len() {
        let v = roots[head].clone();
        head += 1;
        for (j, img) in images.iter_mut().enumerate() {
            let w = sys.generator(j).apply(&v);
            let k = match index.get(&w) {
                Some(&k) => k,
                None => {
                    if roots.len() >= limit {
                        return None;
                    }
                    let k = roots.len() as u32;
                    index.insert(w.clone(), k);
                    roots.push(w);
                    k
                }
            };
            img.push(k);
        }
    }
    Some(images)
}

/// Look for `x` inside the subgroup generated by known letters and images
/// contained in the smallest spherical parabolic `W_K` around `x`.
fn recover_in_parabolic(
    def: &Deformation,
    d: &Diagram,
    known: VSet,
    x: usize,
    group_cap: usize,
) -> Option<bool> {
    let letters = |w: &Word| w.letters().iter().fold(0, |a, &y| a | bit(y));
    let k = letters(&def.delta[&x]) | bit(x);
    if !is_spherical(d, k) {
        return None;
    }
    let index: BTreeMap<usize, usize> = members(k).enumerate().map(|(i, v)| (v, i)).collect();
    let sys = build_system(&d.restrict(k).to_matrix()).ok()?;
    let simple = root_action(&sys, group_cap)?;
    let word_perm = |w: &Word| {
        let id: Perm = (0..simple[0].len() as u32).collect();
        w.letters()
            .iter()
            .fold(id, |acc, &y| compose(&acc, &simple[index[&y]]))
    };
    let mut gens = Vec::new();
    for y in members(k) {
        if known & bit(y) != 0 {
            gens.push(simple[index[&y]].clone());
        } else if def.delta.get(&y).is_some_and(|w| letters(w) & !k == 0) {
            gens.push(word_perm(&def.delta[&y].conjugate_of(y)));
        }
    }
    let target = &simple[index[&x]];
    let id: Perm = (0..target.len() as u32).collect();
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let g = queue[head].clone();
        head += 1;
        for h in &gens {
            let next = compose(&g, h);
            if &next == target {
                return Some(true);
            }
            if seen.insert(next.clone()) {
                if queue.len() >= group_cap {
                    return None;
                }
                queue.push(next);
            }
        }
    }
    Some(false)
}

/// `delta(x) = w_t delta_t(x) w_t^-1` on `K_t^def` for every recorded witness.
fn witness_failures(def: &Deformation, d: &Diagram, real: &Realization) -> Vec<String> {
    let mut bad = Vec::new();
    if def.tame_witnesses.is_empty() {
        return bad;
    }
    let ctx = match edge_context(d, def.r, def.s) {
        Ok(c) => c,
        Err(e) => return vec![e.to_string()],
    };
    for (&t, w) in &def.tame_witnesses {
        if !ctx.is_tame(t) {
            bad.push(format!("{} is not tame", d.name(t)));
            continue;
        }
        let std = match standard_deformation(d, &ctx, Some(t)) {
            Ok(s) => s,
            Err(e) => {
                bad.push(e.to_string());
                continue;
            }
        };
        for x in members(k_def(d, &ctx, Some(t))) {
            let lhs = real.conjugate(&def.delta[&x], x).0;
            let rhs = real.conjugate(&w.concat(&std.delta[&x]), x).0;
            if lhs != rhs {
                bad.push(format!("witness for {} fails at {}", d.name(t), d.name(x)));
            }
        }
    }
    bad
}
