use std::collections::BTreeMap;

use crate::coxcore::{CoxeterSystem, Word};
use crate::diagrams::{
    bit, degree, edge_context, free_elements, is_h3_vertex, is_h4_vertex, is_theta_edge,
    j_components, members, perp, perp_fin_inf, wild_pieces, Diagram, EdgeContext, VSet,
};
use crate::roots::{angle_class, dihedral_sharpening};

use super::record::{edge_key, merge, Deformation};
use super::verify::Realization;
use super::words::{CoreKind, Roles, StandardWords};
use super::DeformError;

/// `omega` in `<r, s>` making `{s, omega r omega^-1}` sharp-angled while still
/// generating `<r, s>`.
pub fn sharpening_omega(
    r: usize,
    s: usize,
    real: &Realization,
    cap: u64,
) -> Result<Word, DeformError> {
    let (mr, ar) = (&real.mats[r], &real.roots[r]);
    let (ms, as_) = (&real.mats[s], &real.roots[s]);
    let a = angle_class(mr, ar, ms, as_, &real.sys, cap)?;
    if a.sharp {
        return Err(DeformError::AlreadySharp);
    }
    if a.order_q == 5 {
        return Ok(Word(vec![s, r, s]));
    }
    match dihedral_sharpening((mr, ar), (ms, as_), &real.sys, cap)? {
        Some(flags) => Ok(Word(
            flags.into_iter().map(|f| if f { r } else { s }).collect(),
        )),
        None => Err(DeformError::NotFound),
    }
}

/// The map of an `a`-special edge: `r -> omega r omega^-1`, identity on
/// `{s} ∪ J^perp`, and `gamma_L` on each `J`-component.
fn rank2_special(
    d: &Diagram,
    r: usize,
    s: usize,
    omega: &Word,
    note: &str,
) -> Result<Deformation, DeformError> {
    let j = bit(r) | bit(s);
    let (jperp, jfin, _) = perp_fin_inf(d, j);
    if jfin != jperp {
        return Err(DeformError::Invariant(format!(
            "J^fin differs from J^perp: {:?}",
            d.set_names(jfin & !jperp)
        )));
    }
    let mut out = Deformation::new(r, s, omega.clone(), d.active());
    out.delta.insert(r, omega.clone());
    out.delta.insert(s, Word::empty());
    for y in members(jperp) {
        out.delta.insert(y, Word::empty());
    }
    let mut gamma_of: BTreeMap<usize, Word> = BTreeMap::new();
    for l in j_components(d, j) {
        let free = free_elements(d, j, l);
        if free == 0 {
            return Err(DeformError::Invariant("J is not flexible".into()));
        }
        let gamma = if free & bit(r) != 0 {
            Word::empty()
        } else {
            omega.clone()
        };
        for x in members(l) {
            out.delta.insert(x, gamma.clone());
            gamma_of.insert(x, gamma.clone());
        }
    }
    for (a, b) in d.edges() {
        if edge_key(a, b) == edge_key(r, s) {
            continue;
        }
        let conj = if let Some(g) = gamma_of.get(&a).or_else(|| gamma_of.get(&b)) {
            g.clone()
        } else if a == r || b == r {
            omega.clone()
        } else {
            Word::empty()
        };
        out.set_edge(a, b, (a, b), conj);
    }
    out.trace.push(note.to_string());
    Ok(out)
}

pub fn theta_deformation(
    d: &Diagram,
    r: usize,
    s: usize,
    omega: &Word,
) -> Result<Deformation, DeformError> {
    if !is_theta_edge(d, r, s) {
        return Err(DeformError::NotThetaEdge);
    }
    rank2_special(d, r, s, omega, "theta-edge deformation")
}

/// Kind and roles of an H3 vertex `t` of `J = {r, s}`, with `u` its H4
/// partner if any.
pub fn core_kind(
    d: &Diagram,
    r: usize,
    s: usize,
    t: Option<usize>,
    u: Option<usize>,
) -> (CoreKind, Roles) {
    let roles = Roles::new(r, s, t, u);
    let kind = match (t, u) {
        (None, _) => CoreKind::Infinity,
        (Some(t), None) if d.label(s, t).is(3) => CoreKind::Ts3,
        (Some(_), None) => CoreKind::Tr3,
        (Some(t), Some(_)) if d.label(s, t).is(3) => CoreKind::Ts4,
        (Some(_), Some(_)) => CoreKind::Tr4,
    };
    (kind, roles)
}

/// Edges inside `K_t` with their conjugators.
fn core_edges(
    kind: CoreKind,
    roles: Roles,
    omega: &Word,
    pi: &Word,
) -> Vec<((usize, usize), Word)> {
    let Some(t) = roles.t else {
        return Vec::new();
    };
    let (p, q) = if kind.on_s() {
        (roles.s, roles.r)
    } else {
        (roles.r, roles.s)
    };
    let mut out = vec![((q, t), pi.clone()), ((p, t), omega.clone())];
    if let Some(u) = roles.u {
        out.push(((roles.r, u), roles.word("srs")));
        out.push(((roles.s, u), Word::empty()));
        out.push(((t, u), omega.clone()));
    }
    out
}

/// `K_t^def = K_t ∪ K_t^perp` for `t` in `T ∪ {inf}`.
pub fn k_def(d: &Diagram, ctx: &EdgeContext, t: Option<usize>) -> VSet {
    let k = match t {
        None => ctx.j,
        Some(t) => ctx.k_t(t),
    };
    k | perp(d, k)
}

fn standard_roles(d: &Diagram, ctx: &EdgeContext, t: Option<usize>) -> (CoreKind, Roles) {
    core_kind(d, ctx.r, ctx.s, t, t.and_then(|t| ctx.u_t(t)))
}

/// The standard deformation of `K_t^def`.
pub fn standard_deformation(
    d: &Diagram,
    ctx: &EdgeContext,
    t: Option<usize>,
) -> Result<Deformation, DeformError> {
    if let Some(t) = t {
        if !ctx.is_tame(t) {
            return Err(DeformError::NotTame(d.name(t).to_string()));
        }
    }
    let (kind, roles) = standard_roles(d, ctx, t);
    let words = StandardWords::new(roles);
    let (omega_t, pi_t) = words.core(kind);
    let (r, s) = (ctx.r, ctx.s);
    let domain = k_def(d, ctx, t);
    let mut out = Deformation::new(r, s, roles.word("srs"), domain);
    for x in members(domain) {
        out.delta.insert(x, Word::empty());
    }
    out.delta.insert(r, roles.word("srs"));
    if let Some(t) = t {
        out.delta.insert(t, omega_t.clone());
    }
    let mut core: BTreeMap<(usize, usize), Word> = BTreeMap::new();
    for ((a, b), w) in core_edges(kind, roles, &omega_t, &pi_t) {
        core.insert(edge_key(a, b), w);
    }
    for (a, b) in d.restrict(domain).edges() {
        if edge_key(a, b) == edge_key(r, s) {
            continue;
        }
        let conj = if let Some(w) = core.get(&edge_key(a, b)) {
            w.clone()
        } else if a == r || b == r {
            roles.word("srs")
        } else if t == Some(a) || t == Some(b) {
            omega_t.clone()
        } else {
            Word::empty()
        };
        out.set_edge(a, b, (a, b), conj);
    }
    if let Some(t) = t {
        out.tame_witnesses.insert(t, Word::empty());
    }
    out.trace.push(format!("standard deformation ({kind:?})"));
    Ok(out)
}

/// Deformation for an `a`-special subset `K` of type H3 or H4 given by its
/// roles. In the case where `a` is the element of `J` joined to `t` by 3 and
/// `K` has rank 3, the images of `{q, x}` and `{t, x}` are exchanged.
pub fn k_special_deformation(
    d: &Diagram,
    roles: Roles,
    a: usize,
) -> Result<Deformation, DeformError> {
    let (r, s) = (roles.r, roles.s);
    let t = roles
        .t
        .ok_or_else(|| DeformError::NotASpecial("no t".into()))?;
    if !is_h3_vertex(d, r, s, t) || !d.label(r, s).is(5) {
        return Err(DeformError::NotASpecial("K is not of type H3".into()));
    }
    if let Some(u) = roles.u {
        if !is_h4_vertex(d, r, s, t, u) {
            return Err(DeformError::NotASpecial("K is not of type H4".into()));
        }
    }
    if a != r && a != s {
        return Err(DeformError::NotASpecial("a is not in J".into()));
    }
    let j = bit(r) | bit(s);
    let k = j | bit(t) | roles.u.map_or(0, bit);
    let (jperp, _, jinf) = perp_fin_inf(d, j);
    for x in members(d.active() & !k) {
        let l = d.label(x, a);
        if !(l.is(2) || !l.is_finite()) {
            return Err(DeformError::NotASpecial(format!(
                "TWa: o({}{}) = {l}",
                d.name(x),
                d.name(a)
            )));
        }
        if l.is(2) && jperp & bit(x) == 0 {
            return Err(DeformError::NotASpecial(format!(
                "TWa: {} is not in J^perp",
                d.name(x)
            )));
        }
    }
    let kperp = perp(d, k);
    for y in members(jperp & !k) {
        let touches = members(jinf | bit(t)).any(|x| d.finite(x, y));
        if touches && kperp & bit(y) == 0 {
            return Err(DeformError::NotASpecial(format!(
                "TWt: {} is not in K^perp",
                d.name(y)
            )));
        }
    }
    if k | jinf | jperp != d.active() {
        return Err(DeformError::NotASpecial(
            "S is not K ∪ J^inf ∪ J^perp".into(),
        ));
    }
    let (kind, _) = core_kind(d, r, s, Some(t), roles.u);
    let words = StandardWords::new(roles);
    let (omega, pi) = words.core(kind);
    let (p, q) = if kind.on_s() { (s, r) } else { (r, s) };
    let gamma = if a == q { omega.clone() } else { pi.clone() };
    let switch = a == p && kind.rank() == 3;

    let mut out = Deformation::new(r, s, roles.word("srs"), d.active());
    out.delta.insert(r, roles.word("srs"));
    out.delta.insert(s, Word::empty());
    out.delta.insert(t, omega.clone());
    for y in members(jperp) {
        out.delta.insert(y, Word::empty());
    }
    for x in members(jinf) {
        out.delta.insert(x, gamma.clone());
    }
    let mut core: BTreeMap<(usize, usize), Word> = BTreeMap::new();
    for ((a, b), w) in core_edges(kind, roles, &omega, &pi) {
        core.insert(edge_key(a, b), w);
    }
    let is_inf = |x: usize| jinf & bit(x) != 0;
    for (x, y) in d.edges() {
        if edge_key(x, y) == edge_key(r, s) {
            continue;
        }
        if let Some(w) = core.get(&edge_key(x, y)) {
            out.set_edge(x, y, (x, y), w.clone());
            continue;
        }
        let (x, y) = if is_inf(y) { (y, x) } else { (x, y) };
        if is_inf(x) {
            if is_inf(y) || jperp & bit(y) != 0 {
                out.set_edge(x, y, (x, y), gamma.clone());
            } else if y == a {
                return Err(DeformError::NotASpecial(format!("{} meets a", d.name(x))));
            } else if switch && y == q {
                out.set_edge(x, y, (t, x), gamma.clone());
            } else if switch && y == t {
                out.set_edge(x, y, (q, x), gamma.clone());
            } else {
                out.set_edge(x, y, (x, y), gamma.clone());
            }
            continue;
        }
        let conj = if x == r || y == r {
            roles.word("srs")
        } else if x == t || y == t {
            omega.clone()
        } else {
            Word::empty()
        };
        out.set_edge(x, y, (x, y), conj);
    }
    let a_name = if a == r { "r" } else { "s" };
    out.trace
        .push(format!("{a_name}-special deformation ({kind:?})"));
    Ok(out)
}

/// The `K`-mirror for `K = {r, s, t}` of type H3: the labels of `r` and `t`
/// towards `J^inf` are exchanged. Also returns the canonical bijection of
/// edges.
pub fn k_mirror(
    d: &Diagram,
    r: usize,
    s: usize,
    t: usize,
) -> (Diagram, BTreeMap<(usize, usize), (usize, usize)>) {
    let j = bit(r) | bit(s);
    let (_, _, jinf) = perp_fin_inf(d, j);
    let n = d.ambient_rank();
    let mut labels: Vec<Vec<_>> = (0..n)
        .map(|a| (0..n).map(|b| d.label(a, b)).collect())
        .collect();
    for x in members(jinf) {
        let (lr, lt) = (d.label(r, x), d.label(t, x));
        labels[r][x] = lt;
        labels[x][r] = lt;
        labels[t][x] = lr;
        labels[x][t] = lr;
    }
    let mirror = Diagram::new(d.names().to_vec(), labels).restrict(d.active());
    let mut theta = BTreeMap::new();
    for (a, b) in d.edges() {
        let swap = |v: usize| {
            if v == r {
                t
            } else if v == t {
                r
            } else {
                v
            }
        };
        let image = if jinf & bit(b) != 0 && (a == r || a == t) {
            edge_key(swap(a), b)
        } else if jinf & bit(a) != 0 && (b == r || b == t) {
            edge_key(a, swap(b))
        } else {
            edge_key(a, b)
        };
        theta.insert(edge_key(a, b), image);
    }
    (mirror, theta)
}

/// The tame construction: standard pieces on `J ∪ T ∪ J^perp`, one special
/// deformation per `J`-component, glued.
pub fn tame_deformation(
    d: &Diagram,
    ctx: &EdgeContext,
    sys: &CoxeterSystem,
) -> Result<Deformation, DeformError> {
    if ctx.wild() != 0 {
        return Err(DeformError::NotAllTame(d.set_names(ctx.wild())));
    }
    if ctx.jfin != ctx.jperp | ctx.t {
        return Err(DeformError::Invariant("J^fin is not J^perp ∪ T".into()));
    }
    let (r, s) = (ctx.r, ctx.s);
    let srs = Word(vec![s, r, s]);
    let hat_domain = ctx.j | ctx.t | ctx.jperp;
    let mut hat = Deformation::new(r, s, srs.clone(), hat_domain);
    hat.delta.insert(r, srs.clone());
    hat.delta.insert(s, Word::empty());
    for y in members(ctx.jperp) {
        hat.delta.insert(y, Word::empty());
    }
    let mut core: BTreeMap<(usize, usize), Word> = BTreeMap::new();
    let mut omegas: BTreeMap<usize, Word> = BTreeMap::new();
    for t in members(ctx.t) {
        let (kind, roles) = standard_roles(d, ctx, Some(t));
        let (omega_t, pi_t) = StandardWords::new(roles).core(kind);
        hat.delta.insert(t, omega_t.clone());
        for ((a, b), w) in core_edges(kind, roles, &omega_t, &pi_t).into_iter().take(2) {
            core.insert(edge_key(a, b), w);
        }
        omegas.insert(t, omega_t);
        hat.tame_witnesses.insert(t, Word::empty());
    }
    for (a, b) in d.restrict(hat_domain).edges() {
        if edge_key(a, b) == edge_key(r, s) {
            continue;
        }
        let conj = if let Some(w) = core.get(&edge_key(a, b)) {
            w.clone()
        } else if a == r || b == r {
            srs.clone()
        } else if let Some(w) = omegas.get(&a).or_else(|| omegas.get(&b)) {
            if ctx.t & bit(a) != 0 && ctx.t & bit(b) != 0 {
                return Err(DeformError::Invariant("an edge inside T".into()));
            }
            w.clone()
        } else {
            Word::empty()
        };
        hat.set_edge(a, b, (a, b), conj);
    }
    hat.trace.push("standard pieces on J ∪ T ∪ J^perp".into());

    let mut acc = hat.clone();
    for (l, t_l) in &ctx.components {
        let piece = match t_l {
            None => {
                let k_l = ctx.j | ctx.jperp | l;
                rank2_special(&d.restrict(k_l), r, s, &srs, "rank-2 special deformation")?
            }
            Some(t) => {
                let k_l = ctx.k_t(*t) | ctx.jperp | l;
                let (kind, roles) = standard_roles(d, ctx, Some(*t));
                let free = free_elements(d, ctx.j, *l);
                let q = if kind.on_s() { r } else { s };
                let p = if kind.on_s() { s } else { r };
                let a = if free & bit(q) != 0 {
                    q
                } else if free & bit(p) != 0 {
                    p
                } else {
                    return Err(DeformError::Invariant(
                        "component without free element".into(),
                    ));
                };
                k_special_deformation(&d.restrict(k_l), roles, a)?
            }
        };
        let glued = merge(&piece, &hat, d, sys)?;
        acc = merge(&acc, &glued, d, sys)?;
    }
    acc.tame_witnesses = hat.tame_witnesses.clone();
    acc.trace.push("tame deformation".into());
    Ok(acc)
}

/// A tame `(r, s, srs)`-deformation of the whole diagram, by induction on the
/// degree.
pub fn angle_deformation(
    d: &Diagram,
    r: usize,
    s: usize,
    sys: &CoxeterSystem,
) -> Result<Deformation, DeformError> {
    let ctx = edge_context(d, r, s)?;
    if ctx.degree == 0 {
        tame_deformation(d, &ctx, sys)
    } else {
        wild_deformation(d, &ctx, sys)
    }
}

pub fn wild_deformation(
    d: &Diagram,
    ctx: &EdgeContext,
    sys: &CoxeterSystem,
) -> Result<Deformation, DeformError> {
    let Some(t) = members(ctx.wild()).next() else {
        return tame_deformation(d, ctx, sys);
    };
    let (r, s) = (ctx.r, ctx.s);
    let pieces = wild_pieces(d, ctx, t);
    let mut parts = Vec::new();
    for p in &pieces {
        let sub = d.restrict(p.y);
        let deg = degree(&sub, r, s);
        if deg >= ctx.degree {
            return Err(DeformError::DegreeNotDecreasing {
                before: ctx.degree,
                after: deg,
            });
        }
        let theta = angle_deformation(&sub, r, s, sys)?;
        let v = theta
            .tame_witnesses
            .get(&t)
            .ok_or_else(|| DeformError::MissingWitness(d.name(t).to_string()))?;
        let tau = match p.u {
            None => Word::empty(),
            Some(u) => {
                let (kind, roles) = core_kind(d, r, s, Some(t), Some(u));
                StandardWords::new(roles).twist(kind)
            }
        };
        let g = tau.concat(&v.inverse());
        let note = match p.u {
            None => format!("piece Y_inf of wild {}", d.name(t)),
            Some(u) => format!("piece Y_{} of wild {}, twisted", d.name(u), d.name(t)),
        };
        let mut part = theta.twisted(&g, &note);
        if g.is_empty() {
            part.trace.push(note);
        }
        parts.push(part);
    }
    let mut acc = parts[0].clone();
    for part in &parts[1..] {
        acc = merge(&acc, part, d, sys)?;
    }
    if acc.domain != d.active() {
        return Err(DeformError::Invariant("pieces do not cover S".into()));
    }
    let mut witnesses = BTreeMap::new();
    for t2 in members(ctx.tame) {
        let kdef = k_def(d, ctx, Some(t2));
        let found = pieces
            .iter()
            .zip(&parts)
            .find(|(p, _)| kdef & p.y == kdef)
            .and_then(|(_, part)| part.tame_witnesses.get(&t2));
        match found {
            Some(w) => {
                witnesses.insert(t2, w.clone());
            }
            None => return Err(DeformError::MissingWitness(d.name(t2).to_string())),
        }
    }
    acc.tame_witnesses = witnesses;
    acc.trace
        .push(format!("wild deformation around {}", d.name(t)));
    Ok(acc)
}
