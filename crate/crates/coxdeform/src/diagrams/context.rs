use std::collections::BTreeMap;

use serde::Serialize;

use super::classify::{is_h3_vertex, is_h4_vertex, is_tame};
use super::graph::{
    bit, is_flexible_set, j_components, members, perp, perp_fin_inf, size, Diagram, VSet,
};
use super::DiagramError;

/// A `J_t`-component together with `u(L)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JtComponent {
    pub vertices: VSet,
    pub u: Option<usize>,
}

/// The structure sets around an edge `J = {r, s}` with `o(rs) = 5`.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeContext {
    pub r: usize,
    pub s: usize,
    pub j: VSet,
    pub jperp: VSet,
    pub jfin: VSet,
    pub jinf: VSet,
    /// `J`-components with `t(L)`.
    pub components: Vec<(VSet, Option<usize>)>,
    pub t: VSet,
    pub t_r: VSet,
    pub t_s: VSet,
    pub t3: VSet,
    pub t4: VSet,
    pub u: VSet,
    pub u_of: BTreeMap<usize, VSet>,
    pub jt_components: BTreeMap<usize, Vec<JtComponent>>,
    pub tame: VSet,
    pub degree: usize,
}

impl EdgeContext {
    pub fn j_t(&self, t: usize) -> VSet {
        self.j | bit(t)
    }

    /// The unique element of `U_t` of a tame `t`.
    pub fn u_t(&self, t: usize) -> Option<usize> {
        members(self.u_of[&t]).next()
    }

    /// `K_t = J_t ∪ U_t` for tame `t`.
    pub fn k_t(&self, t: usize) -> VSet {
        self.j_t(t) | self.u_of[&t]
    }

    pub fn is_tame(&self, t: usize) -> bool {
        self.tame & bit(t) != 0
    }

    pub fn wild(&self) -> VSet {
        self.t & !self.tame
    }
}

/// Number of wild elements of `K ∩ T`, tameness taken inside `K`.
pub fn degree(d: &Diagram, r: usize, s: usize) -> usize {
    d.vertices()
        .filter(|&t| is_h3_vertex(d, r, s, t) && !is_tame(d, r, s, t))
        .count()
}

pub fn edge_context(d: &Diagram, r: usize, s: usize) -> Result<EdgeContext, DiagramError> {
    let broken = |m: String| Err(DiagramError::InternalInvariantBroken(m));
    if !d.label(r, s).is(5) {
        return broken(format!("o({}{}) is not 5", d.name(r), d.name(s)));
    }
    let j = bit(r) | bit(s);
    let (jperp, jfin, jinf) = perp_fin_inf(d, j);
    let mut t = 0;
    let mut t_r = 0;
    let mut t_s = 0;
    for x in d.vertices().filter(|&x| is_h3_vertex(d, r, s, x)) {
        t |= bit(x);
        if d.label(r, x).is(3) {
            t_r |= bit(x);
        } else {
            t_s |= bit(x);
        }
    }
    let mut u_of = BTreeMap::new();
    let mut u = 0;
    let mut t3 = 0;
    for x in members(t) {
        let ux = d
            .vertices()
            .filter(|&y| is_h4_vertex(d, r, s, x, y))
            .fold(0, |acc, y| acc | bit(y));
        if ux == 0 {
            t3 |= bit(x);
        }
        u |= ux;
        u_of.insert(x, ux);
    }
    let mut components = Vec::new();
    for l in j_components(d, j) {
        let tl: Vec<usize> = members(t)
            .filter(|&x| members(l).any(|y| d.finite(x, y)))
            .collect();
        if tl.len() > 1 {
            return broken(format!("|T_L| = {} for a J-component", tl.len()));
        }
        components.push((l, tl.first().copied()));
    }
    let mut jt_components = BTreeMap::new();
    for x in members(t) {
        let mut comps = Vec::new();
        for l in j_components(d, j | bit(x)) {
            let ul: Vec<usize> = members(u_of[&x])
                .filter(|&y| members(l).any(|z| d.finite(y, z)))
                .collect();
            if ul.len() > 1 {
                return broken(format!("|U_L| = {} for a J_t-component", ul.len()));
            }
            comps.push(JtComponent {
                vertices: l,
                u: ul.first().copied(),
            });
        }
        jt_components.insert(x, comps);
    }
    let tame = members(t)
        .filter(|&x| is_tame(d, r, s, x))
        .fold(0, |acc, x| acc | bit(x));
    Ok(EdgeContext {
        r,
        s,
        j,
        jperp,
        jfin,
        jinf,
        components,
        t,
        t_r,
        t_s,
        t3,
        t4: t & !t3,
        u,
        u_of,
        jt_components,
        tame,
        degree: size(t & !tame),
    })
}

/// `V_u, W_u, X_u, Y_u, Z_u` for one `u` in `U_t ∪ {inf}`; `u = None` is `inf`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WildPieces {
    pub t: usize,
    pub u: Option<usize>,
    pub v: VSet,
    pub w: VSet,
    pub x: VSet,
    pub y: VSet,
    pub z: VSet,
}

/// The pieces for all `u`, with `inf` first.
pub fn wild_pieces(d: &Diagram, ctx: &EdgeContext, t: usize) -> Vec<WildPieces> {
    let jt = ctx.j_t(t);
    let mut us = vec![None];
    us.extend(members(ctx.u_of[&t]).map(Some));
    let mut out: Vec<WildPieces> = us
        .into_iter()
        .map(|u| {
            let v = jt | u.map_or(0, bit);
            let w = v | perp(d, v);
            let x = ctx.jt_components[&t]
                .iter()
                .filter(|c| c.u == u)
                .fold(0, |acc, c| acc | c.vertices);
            WildPieces {
                t,
                u,
                v,
                w,
                x,
                y: w | x,
                z: 0,
            }
        })
        .collect();
    let y_inf = out[0].y;
    for p in &mut out {
        p.z = p.y | y_inf;
    }
    out
}

/// Re-check the guarantees that hold around a Delta-edge. Returns one message
/// per violation.
pub fn structure_violations(d: &Diagram, ctx: &EdgeContext) -> Vec<String> {
    let mut out = Vec::new();
    let name = |v: usize| d.name(v).to_string();
    let no_edges =
        |set: VSet| members(set).all(|a| members(set).all(|b| a == b || d.infinite(a, b)));
    if !no_edges(ctx.t) {
        out.push("T contains an edge".to_string());
    }
    for (&t, &ut) in &ctx.u_of {
        if !no_edges(ut) {
            out.push(format!("U_{} contains an edge", name(t)));
        }
        let jt = ctx.j_t(t);
        if !is_flexible_set(d, jt) {
            out.push(format!("J_{} is not flexible", name(t)));
        }
        for u in members(ut) {
            if !is_flexible_set(d, jt | bit(u)) {
                out.push(format!("J_{{{},{}}} is not flexible", name(t), name(u)));
            }
        }
        if ctx.is_tame(t) {
            continue;
        }
        let pieces = wild_pieces(d, ctx, t);
        let y_inf = pieces[0].y;
        for p in &pieces {
            let sub = d.restrict(p.y);
            if !is_tame(&sub, ctx.r, ctx.s, t) {
                out.push(format!("{} is wild in Y_u", name(t)));
            }
            if degree(&sub, ctx.r, ctx.s) >= ctx.degree {
                out.push(format!("deg(Y_u) does not drop for {}", name(t)));
            }
            if let Some(u) = p.u {
                let v = jt | bit(u);
                if p.y & y_inf != jt | perp(d, v) {
                    out.push(format!("Y_u ∩ Y_inf is wrong for u = {}", name(u)));
                }
                for a in members(p.z) {
                    for b in members(p.z) {
                        if a < b && d.is_edge(a, b) {
                            let e = bit(a) | bit(b);
                            if e & p.y != e && e & y_inf != e {
                                out.push(format!(
                                    "edge {{{},{}}} of Z_u not covered",
                                    name(a),
                                    name(b)
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
