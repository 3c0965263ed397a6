use crate::algebra::{field_for_labels, AlgebraicReal};
use crate::coxcore::{form_value, Label};

use super::graph::{members, Diagram, VSet};

/// `K` generates a finite group: all labels finite and the Gram matrix positive
/// definite, decided by exact elimination. Results are cached per diagram.
pub fn is_spherical(d: &Diagram, k: VSet) -> bool {
    if let Some(&v) = d.spherical_cache.lock().unwrap().get(&k) {
        return v;
    }
    let v = compute_spherical(d, k);
    d.spherical_cache.lock().unwrap().insert(k, v);
    v
}

fn compute_spherical(d: &Diagram, k: VSet) -> bool {
    let vs: Vec<usize> = members(k).collect();
    let mut labels = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            match d.label(a, b) {
                Label::Infinite => return false,
                Label::Finite(m) => labels.push(m),
            }
        }
    }
    if vs.len() <= 1 {
        return true;
    }
    let field = field_for_labels(&labels).expect("label lcm within bound");
    let n = vs.len();
    let mut g: Vec<Vec<AlgebraicReal>> = vs
        .iter()
        .map(|&a| {
            vs.iter()
                .map(|&b| {
                    if a == b {
                        AlgebraicReal::one(&field)
                    } else {
                        form_value(d.label(a, b), &field)
                    }
                })
                .collect()
        })
        .collect();
    is_positive_definite(&mut g, n)
}

/// Symmetric elimination without pivoting: positive definite iff every pivot
/// is positive.
pub fn is_positive_definite(g: &mut [Vec<AlgebraicReal>], n: usize) -> bool {
    for k in 0..n {
        if g[k][k].sign() <= 0 {
            return false;
        }
        let inv = g[k][k].inv().expect("nonzero pivot");
        for i in k + 1..n {
            if g[i][k].is_zero() {
                continue;
            }
            let f = &g[i][k] * &inv;
            for j in k + 1..n {
                if g[k][j].is_zero() {
                    continue;
                }
                let v = &g[i][j] - &(&f * &g[k][j]);
                g[i][j] = v;
            }
        }
    }
    true
}
