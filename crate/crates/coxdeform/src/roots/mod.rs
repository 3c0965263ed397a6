//! The bilinear pairing on roots and the sharp-angled predicates.

use thiserror::Error;

use crate::algebra::{equals_cos_pi_over, AlgebraicReal};
use crate::coxcore::{
    matrix_order, reflection_matrix, CoxeterSystem, Mat, Order, ReflectionRecord, Root,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootsError {
    #[error("the pair has infinite order (|b| >= 1)")]
    InfiniteOrderPair,
    #[error("product order exceeds the cap {cap}")]
    CapTooSmall { cap: u64 },
    #[error("the two reflections coincide")]
    SameReflection,
}

/// `b(alpha, beta)`.
pub fn pairing(alpha: &Root, beta: &Root, sys: &CoxeterSystem) -> AlgebraicReal {
    sys.pairing(&alpha.coords, &beta.coords)
}

/// Angle data of a pair of reflections with finite product order.
#[derive(Clone, Debug)]
pub struct AngleClass {
    pub b_value: AlgebraicReal,
    pub order_q: u64,
    pub sharp: bool,
}

/// Sharpness test for two reflections given by matrix and root.
pub fn angle_class(
    x: &Mat,
    alpha: &[AlgebraicReal],
    y: &Mat,
    beta: &[AlgebraicReal],
    sys: &CoxeterSystem,
    cap: u64,
) -> Result<AngleClass, RootsError> {
    if x == y {
        return Err(RootsError::SameReflection);
    }
    let b = sys.pairing(alpha, beta);
    let abs = b.abs();
    if abs.cmp_value(&AlgebraicReal::one(sys.field())).is_ge() {
        return Err(RootsError::InfiniteOrderPair);
    }
    let q = match matrix_order(&x.mul(y), cap) {
        Order::Finite(q) => q,
        Order::Unbounded(cap) => return Err(RootsError::CapTooSmall { cap }),
    };
    let sharp = equals_cos_pi_over(&abs, q);
    Ok(AngleClass {
        b_value: b,
        order_q: q,
        sharp,
    })
}

pub fn is_sharp_angled_pair(
    x: &ReflectionRecord,
    y: &ReflectionRecord,
    sys: &CoxeterSystem,
    cap: u64,
) -> Result<AngleClass, RootsError> {
    angle_class(
        &x.element.matrix,
        &x.root.coords,
        &y.element.matrix,
        &y.root.coords,
        sys,
        cap,
    )
}

/// Result of the sharp-angled test on a set.
#[derive(Clone, Debug)]
pub struct SharpReport {
    pub sharp: bool,
    /// Index pairs `(i, j)` with `i < j` of the offending edges.
    pub offending: Vec<(usize, usize)>,
}

/// Test every pair with finite product order.
pub fn is_sharp_angled_set(
    set: &[ReflectionRecord],
    sys: &CoxeterSystem,
    cap: u64,
) -> Result<SharpReport, RootsError> {
    let mut offending = Vec::new();
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            match is_sharp_angled_pair(&set[i], &set[j], sys, cap) {
                Ok(a) if !a.sharp => offending.push((i, j)),
                Ok(_) | Err(RootsError::InfiniteOrderPair) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(SharpReport {
        sharp: offending.is_empty(),
        offending,
    })
}

/// Root subbase test: all roots positive, and every pairwise value is at most
/// `-1` or equal to `-cos(pi/m)` for some `m >= 2`.
pub fn is_root_subbase(roots: &[Root], sys: &CoxeterSystem, cap: u64) -> bool {
    let minus_one = AlgebraicReal::from_int(-1, sys.field());
    let mats: Vec<Mat> = roots
        .iter()
        .map(|r| reflection_matrix(&r.coords, sys))
        .collect();
    for r in roots {
        if !r.positive || r.coords.iter().any(|c| c.sign() < 0) {
            return false;
        }
        if !sys.pairing(&r.coords, &r.coords).is_one() {
            return false;
        }
    }
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let b = sys.pairing(&roots[i].coords, &roots[j].coords);
            if b.cmp_value(&minus_one).is_le() {
                continue;
            }
            if b.sign() > 0 {
                return false;
            }
            let q = match matrix_order(&mats[i].mul(&mats[j]), cap) {
                Order::Finite(q) => q,
                Order::Unbounded(_) => return false,
            };
            if q < 2 || !equals_cos_pi_over(&(-b), q) {
                return false;
            }
        }
    }
    true
}

/// Exhaustive search in the dihedral group `<r, s>` for `w` such that
/// `{s, w r w^-1}` is sharp-angled and still generates `<r, s>`. Returns the
/// shortest such word over the two letters, as alternating letters.
pub fn dihedral_sharpening(
    r: (&Mat, &[AlgebraicReal]),
    s: (&Mat, &[AlgebraicReal]),
    sys: &CoxeterSystem,
    cap: u64,
) -> Result<Option<Vec<bool>>, RootsError> {
    // Words are encoded as letter flags: true = r, false = s.
    let a = angle_class(r.0, r.1, s.0, s.1, sys, cap)?;
    let q = a.order_q;
    let mut best: Option<Vec<bool>> = None;
    for len in 0..(2 * q as usize) {
        for start in [false, true] {
            let word: Vec<bool> = (0..len)
                .map(|i| if i % 2 == 0 { start } else { !start })
                .collect();
            let mut g = sys.identity();
            for &l in &word {
                g = g.mul(if l { r.0 } else { s.0 });
            }
            let image = g.apply(r.1);
            let conj = reflection_matrix(&image, sys);
            let root = Root::canonical(image);
            if conj == *s.0 {
                continue;
            }
            let c = match angle_class(&conj, &root.coords, s.0, s.1, sys, cap) {
                Ok(c) => c,
                Err(RootsError::SameReflection) | Err(RootsError::InfiniteOrderPair) => continue,
                Err(e) => return Err(e),
            };
            // generation: the new pair has the same product order as r, s
            if c.sharp && c.order_q == q {
                best = Some(word);
                break;
            }
        }
        if best.is_some() {
            break;
        }
    }
    Ok(best)
}
