//! Exact arithmetic in the real cyclotomic fields `Q(2cos(pi/L))`.

mod field;
mod poly;
mod real;

pub use field::{
    embed_cos, embed_two_cos, field_for_labels, field_for_labels_bounded, gcd, lcm,
    minpoly_two_cos, NumberField, DEFAULT_MAX_L,
};
pub use poly::{count_roots, isolate_largest_root, RationalPoly};
pub use real::AlgebraicReal;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("lcm of labels {l} exceeds the configured bound {bound}")]
    FieldTooLarge { l: u64, bound: u64 },
    #[error("cos(pi/{m}) is not in the field with L = {l}")]
    NotInField { m: u64, l: u64 },
    #[error("division by zero")]
    DivisionByZero,
}

/// Decide whether `v == cos(pi/q)` exactly, for any `q >= 1`.
///
/// When `q` divides `L` this is a direct comparison. Otherwise `2v` must be a
/// root of the minimal polynomial of `2cos(pi/q)`, and then it has to be the
/// largest root, which is settled by separating enclosures.
pub fn equals_cos_pi_over(v: &AlgebraicReal, q: u64) -> bool {
    let field = v.field();
    if field.l() % q == 0 {
        return *v == embed_cos(q, field).unwrap();
    }
    let p = minpoly_two_cos(2 * q);
    let two_v = v.mul_int(2);
    // Horner evaluation of p at 2v inside the field.
    let mut acc = AlgebraicReal::zero(field);
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * &two_v) + &AlgebraicReal::from_rational(c, field);
    }
    if !acc.is_zero() {
        return false;
    }
    let (lo, hi) = isolate_largest_root(&p);
    if lo == hi {
        return two_v.as_rational().is_some_and(|r| r == lo);
    }
    let lo = AlgebraicReal::from_rational(&lo, field);
    let hi = AlgebraicReal::from_rational(&hi, field);
    // 2v is a root of p; the isolating interval holds exactly the largest one.
    two_v.cmp_value(&lo).is_gt() && two_v.cmp_value(&hi).is_le()
}
