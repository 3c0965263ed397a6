//! Dense univariate polynomials over the rationals and the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use dashu_base::{Abs, Signed};
use dashu_int::IBig;
use dashu_ratio::RBig;

/// Polynomial with rational coefficients, stored low degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalPoly {
    coeffs: Vec<RBig>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<RBig>) -> Self {
        while coeffs.last().is_some_and(|c| *c == RBig::ZERO) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| RBig::from(c)).collect())
    }

    pub fn from_ibigs(coeffs: &[IBig]) -> Self {
        Self::new(coeffs.iter().map(|c| RBig::from(c.clone())).collect())
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: RBig) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[RBig] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RBig {
        self.coeffs.get(i).cloned().unwrap_or(RBig::ZERO)
    }

    pub fn leading(&self) -> Option<&RBig> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &RBig) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = RBig::ONE / lc;
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * RBig::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &RBig) -> RBig {
        let mut acc = RBig::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the value at `x`: -1, 0 or 1.
    pub fn sign_at(&self, x: &RBig) -> i32 {
        sign_of(&self.eval(x))
    }

    /// Euclidean division: returns `(q, r)` with `self = q * d + r`, `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc_inv = RBig::ONE / d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![RBig::ZERO; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &lc_inv;
            if c == RBig::ZERO {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &c * dj;
            }
            q[k - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(q), Self::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::constant(RBig::ONE), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(RBig::ONE));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = RBig::ONE / lc;
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone()];
        if self.degree().unwrap_or(0) == 0 {
            return seq;
        }
        seq.push(self.derivative());
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-r);
        }
        seq
    }

    /// Evaluate on a rational interval by interval Horner. The result encloses
    /// every value taken on `[lo, hi]`.
    pub fn eval_interval(&self, lo: &RBig, hi: &RBig) -> (RBig, RBig) {
        let mut acc_lo = RBig::ZERO;
        let mut acc_hi = RBig::ZERO;
        for c in self.coeffs.iter().rev() {
            let p = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
            let mut mn = p[0].clone();
            let mut mx = p[0].clone();
            for v in &p[1..] {
                if *v < mn {
                    mn = v.clone();
                }
                if *v > mx {
                    mx = v.clone();
                }
            }
            acc_lo = mn + c;
            acc_hi = mx + c;
        }
        (acc_lo, acc_hi)
    }
}

fn sign_changes(seq: &[RationalPoly], x: &RBig) -> usize {
    let mut last = 0;
    let mut count = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of a square-free polynomial in `(a, b]`.
pub fn count_roots(seq: &[RationalPoly], a: &RBig, b: &RBig) -> usize {
    sign_changes(seq, a) - sign_changes(seq, b)
}

/// Cauchy bound: every real root lies strictly inside `(-B, B)`.
pub fn root_bound(p: &RationalPoly) -> RBig {
    let lc = p.leading().expect("zero polynomial has no root bound");
    let mut m = RBig::ZERO;
    for c in &p.coeffs[..p.coeffs.len() - 1] {
        let q = (c / lc).abs();
        if q > m {
            m = q;
        }
    }
    m + RBig::ONE
}

/// An isolating interval `(lo, hi]` for the largest real root of a square-free
/// polynomial. For a rational root found exactly, `lo == hi`.
pub fn isolate_largest_root(p: &RationalPoly) -> (RBig, RBig) {
    let deg = p.degree().expect("zero polynomial");
    assert!(deg >= 1, "constant polynomial has no root");
    if deg == 1 {
        let r = -(p.coeff(0) / p.coeff(1));
        return (r.clone(), r);
    }
    let seq = p.sturm_sequence();
    let bound = root_bound(p);
    let mut lo = -bound.clone();
    let mut hi = bound;
    assert!(count_roots(&seq, &lo, &hi) >= 1, "no real root");
    // Bisect, always keeping the largest root in (lo, hi].
    while count_roots(&seq, &lo, &hi) != 1 {
        let mid = (&lo + &hi) / RBig::from(2);
        if count_roots(&seq, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // A few extra halvings so later refinement starts from a small interval.
    for _ in 0..16 {
        let mid = (&lo + &hi) / RBig::from(2);
        if p.sign_at(&mid) == 0 {
            return (mid.clone(), mid);
        }
        if count_roots(&seq, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

pub fn sign_of(x: &RBig) -> i32 {
    if *x == RBig::ZERO {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![RBig::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == RBig::ZERO {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl Neg for RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == RBig::ZERO {
                continue;
            }
            let neg = c.is_negative();
            let a = c.clone().abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a == RBig::ONE;
            match (i, unit) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

// Integer polynomials, used only while building minimal polynomials.

pub(crate) fn int_mul(a: &[IBig], b: &[IBig]) -> Vec<IBig> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![IBig::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic integer polynomial. Panics if not exact.
pub(crate) fn int_div_exact(a: &[IBig], d: &[IBig]) -> Vec<IBig> {
    let dd = d.len() - 1;
    assert!(d[dd] == IBig::ONE, "divisor must be monic");
    let mut rem = a.to_vec();
    if rem.len() <= dd {
        assert!(rem.iter().all(|c| *c == IBig::ZERO));
        return Vec::new();
    }
    let mut q = vec![IBig::ZERO; rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c == IBig::ZERO {
            continue;
        }
        for (j, dj) in d.iter().enumerate() {
            rem[k - dd + j] -= &c * dj;
        }
        q[k - dd] = c;
    }
    assert!(
        rem[..dd].iter().all(|c| *c == IBig::ZERO),
        "inexact division"
    );
    q
}
