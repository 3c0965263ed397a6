use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use dashu_int::IBig;
use dashu_ratio::RBig;

use super::poly::{int_div_exact, int_mul, isolate_largest_root, RationalPoly};
use super::real::AlgebraicReal;
use super::AlgebraError;

/// Largest `L` accepted by [`field_for_labels`].
pub const DEFAULT_MAX_L: u64 = 1000;

/// The real field `Q(2cos(pi/L))`, presented by the minimal polynomial of its
/// primitive element `theta = 2cos(pi/L)`.
pub struct NumberField {
    l: u64,
    modulus: RationalPoly,
    // monic, integral, low degree first, length degree + 1
    modulus_int: Vec<IBig>,
    // isolating enclosure (lo, hi] of theta; lo == hi when theta is rational
    enclosure: RwLock<(RBig, RBig)>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumberField")
            .field("l", &self.l)
            .field("modulus", &self.modulus.to_string())
            .finish()
    }
}

impl NumberField {
    /// The field for a given `L >= 1`.
    pub fn new(l: u64) -> Arc<NumberField> {
        assert!(l >= 1);
        let modulus_int = minpoly_two_cos_int(2 * l);
        let modulus = RationalPoly::from_ibigs(&modulus_int);
        debug_assert!(
            modulus.gcd(&modulus.derivative()).degree() == Some(0),
            "modulus must be square-free"
        );
        let enclosure = isolate_largest_root(&modulus);
        Arc::new(NumberField {
            l,
            modulus,
            modulus_int,
            enclosure: RwLock::new(enclosure),
        })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn degree(&self) -> usize {
        self.modulus_int.len() - 1
    }

    pub fn modulus(&self) -> &RationalPoly {
        &self.modulus
    }

    pub(crate) fn modulus_int(&self) -> &[IBig] {
        &self.modulus_int
    }

    /// Current rational enclosure of the primitive element.
    pub fn primitive_interval(&self) -> (RBig, RBig) {
        self.enclosure.read().unwrap().clone()
    }

    /// Halve the enclosure of the primitive element `steps` times.
    pub fn refine(&self, steps: usize) {
        let mut guard = self.enclosure.write().unwrap();
        let (lo, hi) = guard.clone();
        if lo == hi {
            return;
        }
        let (mut lo, mut hi) = (lo, hi);
        let s_hi = self.modulus.sign_at(&hi);
        for _ in 0..steps {
            let mid = (&lo + &hi) / RBig::from(2);
            let s = self.modulus.sign_at(&mid);
            if s == 0 {
                lo = mid.clone();
                hi = mid;
                break;
            }
            if s == s_hi {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        *guard = (lo, hi);
    }

    /// Approximate value of the primitive element.
    pub fn theta_f64(&self) -> f64 {
        2.0 * (std::f64::consts::PI / self.l as f64).cos()
    }
}

/// The field generated by `cos(pi/m)` for every label `m`; `L` is their lcm.
/// With no labels at all the field is the rationals.
pub fn field_for_labels(labels: &[u64]) -> Result<Arc<NumberField>, AlgebraError> {
    field_for_labels_bounded(labels, DEFAULT_MAX_L)
}

pub fn field_for_labels_bounded(
    labels: &[u64],
    max_l: u64,
) -> Result<Arc<NumberField>, AlgebraError> {
    let mut l: u64 = 1;
    for &m in labels {
        assert!(m >= 1, "labels are positive");
        l = lcm(l, m);
        if l > max_l {
            return Err(AlgebraError::FieldTooLarge { l, bound: max_l });
        }
    }
    Ok(NumberField::new(l))
}

/// `cos(pi/m)` as an element of `field`.
pub fn embed_cos(m: u64, field: &Arc<NumberField>) -> Result<AlgebraicReal, AlgebraError> {
    Ok(embed_two_cos(m, field)?.half())
}

/// `2cos(pi/m)`, which is integral in the power basis of the primitive element.
pub fn embed_two_cos(m: u64, field: &Arc<NumberField>) -> Result<AlgebraicReal, AlgebraError> {
    if m == 0 || field.l() % m != 0 {
        return Err(AlgebraError::NotInField { m, l: field.l() });
    }
    let k = field.l() / m;
    let theta = AlgebraicReal::primitive(field);
    let two = AlgebraicReal::from_int(2, field);
    // 2cos(j x) in terms of 2cos(x): c_{j+1} = theta c_j - c_{j-1}.
    let (mut prev, mut cur) = (two.clone(), theta.clone());
    if k == 0 {
        return Ok(two);
    }
    for _ in 1..k {
        let next = &(&theta * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    debug_assert!({
        let want = 2.0 * (std::f64::consts::PI / m as f64).cos();
        (cur.to_f64() - want).abs() < 1e-9
    });
    Ok(cur)
}

/// Minimal polynomial of `2cos(2pi/n)` over the rationals.
pub fn minpoly_two_cos(n: u64) -> RationalPoly {
    RationalPoly::from_ibigs(&minpoly_two_cos_int(n))
}

pub(crate) fn minpoly_two_cos_int(n: u64) -> Vec<IBig> {
    assert!(n >= 1);
    match n {
        1 => return vec![IBig::from(-2), IBig::ONE],
        2 => return vec![IBig::from(2), IBig::ONE],
        _ => {}
    }
    let phi = cyclotomic(n, &mut HashMap::new());
    let d = (phi.len() - 1) / 2;
    // Phi_n(x) = x^d Psi(x + 1/x); x^j + x^-j is a monic polynomial c_j in y.
    let mut psi: Vec<IBig> = vec![phi[d].clone()];
    let mut c_prev: Vec<IBig> = vec![IBig::from(2)];
    let mut c_cur: Vec<IBig> = vec![IBig::ZERO, IBig::ONE];
    for j in 1..=d {
        let a = &phi[d + j];
        add_scaled(&mut psi, &c_cur, a);
        let y_c = int_mul(&[IBig::ZERO, IBig::ONE], &c_cur);
        let mut next = y_c;
        add_scaled(&mut next, &c_prev, &IBig::from(-1));
        c_prev = std::mem::replace(&mut c_cur, next);
    }
    while psi.last().is_some_and(|c| *c == IBig::ZERO) {
        psi.pop();
    }
    psi
}

fn add_scaled(acc: &mut Vec<IBig>, p: &[IBig], c: &IBig) {
    if acc.len() < p.len() {
        acc.resize(p.len(), IBig::ZERO);
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b * c;
    }
}

fn cyclotomic(n: u64, memo: &mut HashMap<u64, Vec<IBig>>) -> Vec<IBig> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut num = vec![IBig::ZERO; n as usize + 1];
    num[0] = IBig::from(-1);
    num[n as usize] = IBig::ONE;
    for d in 1..n {
        if n % d == 0 {
            let pd = cyclotomic(d, memo);
            num = int_div_exact(&num, &pd);
        }
    }
    memo.insert(n, num.clone());
    num
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
