use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use dashu_base::Gcd;
use dashu_int::IBig;
use dashu_ratio::RBig;

use super::field::NumberField;
use super::poly::{sign_of, RationalPoly};
use super::AlgebraError;

/// An element of a [`NumberField`], stored as an integer polynomial in the
/// primitive element over a common positive denominator, in lowest terms.
#[derive(Clone)]
pub struct AlgebraicReal {
    num: Vec<IBig>,
    den: IBig,
    field: Arc<NumberField>,
}

impl AlgebraicReal {
    pub fn zero(field: &Arc<NumberField>) -> Self {
        AlgebraicReal {
            num: vec![IBig::ZERO; field.degree()],
            den: IBig::ONE,
            field: field.clone(),
        }
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_int(1, field)
    }

    pub fn from_int(c: i64, field: &Arc<NumberField>) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = IBig::from(c);
        z
    }

    pub fn from_rational(c: &RBig, field: &Arc<NumberField>) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = c.numerator().clone();
        z.den = IBig::from(c.denominator().clone());
        z
    }

    /// The primitive element `2cos(pi/L)`.
    pub fn primitive(field: &Arc<NumberField>) -> Self {
        if field.degree() == 1 {
            // theta is rational: the root of the linear modulus
            let m = field.modulus();
            let r = -(m.coeff(0) / m.coeff(1));
            return Self::from_rational(&r, field);
        }
        let mut z = Self::zero(field);
        z.num[1] = IBig::ONE;
        z
    }

    pub fn from_poly(p: &RationalPoly, field: &Arc<NumberField>) -> Self {
        let p = p.rem(field.modulus());
        let mut den = IBig::ONE;
        for c in p.coeffs() {
            let d = IBig::from(c.denominator().clone());
            let g = IBig::from((&den).gcd(&d));
            den = &den / &g * d;
        }
        let mut num = vec![IBig::ZERO; field.degree()];
        for (i, c) in p.coeffs().iter().enumerate() {
            let d = IBig::from(c.denominator().clone());
            num[i] = c.numerator() * (&den / &d);
        }
        let mut z = AlgebraicReal {
            num,
            den,
            field: field.clone(),
        };
        z.normalize();
        z
    }

    pub fn to_poly(&self) -> RationalPoly {
        let d = RBig::from(self.den.clone());
        RationalPoly::new(
            self.num
                .iter()
                .map(|c| RBig::from(c.clone()) / &d)
                .collect(),
        )
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| *c == IBig::ZERO)
    }

    pub fn is_one(&self) -> bool {
        self.den == IBig::ONE
            && self.num[0] == IBig::ONE
            && self.num[1..].iter().all(|c| *c == IBig::ZERO)
    }

    /// True when the value is rational; returns it.
    pub fn as_rational(&self) -> Option<RBig> {
        if self.num[1..].iter().all(|c| *c == IBig::ZERO) {
            Some(RBig::from(self.num[0].clone()) / RBig::from(self.den.clone()))
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.den == IBig::ONE {
            return;
        }
        if self.is_zero() {
            self.den = IBig::ONE;
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if *c != IBig::ZERO {
                g = IBig::from((&g).gcd(c));
                if g == IBig::ONE {
                    return;
                }
            }
        }
        for c in self.num.iter_mut() {
            *c = &*c / &g;
        }
        self.den = &self.den / &g;
    }

    fn same_field(&self, other: &Self) {
        debug_assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.l() == other.field.l(),
            "elements of different fields"
        );
    }

    pub fn mul_int(&self, c: i64) -> Self {
        let c = IBig::from(c);
        let mut z = AlgebraicReal {
            num: self.num.iter().map(|a| a * &c).collect(),
            den: self.den.clone(),
            field: self.field.clone(),
        };
        z.normalize();
        z
    }

    pub fn half(&self) -> Self {
        let mut z = AlgebraicReal {
            num: self.num.clone(),
            den: &self.den * IBig::from(2),
            field: self.field.clone(),
        };
        z.normalize();
        z
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (g, s, _) = self.to_poly().ext_gcd(self.field.modulus());
        debug_assert_eq!(g.degree(), Some(0));
        Ok(Self::from_poly(&s, &self.field))
    }

    /// Exact sign, refining the enclosure of the primitive element as needed.
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if let Some(q) = self.as_rational() {
            return sign_of(&q);
        }
        let p = RationalPoly::from_ibigs(&self.num);
        loop {
            let (lo, hi) = self.field.primitive_interval();
            if lo == hi {
                return p.sign_at(&lo);
            }
            let (a, b) = p.eval_interval(&lo, &hi);
            if a > RBig::ZERO {
                return 1;
            }
            if b < RBig::ZERO {
                return -1;
            }
            self.field.refine(8);
        }
    }

    /// A rational interval containing the value.
    pub fn enclosure(&self) -> (RBig, RBig) {
        let d = RBig::from(self.den.clone());
        let p = RationalPoly::from_ibigs(&self.num);
        let (lo, hi) = self.field.primitive_interval();
        let (a, b) = p.eval_interval(&lo, &hi);
        (a / &d, b / &d)
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    /// Floating-point approximation, for display and sanity checks only.
    pub fn to_f64(&self) -> f64 {
        let theta = self.field.theta_f64();
        let mut acc = 0.0;
        for c in self.num.iter().rev() {
            acc = acc * theta + ibig_to_f64(c);
        }
        acc / ibig_to_f64(&self.den)
    }

    /// Numerators over the common denominator, in the power basis.
    pub fn numerators(&self) -> &[IBig] {
        &self.num
    }

    pub fn denominator(&self) -> &IBig {
        &self.den
    }
}

fn ibig_to_f64(x: &IBig) -> f64 {
    x.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.den == other.den && self.num == other.num
    }
}

impl Eq for AlgebraicReal {}

impl Hash for AlgebraicReal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl<'a> Add<&'a AlgebraicReal> for &'a AlgebraicReal {
    type Output = AlgebraicReal;
    fn add(self, rhs: &AlgebraicReal) -> AlgebraicReal {
        self.same_field(rhs);
        if self.den == rhs.den {
            let mut z = AlgebraicReal {
                num: self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect(),
                den: self.den.clone(),
                field: self.field.clone(),
            };
            z.normalize();
            return z;
        }
        let mut z = AlgebraicReal {
            num: self
                .num
                .iter()
                .zip(&rhs.num)
                .map(|(a, b)| a * &rhs.den + b * &self.den)
                .collect(),
            den: &self.den * &rhs.den,
            field: self.field.clone(),
        };
        z.normalize();
        z
    }
}

impl<'a> Sub<&'a AlgebraicReal> for &'a AlgebraicReal {
    type Output = AlgebraicReal;
    fn sub(self, rhs: &AlgebraicReal) -> AlgebraicReal {
        self + &(-rhs.clone())
    }
}

impl Neg for AlgebraicReal {
    type Output = AlgebraicReal;
    fn neg(mut self) -> AlgebraicReal {
        for c in self.num.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Mul<&'a AlgebraicReal> for &'a AlgebraicReal {
    type Output = AlgebraicReal;
    fn mul(self, rhs: &AlgebraicReal) -> AlgebraicReal {
        self.same_field(rhs);
        let d = self.num.len();
        let mut prod = vec![IBig::ZERO; 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if *a == IBig::ZERO {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if *b != IBig::ZERO {
                    prod[i + j] += a * b;
                }
            }
        }
        reduce_monic(&mut prod, self.field.modulus_int());
        prod.truncate(d);
        let mut z = AlgebraicReal {
            num: prod,
            den: &self.den * &rhs.den,
            field: self.field.clone(),
        };
        z.normalize();
        z
    }
}

/// Reduce in place modulo a monic integer polynomial of degree `d`; the low `d`
/// entries hold the remainder afterwards.
fn reduce_monic(p: &mut [IBig], m: &[IBig]) {
    let d = m.len() - 1;
    for k in (d..p.len()).rev() {
        if p[k] == IBig::ZERO {
            continue;
        }
        let c = std::mem::take(&mut p[k]);
        for (j, mj) in m[..d].iter().enumerate() {
            if *mj != IBig::ZERO {
                p[k - d + j] -= &c * mj;
            }
        }
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for AlgebraicReal {
    /// Printed as a polynomial in `θ = 2cos(π/L)`, with an approximation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        let s = p.to_string().replace('x', "θ");
        write!(f, "{s} (≈{:.6})", self.to_f64())
    }
}
