use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::algebra::{AlgebraicReal, NumberField};

/// Dense square matrix over a number field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    n: usize,
    a: Vec<AlgebraicReal>,
}

impl Hash for Mat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for x in &self.a {
            x.hash(state);
        }
    }
}

impl Mat {
    pub fn identity(n: usize, field: &Arc<NumberField>) -> Self {
        let mut a = vec![AlgebraicReal::zero(field); n * n];
        for i in 0..n {
            a[i * n + i] = AlgebraicReal::one(field);
        }
        Mat { n, a }
    }

    pub fn from_rows(rows: Vec<Vec<AlgebraicReal>>) -> Self {
        let n = rows.len();
        let a: Vec<AlgebraicReal> = rows.into_iter().flatten().collect();
        assert_eq!(a.len(), n * n, "matrix must be square");
        Mat { n, a }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgebraicReal {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: AlgebraicReal) {
        self.a[i * self.n + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<AlgebraicReal> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut a = self.a.clone();
        for i in 0..n {
            for j in 0..n {
                a[j * n + i] = self.a[i * n + j].clone();
            }
        }
        Mat { n, a }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let x = self.get(i, j);
                if i == j {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
        })
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        let n = self.n;
        assert_eq!(n, rhs.n);
        let field = self.a[0].field().clone();
        let mut out = vec![AlgebraicReal::zero(&field); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = &self.a[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = &rhs.a[k * n + j];
                    if y.is_zero() {
                        continue;
                    }
                    out[i * n + j] = &out[i * n + j] + &(x * y);
                }
            }
        }
        Mat { n, a: out }
    }

    pub fn apply(&self, v: &[AlgebraicReal]) -> Vec<AlgebraicReal> {
        let n = self.n;
        let field = self.a[0].field().clone();
        (0..n)
            .map(|i| {
                let mut acc = AlgebraicReal::zero(&field);
                for (k, vk) in v.iter().enumerate() {
                    let x = &self.a[i * n + k];
                    if !x.is_zero() && !vk.is_zero() {
                        acc = &acc + &(x * vk);
                    }
                }
                acc
            })
            .collect()
    }

    /// Bilinear form `u^T self v`.
    pub fn form(&self, u: &[AlgebraicReal], v: &[AlgebraicReal]) -> AlgebraicReal {
        let mv = self.apply(v);
        let field = self.a[0].field().clone();
        let mut acc = AlgebraicReal::zero(&field);
        for (x, y) in u.iter().zip(&mv) {
            if !x.is_zero() && !y.is_zero() {
                acc = &acc + &(x * y);
            }
        }
        acc
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| format!("{:.4}", self.get(i, j).to_f64()))
                .collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn unit_vector(n: usize, i: usize, field: &Arc<NumberField>) -> Vec<AlgebraicReal> {
    let mut v = vec![AlgebraicReal::zero(field); n];
    v[i] = AlgebraicReal::one(field);
    v
}

pub fn neg_vector(v: &[AlgebraicReal]) -> Vec<AlgebraicReal> {
    v.iter().map(|x| -x.clone()).collect()
}
