use std::sync::Arc;

use crate::algebra::{embed_cos, embed_two_cos, field_for_labels, AlgebraicReal, NumberField};

use super::linalg::Mat;
use super::matrix::{CoxeterMatrix, Label};
use super::word::Word;
use super::CoxError;

/// A Coxeter system with its geometric representation.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    field: Arc<NumberField>,
    gram: Mat,
    gens: Vec<Mat>,
    // row r of the generator matrix for r, off-diagonal part: 2cos(pi/m), or 2 for inf
    rows: Vec<Vec<AlgebraicReal>>,
}

/// `C(m) = -cos(pi/m)`, and `-1` for infinity.
pub fn form_value(l: Label, field: &Arc<NumberField>) -> AlgebraicReal {
    match l {
        Label::Finite(m) => -embed_cos(m, field).expect("field contains every label"),
        Label::Infinite => AlgebraicReal::from_int(-1, field),
    }
}

pub fn build_system(matrix: &CoxeterMatrix) -> Result<CoxeterSystem, CoxError> {
    let field = field_for_labels(&matrix.finite_labels())?;
    build_system_in(matrix, &field)
}

/// Build over a given field, which must contain `cos(pi/m)` for every label.
pub fn build_system_in(
    matrix: &CoxeterMatrix,
    field: &Arc<NumberField>,
) -> Result<CoxeterSystem, CoxError> {
    let n = matrix.rank();
    let mut gram_rows = Vec::with_capacity(n);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut g = Vec::with_capacity(n);
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let l = matrix.label(i, j);
            if i == j {
                g.push(AlgebraicReal::one(field));
                row.push(AlgebraicReal::from_int(-1, field));
                continue;
            }
            g.push(form_value(l, field));
            row.push(match l {
                Label::Finite(m) => embed_two_cos(m, field)?,
                Label::Infinite => AlgebraicReal::from_int(2, field),
            });
        }
        gram_rows.push(g);
        rows.push(row);
    }
    let gram = Mat::from_rows(gram_rows);
    let mut gens = Vec::with_capacity(n);
    for (r, row) in rows.iter().enumerate() {
        let mut m = Mat::identity(n, field);
        for (j, v) in row.iter().enumerate() {
            m.set(r, j, v.clone());
        }
        gens.push(m);
    }
    Ok(CoxeterSystem {
        matrix: matrix.clone(),
        field: field.clone(),
        gram,
        gens,
        rows,
    })
}

impl CoxeterSystem {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn names(&self) -> &[String] {
        self.matrix.names()
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn generator(&self, r: usize) -> &Mat {
        &self.gens[r]
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(self.rank(), &self.field)
    }

    /// `b(u, v)`.
    pub fn pairing(&self, u: &[AlgebraicReal], v: &[AlgebraicReal]) -> AlgebraicReal {
        self.gram.form(u, v)
    }

    /// `rho_r * a`, touching only row `r`.
    pub fn left_mul_generator(&self, r: usize, a: &Mat) -> Mat {
        let n = self.rank();
        let mut out = a.clone();
        let row = &self.rows[r];
        for j in 0..n {
            let mut acc = -a.get(r, j).clone();
            for (k, c) in row.iter().enumerate() {
                if k == r || c.is_zero() {
                    continue;
                }
                let x = a.get(k, j);
                if !x.is_zero() {
                    acc = &acc + &(c * x);
                }
            }
            out.set(r, j, acc);
        }
        out
    }

    /// `a * rho_r`, adding multiples of column `r` to the others.
    pub fn right_mul_generator(&self, a: &Mat, r: usize) -> Mat {
        let n = self.rank();
        let mut out = a.clone();
        let row = &self.rows[r];
        for i in 0..n {
            let x = a.get(i, r);
            if x.is_zero() {
                continue;
            }
            for (j, c) in row.iter().enumerate() {
                if j == r {
                    out.set(i, r, -x.clone());
                } else if !c.is_zero() {
                    let v = a.get(i, j) + &(c * x);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix of a word: the product of generator matrices in order.
    pub fn word_matrix(&self, w: &Word) -> Mat {
        let mut m = self.identity();
        for &x in w.letters().iter().rev() {
            m = self.left_mul_generator(x, &m);
        }
        m
    }

    /// Matrix of `w x w^-1`.
    pub fn conjugate_matrix(&self, w: &Word, x: usize) -> Mat {
        self.word_matrix(&w.conjugate_of(x))
    }
}
