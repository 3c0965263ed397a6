use crate::algebra::AlgebraicReal;

use super::group::{eval, matrix_order, GroupElement, Order};
use super::linalg::{neg_vector, Mat};
use super::matrix::{CoxeterMatrix, Label};
use super::system::CoxeterSystem;
use super::word::Word;
use super::CoxError;

/// A root `w(e_r)`, normalized to the positive cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub coords: Vec<AlgebraicReal>,
    pub positive: bool,
}

impl Root {
    /// Canonicalize a vector of the form `w(e_r)`: every root is either
    /// nonnegative or nonpositive in all coordinates.
    pub fn canonical(coords: Vec<AlgebraicReal>) -> Root {
        let signs: Vec<i32> = coords.iter().map(|c| c.sign()).collect();
        let pos = signs.iter().all(|&s| s >= 0);
        let neg = signs.iter().all(|&s| s <= 0);
        assert!(
            pos ^ neg,
            "vector is not a root: coordinates of mixed sign or zero"
        );
        if pos {
            Root {
                coords,
                positive: true,
            }
        } else {
            Root {
                coords: neg_vector(&coords),
                positive: true,
            }
        }
    }
}

/// A reflection together with its positive root and a defining conjugate word.
#[derive(Clone, Debug)]
pub struct ReflectionRecord {
    pub element: GroupElement,
    pub root: Root,
    pub conjugator: Word,
    pub base: usize,
}

impl PartialEq for ReflectionRecord {
    fn eq(&self, other: &Self) -> bool {
        self.element == other.element
    }
}

/// The reflection `w r w^-1` with its root `w(e_r)`.
pub fn reflection_from_conjugate(w: &Word, r: usize, sys: &CoxeterSystem) -> ReflectionRecord {
    let w = w.conjugator_for(r);
    let wm = eval(&w, sys);
    let element = eval(&w.conjugate_of(r), sys);
    let root = Root::canonical(wm.matrix.column(r));
    ReflectionRecord {
        element,
        root,
        conjugator: w,
        base: r,
    }
}

/// `rho_alpha(x) = x - 2 b(x, alpha) alpha` as a matrix.
pub fn reflection_matrix(root: &[AlgebraicReal], sys: &CoxeterSystem) -> Mat {
    let n = sys.rank();
    let ga = sys.gram().apply(root); // ga[j] = b(e_j, alpha)
    let mut m = sys.identity();
    for i in 0..n {
        if root[i].is_zero() {
            continue;
        }
        let two_ai = root[i].mul_int(2);
        for (j, gj) in ga.iter().enumerate() {
            if gj.is_zero() {
                continue;
            }
            let v = m.get(i, j) - &(&two_ai * gj);
            m.set(i, j, v);
        }
    }
    m
}

/// Label of a pair of reflections given by their roots: infinity is certified
/// by `|b| >= 1`, otherwise the order of the product is computed.
pub fn pair_label(
    a: &Mat,
    alpha: &[AlgebraicReal],
    b: &Mat,
    beta: &[AlgebraicReal],
    sys: &CoxeterSystem,
    cap: u64,
) -> Result<Label, CoxError> {
    let bv = sys.pairing(alpha, beta);
    let one = AlgebraicReal::one(sys.field());
    if bv.abs().cmp_value(&one).is_ge() {
        return Ok(Label::Infinite);
    }
    match matrix_order(&a.mul(b), cap) {
        Order::Finite(k) => Ok(Label::Finite(k)),
        Order::Unbounded(cap) => Err(CoxError::CapTooSmall { cap }),
    }
}

/// Coxeter matrix of a family of reflections, named `names`.
pub fn coxeter_matrix_of(
    refl: &[ReflectionRecord],
    names: Vec<String>,
    sys: &CoxeterSystem,
    cap: u64,
) -> Result<CoxeterMatrix, CoxError> {
    let n = refl.len();
    let mut m = vec![vec![Label::Finite(1); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let l = pair_label(
                &refl[i].element.matrix,
                &refl[i].root.coords,
                &refl[j].element.matrix,
                &refl[j].root.coords,
                sys,
                cap,
            )?;
            if l == Label::Finite(1) {
                return Err(CoxError::InvalidMatrix(format!(
                    "reflections {i} and {j} coincide"
                )));
            }
            m[i][j] = l;
            m[j][i] = l;
        }
    }
    CoxeterMatrix::new(names, m)
}

/// Minimal conjugate form of the reflection with positive root `alpha`:
/// `(w, r)` with `alpha = w(e_r)` and `|w|` the depth of `alpha` minus one.
pub fn shortest_conjugate(alpha: &[AlgebraicReal], sys: &CoxeterSystem) -> (Word, usize) {
    let mut a = alpha.to_vec();
    let mut w = Vec::new();
    loop {
        let support: Vec<usize> = (0..a.len()).filter(|&i| !a[i].is_zero()).collect();
        if let [r] = support[..] {
            return (Word(w), r);
        }
        // a positive non-simple root has positive pairing with some simple root
        let ga = sys.gram().apply(&a);
        let s = (0..a.len())
            .find(|&s| ga[s].sign() > 0)
            .expect("a positive non-simple root descends");
        a[s] = &a[s] - &ga[s].mul_int(2);
        w.push(s);
    }
}
