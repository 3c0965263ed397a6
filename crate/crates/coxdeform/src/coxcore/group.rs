use std::collections::HashMap;

use super::linalg::Mat;
use super::system::CoxeterSystem;
use super::word::Word;
use super::CoxError;

pub const DEFAULT_ORDER_CAP: u64 = 1000;

/// An element of `W` in the geometric representation, with a word for it when
/// one is known. Equality is matrix equality.
#[derive(Clone, Debug)]
pub struct GroupElement {
    pub matrix: Mat,
    pub word: Option<Word>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl GroupElement {
    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Inverse, through the reversed word.
    pub fn inverse(&self, sys: &CoxeterSystem) -> Option<GroupElement> {
        self.word.as_ref().map(|w| eval(&w.inverse(), sys))
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(Word([a.letters(), b.letters()].concat())),
            _ => None,
        };
        GroupElement {
            matrix: self.matrix.mul(&other.matrix),
            word,
        }
    }
}

pub fn eval(word: &Word, sys: &CoxeterSystem) -> GroupElement {
    GroupElement {
        matrix: sys.word_matrix(word),
        word: Some(word.clone()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Unbounded(u64),
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(k) => Some(k),
            Order::Unbounded(_) => None,
        }
    }
}

/// Least `k <= cap` with `m^k = 1`.
pub fn matrix_order(m: &Mat, cap: u64) -> Order {
    let mut p = m.clone();
    for k in 1..=cap {
        if p.is_identity() {
            return Order::Finite(k);
        }
        p = p.mul(m);
    }
    Order::Unbounded(cap)
}

pub fn order_with_cap(g: &GroupElement, cap: u64) -> Order {
    matrix_order(&g.matrix, cap)
}

/// Breadth-first closure of the identity under right multiplication by
/// generators. Elements come back in BFS order, each with a shortest word.
pub fn enumerate_group(sys: &CoxeterSystem, cap: usize) -> Result<Vec<GroupElement>, CoxError> {
    let gens: Vec<usize> = (0..sys.rank()).collect();
    enumerate_with(sys.identity(), cap, &gens, |m, r| {
        sys.right_mul_generator(m, r)
    })
}

/// Closure under a set of generator matrices, given by a multiplication
/// callback. Shared by the full-group and subgroup enumerations.
pub fn enumerate_with(
    identity: Mat,
    cap: usize,
    gens: &[usize],
    mul: impl Fn(&Mat, usize) -> Mat,
) -> Result<Vec<GroupElement>, CoxError> {
    let mut index: HashMap<Mat, usize> = HashMap::new();
    let mut elems: Vec<GroupElement> = Vec::new();
    index.insert(identity.clone(), 0);
    elems.push(GroupElement {
        matrix: identity,
        word: Some(Word::empty()),
    });
    let mut head = 0;
    while head < elems.len() {
        let (m, w) = (
            elems[head].matrix.clone(),
            elems[head].word.clone().unwrap(),
        );
        head += 1;
        for &r in gens {
            if w.letters().last() == Some(&r) {
                continue;
            }
            let next = mul(&m, r);
            if index.contains_key(&next) {
                continue;
            }
            if elems.len() >= cap {
                return Err(CoxError::GroupTooLarge { cap });
            }
            let mut nw = w.clone();
            nw.0.push(r);
            index.insert(next.clone(), elems.len());
            elems.push(GroupElement {
                matrix: next,
                word: Some(nw),
            });
        }
    }
    Ok(elems)
}

/// Subgroup generated by arbitrary matrices; words refer to positions in `gens`.
pub fn enumerate_subgroup(
    sys: &CoxeterSystem,
    gens: &[Mat],
    cap: usize,
) -> Result<Vec<GroupElement>, CoxError> {
    let idx: Vec<usize> = (0..gens.len()).collect();
    enumerate_with(sys.identity(), cap, &idx, |m, i| m.mul(&gens[i]))
}

/// Breadth-first search for `target` in the subgroup generated by `gens`,
/// stopping as soon as it is found. Returns a word over positions in `gens`.
pub fn find_in_subgroup(
    sys: &CoxeterSystem,
    gens: &[Mat],
    target: &Mat,
    cap: usize,
) -> Option<Word> {
    let id = sys.identity();
    if &id == target {
        return Some(Word::empty());
    }
    let mut seen: HashMap<Mat, ()> = HashMap::new();
    let mut queue: Vec<(Mat, Word)> = vec![(id.clone(), Word::empty())];
    seen.insert(id, ());
    let mut head = 0;
    while head < queue.len() {
        let (m, w) = queue[head].clone();
        head += 1;
        for (i, g) in gens.iter().enumerate() {
            let next = m.mul(g);
            if seen.contains_key(&next) {
                continue;
            }
            let mut nw = w.clone();
            nw.0.push(i);
            if &next == target {
                return Some(nw);
            }
            if seen.len() >= cap {
                return None;
            }
            seen.insert(next.clone(), ());
            queue.push((next, nw));
        }
    }
    None
}
