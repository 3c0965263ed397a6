use std::collections::HashMap;

use serde::Serialize;

use crate::coxcore::{enumerate_group, pair_label, GroupElement, Label, Mat};
use crate::roots::is_sharp_angled_pair;

use super::instance::ProblemInstance;
use super::PipelineError;

#[derive(Clone, Debug, Serialize)]
pub struct PairVerdict {
    pub pair: [String; 2],
    pub order: u64,
    pub root_sharp: bool,
    pub brute_sharp: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub group_order: usize,
    pub reflections: usize,
    pub pairs: Vec<PairVerdict>,
    pub agree: bool,
}

/// A finite group with lengths and the left inversion sets of its
/// reflections.
struct Enumerated {
    mats: Vec<Mat>,
    index: HashMap<Mat, usize>,
    inverse: Vec<usize>,
    refl: Vec<usize>,
    n_set: HashMap<usize, Vec<usize>>,
}

impl Enumerated {
    fn new(elems: &[GroupElement], inst: &ProblemInstance) -> Self {
        let sys = &inst.sys;
        let mats: Vec<Mat> = elems.iter().map(|g| g.matrix.clone()).collect();
        let index: HashMap<Mat, usize> = mats
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let len: Vec<usize> = elems
            .iter()
            .map(|g| g.word.as_ref().map_or(0, |w| w.len()))
            .collect();
        let inverse = elems
            .iter()
            .map(|g| index[&sys.word_matrix(&g.word.clone().unwrap_or_default().inverse())])
            .collect::<Vec<_>>();
        let mut refl = Vec::new();
        for (i, g) in mats.iter().enumerate() {
            for r in 0..sys.rank() {
                let t = index[&g.mul(sys.generator(r)).mul(&mats[inverse[i]])];
                if !refl.contains(&t) {
                    refl.push(t);
                }
            }
        }
        let mut n_set = HashMap::new();
        for &t in &refl {
            let below: Vec<usize> = refl
                .iter()
                .copied()
                .filter(|&r| len[index[&mats[r].mul(&mats[t])]] < len[t])
                .collect();
            n_set.insert(t, below);
        }
        Enumerated {
            mats,
            index,
            inverse,
            refl,
            n_set,
        }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.mats[a].mul(&self.mats[b])]
    }

    fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut sub = vec![0];
        let mut seen: std::collections::HashSet<usize> = sub.iter().copied().collect();
        let mut head = 0;
        while head < sub.len() {
            let g = sub[head];
            head += 1;
            for &h in gens {
                let k = self.mul(g, h);
                if seen.insert(k) {
                    sub.push(k);
                }
            }
        }
        sub
    }

    /// `{x, y}` is conjugate inside `<x, y>` to the canonical generators
    /// of `<x, y>`.
    fn sharp(&self, x: usize, y: usize) -> bool {
        let sub = self.subgroup(&[x, y]);
        let in_sub: std::collections::HashSet<usize> = sub.iter().copied().collect();
        let chi: Vec<usize> = self
            .refl
            .iter()
            .copied()
            .filter(|t| in_sub.contains(t))
            .filter(|t| self.n_set[t].iter().all(|r| r == t || !in_sub.contains(r)))
            .collect();
        sub.iter().any(|&g| {
            let a = self.mul(self.mul(g, x), self.inverse[g]);
            let b = self.mul(self.mul(g, y), self.inverse[g]);
            chi.len() == 2 && ((a == chi[0] && b == chi[1]) || (a == chi[1] && b == chi[0]))
        })
    }
}

/// Brute-force sharpness of the given pairs of `S`, by full enumeration.
pub fn canonical_sharp_pairs(
    inst: &ProblemInstance,
    pairs: &[(usize, usize)],
) -> Result<Vec<bool>, PipelineError> {
    let elems = enumerate_group(&inst.sys, inst.caps.group_cap)?;
    let e = Enumerated::new(&elems, inst);
    Ok(pairs
        .iter()
        .map(|&(a, b)| {
            let x = e.index[&inst.refl[a].element.matrix];
            let y = e.index[&inst.refl[b].element.matrix];
            e.sharp(x, y)
        })
        .collect())
}

/// Enumerate `W`, and compare the root-based sharpness of every pair of `S`
/// with the brute-force verdict.
pub fn oracle(inst: &ProblemInstance) -> Result<OracleReport, PipelineError> {
    let elems = enumerate_group(&inst.sys, inst.caps.group_cap)?;
    let e = Enumerated::new(&elems, inst);
    let labels = inst.labels();
    let mut pairs = Vec::new();
    for a in 0..inst.refl.len() {
        for b in a + 1..inst.refl.len() {
            let (x, y) = (&inst.refl[a], &inst.refl[b]);
            let l = pair_label(
                &x.element.matrix,
                &x.root.coords,
                &y.element.matrix,
                &y.root.coords,
                &inst.sys,
                inst.caps.order_cap,
            )?;
            let Label::Finite(order) = l else { continue };
            let root_sharp = is_sharp_angled_pair(x, y, &inst.sys, inst.caps.order_cap)?.sharp;
            let brute_sharp = e.sharp(e.index[&x.element.matrix], e.index[&y.element.matrix]);
            pairs.push(PairVerdict {
                pair: [labels[a].clone(), labels[b].clone()],
                order,
                root_sharp,
                brute_sharp,
            });
        }
    }
    Ok(OracleReport {
        group_order: elems.len(),
        reflections: e.refl.len(),
        agree: pairs.iter().all(|p| p.root_sharp == p.brute_sharp),
        pairs,
    })
}
