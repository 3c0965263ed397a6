use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use crate::coxcore::{CoxeterMatrix, Label};

/// A vertex set, one bit per vertex of the ambient diagram.
pub type VSet = u64;

pub const MAX_RANK: usize = 64;

pub fn bit(i: usize) -> VSet {
    1u64 << i
}

pub fn members(set: VSet) -> impl Iterator<Item = usize> {
    (0..MAX_RANK).filter(move |&i| set & bit(i) != 0)
}

pub fn set_of(items: &[usize]) -> VSet {
    items.iter().fold(0, |acc, &i| acc | bit(i))
}

pub fn size(set: VSet) -> usize {
    set.count_ones() as usize
}

/// The labelled graph `Gamma(S)` restricted to an active vertex set. Labels are
/// shared between restrictions, so restricting is cheap.
#[derive(Clone, Debug)]
pub struct Diagram {
    names: Arc<Vec<String>>,
    labels: Arc<Vec<Vec<Label>>>,
    active: VSet,
    pub(crate) spherical_cache: Arc<Mutex<HashMap<VSet, bool>>>,
}

impl Diagram {
    pub fn new(names: Vec<String>, labels: Vec<Vec<Label>>) -> Self {
        let n = names.len();
        assert!(n <= MAX_RANK, "at most {MAX_RANK} vertices");
        Diagram {
            names: Arc::new(names),
            labels: Arc::new(labels),
            active: if n == MAX_RANK { !0 } else { bit(n) - 1 },
            spherical_cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn from_matrix(m: &CoxeterMatrix) -> Self {
        Self::new(m.names().to_vec(), m.rows().to_vec())
    }

    /// The same labels on the vertices of `set` only.
    pub fn restrict(&self, set: VSet) -> Diagram {
        Diagram {
            names: self.names.clone(),
            labels: self.labels.clone(),
            active: self.active & set,
            spherical_cache: self.spherical_cache.clone(),
        }
    }

    pub fn active(&self) -> VSet {
        self.active
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        members(self.active)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.active & bit(v) != 0
    }

    /// Number of vertices of the ambient diagram.
    pub fn ambient_rank(&self) -> usize {
        self.names.len()
    }

    pub fn rank(&self) -> usize {
        size(self.active)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn label(&self, a: usize, b: usize) -> Label {
        self.labels[a][b]
    }

    pub fn finite(&self, a: usize, b: usize) -> bool {
        self.labels[a][b].is_finite()
    }

    pub fn infinite(&self, a: usize, b: usize) -> bool {
        !self.finite(a, b)
    }

    /// Edge of `Gamma(S)`: distinct vertices with a finite label.
    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.finite(a, b)
    }

    /// Edge of the Coxeter diagram: label at least 3.
    pub fn is_diagram_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.labels[a][b].is_diagram_edge()
    }

    /// Active vertices joined to `v` by a finite label.
    pub fn neighbours(&self, v: usize) -> VSet {
        self.vertices()
            .filter(|&x| self.is_edge(v, x))
            .fold(0, |acc, x| acc | bit(x))
    }

    /// All edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let vs: Vec<usize> = self.vertices().collect();
        let mut out = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if self.is_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn set_names(&self, set: VSet) -> Vec<String> {
        members(set).map(|v| self.names[v].clone()).collect()
    }

    pub fn to_matrix(&self) -> CoxeterMatrix {
        let vs: Vec<usize> = self.vertices().collect();
        let m = vs
            .iter()
            .map(|&a| vs.iter().map(|&b| self.label(a, b)).collect())
            .collect();
        CoxeterMatrix::new(vs.iter().map(|&v| self.names[v].clone()).collect(), m)
            .expect("restriction of a valid matrix")
    }
}

/// `(J^perp, J^fin, J^inf)` inside the active set.
pub fn perp_fin_inf(d: &Diagram, j: VSet) -> (VSet, VSet, VSet) {
    let mut perp = 0;
    let mut fin = 0;
    let mut inf = 0;
    for x in d.vertices() {
        if j & bit(x) != 0 {
            continue;
        }
        let js = members(j);
        let labels: Vec<Label> = js.map(|y| d.label(x, y)).collect();
        if labels.iter().all(|l| l.is_finite()) {
            fin |= bit(x);
            if labels.iter().all(|l| l.is(2)) {
                perp |= bit(x);
            }
        } else {
            inf |= bit(x);
        }
    }
    (perp, fin, inf)
}

/// Vertices commuting with every element of `k`, outside `k`.
pub fn perp(d: &Diagram, k: VSet) -> VSet {
    perp_fin_inf(d, k).0
}

/// Connected components of a vertex set under finite labels.
pub fn components_of(d: &Diagram, set: VSet) -> Vec<VSet> {
    let mut left = set & d.active();
    let mut out = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= d.neighbours(v) & left & !comp;
            }
            comp |= next;
            frontier = next;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

/// The `J`-components: components of `J^inf` under finite labels.
pub fn j_components(d: &Diagram, j: VSet) -> Vec<VSet> {
    let (_, _, inf) = perp_fin_inf(d, j);
    components_of(d, inf)
}

/// Elements of `J` with infinite label to every vertex of `comp`.
pub fn free_elements(d: &Diagram, j: VSet, comp: VSet) -> VSet {
    members(j)
        .filter(|&a| members(comp).all(|x| d.infinite(a, x)))
        .fold(0, |acc, a| acc | bit(a))
}

/// Every `J`-component has an `L`-free element of `J`.
pub fn is_flexible_set(d: &Diagram, j: VSet) -> bool {
    j_components(d, j)
        .into_iter()
        .all(|l| free_elements(d, j, l) != 0)
}

/// Shortest path from `a` to `b` with all vertices in `within`.
pub fn shortest_path(d: &Diagram, a: usize, b: usize, within: VSet) -> Option<Vec<usize>> {
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::from([a]);
    let mut seen = bit(a);
    while let Some(v) = queue.pop_front() {
        if v == b {
            let mut path = vec![b];
            let mut cur = b;
            while cur != a {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for x in members(d.neighbours(v) & within & !seen) {
            seen |= bit(x);
            prev.insert(x, v);
            queue.push_back(x);
        }
    }
    None
}

/// Result of the flexibility test for an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flexibility {
    pub flexible: bool,
    /// A chordfree circuit `r, x_m, ..., x_M, s` when not flexible.
    pub witness: Option<Vec<usize>>,
}

/// Flexibility of the edge `{r, s}`; when it fails, the circuit is cut out
/// of a shortest path inside the offending component.
pub fn is_flexible(d: &Diagram, r: usize, s: usize) -> Flexibility {
    let j = bit(r) | bit(s);
    for l in j_components(d, j) {
        if free_elements(d, j, l) != 0 {
            continue;
        }
        let x = members(l)
            .find(|&v| d.finite(v, r))
            .expect("r is not L-free");
        let y = members(l)
            .find(|&v| d.finite(v, s))
            .expect("s is not L-free");
        let path = shortest_path(d, x, y, l).expect("component is connected");
        let big_m = (1..path.len())
            .find(|&i| d.finite(path[i], s))
            .expect("the last vertex meets s");
        let small_m = (0..big_m)
            .rev()
            .find(|&i| d.finite(path[i], r))
            .expect("the first vertex meets r");
        let mut circuit = vec![r];
        circuit.extend_from_slice(&path[small_m..=big_m]);
        circuit.push(s);
        return Flexibility {
            flexible: false,
            witness: Some(circuit),
        };
    }
    Flexibility {
        flexible: true,
        witness: None,
    }
}

/// Exhaustive search for a chordfree circuit of length at least 4 through the
/// edge `{r, s}`, by depth-first extension of induced paths from `r` to `s`.
pub fn chordfree_circuit_through(d: &Diagram, r: usize, s: usize) -> Option<Vec<usize>> {
    if !d.is_edge(r, s) {
        return None;
    }
    let nr = d.neighbours(r);
    let ns = d.neighbours(s);
    let mut path = Vec::new();
    for v in members(nr & !ns & !bit(s)) {
        path.push(v);
        if extend_induced(d, r, s, nr, ns, &mut path) {
            let mut c = vec![r];
            c.extend_from_slice(&path);
            c.push(s);
            return Some(c);
        }
        path.pop();
    }
    None
}

fn extend_induced(
    d: &Diagram,
    r: usize,
    s: usize,
    nr: VSet,
    ns: VSet,
    path: &mut Vec<usize>,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() >= 2 && ns & bit(last) != 0 {
        return true;
    }
    let on_path = set_of(path);
    let earlier = set_of(&path[..path.len() - 1]);
    for x in members(d.neighbours(last) & !on_path & !bit(r) & !bit(s)) {
        // no chord back to earlier path vertices or to r
        if d.neighbours(x) & earlier != 0 || nr & bit(x) != 0 {
            continue;
        }
        path.push(x);
        if extend_induced(d, r, s, nr, ns, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Check that a vertex sequence is a chordfree circuit of `Gamma`.
pub fn is_chordfree_circuit(d: &Diagram, c: &[usize]) -> bool {
    let n = c.len();
    if n < 3 || size(set_of(c)) != n {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let consecutive = j == i + 1 || (i == 0 && j == n - 1);
            if d.is_edge(c[i], c[j]) != consecutive {
                return false;
            }
        }
    }
    true
}
