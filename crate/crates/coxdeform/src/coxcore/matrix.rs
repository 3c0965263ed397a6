use std::collections::BTreeSet;
use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CoxError;

/// Entry of a Coxeter matrix: a finite order or infinity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Label {
    Finite(u64),
    Infinite,
}

impl Label {
    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }

    /// Label `>= 3`, i.e. an edge of the Coxeter diagram.
    pub fn is_diagram_edge(self) -> bool {
        !matches!(self, Label::Finite(1) | Label::Finite(2))
    }

    pub fn is(self, m: u64) -> bool {
        self == Label::Finite(m)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Label::Finite(m) => s.serialize_u64(*m),
            Label::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Label;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a positive integer or \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Label, E> {
                if v == 0 {
                    return Err(E::custom("label 0 is not allowed"));
                }
                Ok(Label::Finite(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Label, E> {
                if v <= 0 {
                    return Err(E::custom(format!("label {v} is not allowed")));
                }
                Ok(Label::Finite(v as u64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Label, E> {
                match v {
                    "inf" | "∞" | "infinity" => Ok(Label::Infinite),
                    _ => Err(E::custom(format!("unknown label {v:?}"))),
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// A Coxeter matrix with named generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterMatrix {
    names: Vec<String>,
    m: Vec<Vec<Label>>,
}

impl CoxeterMatrix {
    pub fn new(names: Vec<String>, m: Vec<Vec<Label>>) -> Result<Self, CoxError> {
        let n = names.len();
        let bad = |msg: String| Err(CoxError::InvalidMatrix(msg));
        if m.len() != n {
            return bad(format!("{} rows for {} generators", m.len(), n));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return bad("generator names are not distinct".into());
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {i} has {} entries, expected {n}", row.len()));
            }
            for (j, &l) in row.iter().enumerate() {
                if i == j && l != Label::Finite(1) {
                    return bad(format!("diagonal entry {i} must be 1"));
                }
                if i != j && l == Label::Finite(1) {
                    return bad(format!("off-diagonal entry ({i},{j}) must be at least 2"));
                }
                if m[j][i] != l {
                    return bad(format!("matrix is not symmetric at ({i},{j})"));
                }
            }
        }
        Ok(CoxeterMatrix { names, m })
    }

    /// Build from a list of off-diagonal labels; unlisted pairs get `default`.
    pub fn from_edges(names: &[&str], edges: &[(usize, usize, Label)], default: Label) -> Self {
        let n = names.len();
        let mut m = vec![vec![default; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Label::Finite(1);
        }
        for &(i, j, l) in edges {
            m[i][j] = l;
            m[j][i] = l;
        }
        Self::new(names.iter().map(|s| s.to_string()).collect(), m).expect("well-formed edge list")
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.m[i][j]
    }

    pub fn rows(&self) -> &[Vec<Label>] {
        &self.m
    }

    /// Finite off-diagonal labels that occur.
    pub fn finite_labels(&self) -> Vec<u64> {
        let mut set = BTreeSet::new();
        for (i, row) in self.m.iter().enumerate() {
            for (j, l) in row.iter().enumerate() {
                if i != j {
                    if let Label::Finite(m) = l {
                        set.insert(*m);
                    }
                }
            }
        }
        set.into_iter().collect()
    }
}

/// Standard small examples.
pub mod examples {
    use super::{CoxeterMatrix, Label};

    pub fn dihedral(m: u64) -> CoxeterMatrix {
        CoxeterMatrix::from_edges(&["a", "b"], &[(0, 1, Label::Finite(m))], Label::Finite(2))
    }

    /// `r -5- s -3- t`.
    pub fn h3() -> CoxeterMatrix {
        CoxeterMatrix::from_edges(
            &["r", "s", "t"],
            &[(0, 1, Label::Finite(5)), (1, 2, Label::Finite(3))],
            Label::Finite(2),
        )
    }

    /// `r -5- s -3- t -3- u`.
    pub fn h4() -> CoxeterMatrix {
        CoxeterMatrix::from_edges(
            &["r", "s", "t", "u"],
            &[
                (0, 1, Label::Finite(5)),
                (1, 2, Label::Finite(3)),
                (2, 3, Label::Finite(3)),
            ],
            Label::Finite(2),
        )
    }
}
