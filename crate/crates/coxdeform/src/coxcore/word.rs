use std::fmt;

/// A word in the generators, as generator indices. All generators are
/// involutions, so the inverse of a word is its reverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: usize) -> Self {
        Word(vec![x])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v).reduced()
    }

    /// Cancel adjacent equal letters until none remain.
    pub fn reduced(&self) -> Word {
        let mut out: Vec<usize> = Vec::with_capacity(self.0.len());
        for &x in &self.0 {
            if out.last() == Some(&x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        Word(out)
    }

    /// The word `w x w^-1`.
    pub fn conjugate_of(&self, x: usize) -> Word {
        let mut v = self.0.clone();
        v.push(x);
        v.extend(self.0.iter().rev());
        Word(v)
    }

    /// Rename letters through `f`.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Word {
        Word(self.0.iter().map(|&x| f(x)).collect())
    }

    /// Conjugator normal form for `w x w^-1`: reduce `w` and strip trailing `x`s,
    /// which do not change the conjugate.
    pub fn conjugator_for(&self, x: usize) -> Word {
        let mut w = self.reduced();
        while w.0.last() == Some(&x) {
            w.0.pop();
            w = w.reduced();
        }
        w
    }

    /// If the reduced word reads `w x w^-1`, return `(w, x)`.
    pub fn split_conjugate(&self) -> Option<(Word, usize)> {
        let r = self.reduced();
        let n = r.0.len();
        if n % 2 == 0 {
            return None;
        }
        let h = n / 2;
        for i in 0..h {
            if r.0[i] != r.0[n - 1 - i] {
                return None;
            }
        }
        Some((Word(r.0[..h].to_vec()), r.0[h]))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { w: self, names }
    }

    pub fn to_names(&self, names: &[String]) -> Vec<String> {
        self.0.iter().map(|&i| names[i].clone()).collect()
    }
}

struct WordDisplay<'a> {
    w: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.w.is_empty() {
            return write!(f, "1");
        }
        let single = self.names.iter().all(|n| n.chars().count() == 1);
        let parts: Vec<&str> = self.w.0.iter().map(|&i| self.names[i].as_str()).collect();
        if single {
            write!(f, "{}", parts.concat())
        } else {
            write!(f, "{}", parts.join("."))
        }
    }
}

/// Parse a word written in single-letter role names, e.g. `"rsrt"`, through a
/// lookup from characters to generator indices.
pub fn parse_roles(s: &str, lookup: impl Fn(char) -> Option<usize>) -> Word {
    Word(
        s.chars()
            .map(|c| lookup(c).unwrap_or_else(|| panic!("unknown role letter {c:?}")))
            .collect(),
    )
}
