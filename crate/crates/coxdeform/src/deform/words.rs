use serde::Serialize;

use crate::coxcore::{parse_roles, Word};

/// Concrete generator indices for the letters `r, s, t, u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Roles {
    pub r: usize,
    pub s: usize,
    pub t: Option<usize>,
    pub u: Option<usize>,
}

impl Roles {
    pub fn new(r: usize, s: usize, t: Option<usize>, u: Option<usize>) -> Self {
        Roles { r, s, t, u }
    }

    /// Spell a string over `r, s, t, u` as a word.
    pub fn word(&self, letters: &str) -> Word {
        parse_roles(letters, |c| match c {
            'r' => Some(self.r),
            's' => Some(self.s),
            't' => self.t,
            'u' => self.u,
            _ => None,
        })
    }

    pub fn swapped(&self) -> Roles {
        Roles {
            r: self.s,
            s: self.r,
            ..*self
        }
    }
}

/// Which standard deformation applies to an H3 vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoreKind {
    /// `t = inf`: the bare rank-2 map.
    Infinity,
    Ts3,
    Tr3,
    Ts4,
    Tr4,
}

impl CoreKind {
    pub fn rank(self) -> usize {
        match self {
            CoreKind::Infinity => 2,
            CoreKind::Ts3 | CoreKind::Tr3 => 3,
            CoreKind::Ts4 | CoreKind::Tr4 => 4,
        }
    }

    /// `t` meets `s` with label 3 (otherwise it meets `r`).
    pub fn on_s(self) -> bool {
        matches!(self, CoreKind::Ts3 | CoreKind::Ts4)
    }
}

pub const OMEGA_1: &str = "rsturstrsrstusrstrs";
pub const OMEGA_2: &str = "tsrsrutsrsrtsrsutsrsr";
pub const OMEGA_3: &str = "srsrutsrsrtsrsutsrsrtsr";

fn swap_rs(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            'r' => 's',
            's' => 'r',
            c => c,
        })
        .collect()
}

/// Words that only exist in rank 4.
#[derive(Clone, Debug)]
pub struct H4Words {
    pub omega1: Word,
    pub omega2: Word,
    pub omega3: Word,
    pub omega_bar1: Word,
    pub omega_bar2: Word,
    /// `rsrsr omega2` and `omega omega1 utu` from the H4 identities.
    pub omega: Word,
    pub pi: Word,
    pub tau: Word,
    pub tau_bar: Word,
}

/// All the fixed words of the H3 and H4 constructions for one set of roles.
#[derive(Clone, Debug)]
pub struct StandardWords {
    pub roles: Roles,
    pub h4: Option<H4Words>,
    pub c: Word,
    pub c_bar: Word,
}

impl StandardWords {
    pub fn new(roles: Roles) -> Self {
        let w = |s: &str| roles.word(s);
        let h4 = (roles.t.is_some() && roles.u.is_some()).then(|| {
            let omega = format!("rsrsr{OMEGA_2}");
            let pi = format!("{omega}{OMEGA_1}utu");
            let omega_rev: String = omega.chars().rev().collect();
            let tau = format!("trs{OMEGA_3}{omega_rev}");
            let tau_bar = format!("srsr{}rsrs", swap_rs(&tau));
            H4Words {
                omega1: w(OMEGA_1),
                omega2: w(OMEGA_2),
                omega3: w(OMEGA_3),
                omega_bar1: w(&swap_rs(OMEGA_1)),
                omega_bar2: w(&swap_rs(OMEGA_2)),
                omega: w(&omega),
                pi: w(&pi),
                tau: w(&tau),
                tau_bar: w(&tau_bar).reduced(),
            }
        });
        StandardWords {
            roles,
            h4,
            c: w("rsrs"),
            c_bar: w("srsr"),
        }
    }

    /// `(omega_t, pi_t)` of the standard deformation.
    pub fn core(&self, kind: CoreKind) -> (Word, Word) {
        let w = |s: &str| self.roles.word(s);
        match kind {
            CoreKind::Infinity => (Word::empty(), w("srs")),
            CoreKind::Ts3 => (w("tsrtst"), w("trs")),
            CoreKind::Tr3 => (w("srstrsrt"), w("srsrstr")),
            CoreKind::Ts4 => {
                let omega = w(&format!("rsrsr{OMEGA_2}"));
                let pi = w(&format!("rsrsr{OMEGA_2}{OMEGA_1}tut"));
                (omega, pi)
            }
            CoreKind::Tr4 => {
                let b1 = swap_rs(OMEGA_1);
                let b2 = swap_rs(OMEGA_2);
                (w(&format!("r{b2}")), w(&format!("r{b2}{b1}utu")))
            }
        }
    }

    /// The twist used when gluing the pieces around a wild vertex.
    pub fn twist(&self, kind: CoreKind) -> Word {
        let h4 = self.h4.as_ref().expect("twist needs rank 4 roles");
        if kind.on_s() {
            h4.tau.clone()
        } else {
            h4.tau_bar.clone()
        }
    }
}
