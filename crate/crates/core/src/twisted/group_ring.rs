use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::knots::{Gen, GroupWord};

/// Element of the integral group ring of the free group on `a, b`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupRingElt {
    terms: BTreeMap<GroupWord, i64>,
}

impl GroupRingElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(GroupWord::identity())
    }

    pub fn from_word(w: GroupWord) -> Self {
        Self::term(w, 1)
    }

    pub fn gen(g: Gen) -> Self {
        Self::from_word(GroupWord::gen(g))
    }

    pub fn term(w: GroupWord, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn add_term(&mut self, w: GroupWord, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// `w * self`
    pub fn left_mul_word(&self, w: &GroupWord) -> Self {
        let mut out = Self::zero();
        for (u, c) in self.terms() {
            out.add_term(w.concat(u), c);
        }
        out
    }

    /// `1 + g + ... + g^(count-1)`; zero when `count == 0`.
    pub fn geometric(g: &GroupWord, count: usize) -> Self {
        let mut out = Self::zero();
        let mut p = GroupWord::identity();
        for _ in 0..count {
            out.add_term(p.clone(), 1);
            p = p.concat(g);
        }
        out
    }
}

impl Add for &GroupRingElt {
    type Output = GroupRingElt;
    fn add(self, rhs: &GroupRingElt) -> GroupRingElt {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Add for GroupRingElt {
    type Output = GroupRingElt;
    fn add(self, rhs: GroupRingElt) -> GroupRingElt {
        &self + &rhs
    }
}

impl Neg for &GroupRingElt {
    type Output = GroupRingElt;
    fn neg(self) -> GroupRingElt {
        GroupRingElt {
            terms: self.terms.iter().map(|(w, &c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for GroupRingElt {
    type Output = GroupRingElt;
    fn neg(self) -> GroupRingElt {
        -&self
    }
}

impl Sub for &GroupRingElt {
    type Output = GroupRingElt;
    fn sub(self, rhs: &GroupRingElt) -> GroupRingElt {
        self + &(-rhs)
    }
}

impl Sub for GroupRingElt {
    type Output = GroupRingElt;
    fn sub(self, rhs: GroupRingElt) -> GroupRingElt {
        &self - &rhs
    }
}

impl Mul for &GroupRingElt {
    type Output = GroupRingElt;
    fn mul(self, rhs: &GroupRingElt) -> GroupRingElt {
        let mut out = GroupRingElt::zero();
        for (u, c) in self.terms() {
            for (v, d) in rhs.terms() {
                out.add_term(u.concat(v), c * d);
            }
        }
        out
    }
}

impl Mul for GroupRingElt {
    type Output = GroupRingElt;
    fn mul(self, rhs: GroupRingElt) -> GroupRingElt {
        &self * &rhs
    }
}

impl fmt::Display for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let sep = if i > 0 { " " } else { "" };
            let space = if i > 0 { " " } else { "" };
            match c.abs() {
                1 => write!(f, "{sep}{sign}{space}{w}")?,
                m => write!(f, "{sep}{sign}{space}{m}({w})")?,
            }
        }
        Ok(())
    }
}

/// Free derivative `d(word)/d(gen)`, letter by letter:
/// `d(u g)/dg = du/dg + u`, `d(u g^-1)/dg = du/dg - u g^-1`.
pub fn fox_derivative(word: &GroupWord, gen: Gen) -> GroupRingElt {
    let mut out = GroupRingElt::zero();
    let mut prefix = GroupWord::identity();
    for (g, e) in word.letters() {
        let letter = GroupWord::power(g, e);
        let next = prefix.concat(&letter);
        if g == gen {
            if e > 0 {
                out.add_term(prefix.clone(), 1);
            } else {
                out.add_term(next.clone(), -1);
            }
        }
        prefix = next;
    }
    out
}
