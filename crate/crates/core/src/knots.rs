//! Knot descriptors, two-generator group words and presentations.
//!
//! Words use the text form `b a^-1 (b^-1 a)^2`: a factor is `a`, `b`, `1`
//! or a parenthesized word, optionally raised to an integer power.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Gen {
    A,
    B,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::A => Gen::B,
            Gen::B => Gen::A,
        }
    }

    fn symbol(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
        }
    }
}

/// A maximal run `gen^exp` inside a reduced word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    pub gen: Gen,
    pub exp: i64,
}

/// Freely reduced word in the free group on `a, b`, stored as syllables.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord {
    syllables: Vec<Syllable>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn gen(g: Gen) -> Self {
        Self::power(g, 1)
    }

    pub fn power(g: Gen, exp: i64) -> Self {
        Self::from_syllables([(g, exp)])
    }

    /// Build from `(generator, exponent)` pairs, merging and cancelling as needed.
    pub fn from_syllables(parts: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        let mut w = Self::identity();
        for (gen, exp) in parts {
            w.push(gen, exp);
        }
        w
    }

    fn push(&mut self, gen: Gen, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.gen == gen => {
                last.exp += exp;
                if last.exp == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable { gen, exp }),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of `|exp|` over syllables.
    pub fn len(&self) -> usize {
        self.syllables
            .iter()
            .map(|s| s.exp.unsigned_abs() as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// The word spelled letter by letter as `(gen, +-1)`.
    pub fn letters(&self) -> impl Iterator<Item = (Gen, i64)> + '_ {
        self.syllables.iter().flat_map(|s| {
            let sign = s.exp.signum();
            std::iter::repeat_n((s.gen, sign), s.exp.unsigned_abs() as usize)
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    gen: s.gen,
                    exp: -s.exp,
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &GroupWord) -> Self {
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(s.gen, s.exp);
        }
        out
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn exponent_sum(&self, g: Gen) -> i64 {
        self.syllables
            .iter()
            .filter(|s| s.gen == g)
            .map(|s| s.exp)
            .sum()
    }

    /// Image under the abelianization sending both generators to `t`.
    pub fn t_degree(&self) -> i64 {
        self.syllables.iter().map(|s| s.exp).sum()
    }

    /// Reduce a letter sequence that may contain cancellations.
    pub fn reduce_letters(letters: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        Self::from_syllables(letters)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|s| match s.exp {
                1 => s.gen.symbol().to_string(),
                e => format!("{}^{}", s.gen.symbol(), e),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parse the text form of a word. Whitespace between factors is ignored.
pub fn parse_word(text: &str) -> Result<GroupWord> {
    let mut parser = WordParser {
        src: text.as_bytes(),
        pos: 0,
    };
    let w = parser.word()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("unexpected character"));
    }
    Ok(w)
}

struct WordParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl WordParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<GroupWord> {
        let mut out = GroupWord::identity();
        let mut factors = 0;
        while let Some(c) = self.peek() {
            if !matches!(c, b'a' | b'b' | b'1' | b'(') {
                break;
            }
            out = out.concat(&self.factor()?);
            factors += 1;
        }
        if factors == 0 {
            return Err(self.error("expected 'a', 'b', '1' or '('"));
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<GroupWord> {
        let base = match self.peek() {
            Some(b'a') => {
                self.pos += 1;
                GroupWord::gen(Gen::A)
            }
            Some(b'b') => {
                self.pos += 1;
                GroupWord::gen(Gen::B)
            }
            Some(b'1') => {
                self.pos += 1;
                GroupWord::identity()
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            _ => return Err(self.error("expected a factor")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.exponent()?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected exponent digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let v: i64 = digits.parse().map_err(|_| Error::Syntax {
            offset: start,
            message: "exponent out of range".into(),
        })?;
        Ok(if negative { -v } else { v })
    }
}

/// One-relator presentation `<a, b | r>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub relator: GroupWord,
}

/// The knot families handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family")]
pub enum KnotSpec {
    /// `J(k, 2n)` with `k >= 1`, `n != 0`.
    DoubleTwist { k: i64, n: i64 },
    /// 2-bridge knot `b(p, q)` with `p` odd, `0 < q < p`, `gcd(p, q) = 1`.
    TwoBridge { p: i64, q: i64 },
}

impl KnotSpec {
    pub fn double_twist(k: i64, n: i64) -> Result<Self> {
        if k <= 0 {
            return Err(Error::InvalidSpec(format!(
                "J({k},{}) needs k >= 1; J(-k,-l) is the mirror image of J(k,l), \
                 pass the mirrored parameters explicitly",
                2 * n
            )));
        }
        if n == 0 {
            return Err(Error::InvalidSpec(format!(
                "J({k},0) is the trivial knot; n must be nonzero"
            )));
        }
        Ok(KnotSpec::DoubleTwist { k, n })
    }

    pub fn two_bridge(p: i64, q: i64) -> Result<Self> {
        if p <= 1 || p % 2 == 0 {
            return Err(Error::InvalidSpec(format!("b({p},{q}) needs an odd p > 1")));
        }
        if q < 1 || q >= p {
            return Err(Error::InvalidSpec(format!("b({p},{q}) needs 1 <= q < p")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidSpec(format!(
                "b({p},{q}) needs gcd(p, q) = 1"
            )));
        }
        Ok(KnotSpec::TwoBridge { p, q })
    }

    /// The word `w` of the relation `w^n a = b w^n` (`n = 1` for 2-bridge knots).
    pub fn word(&self) -> GroupWord {
        match *self {
            KnotSpec::DoubleTwist { k, .. } => word_w(k).expect("validated k"),
            KnotSpec::TwoBridge { p, q } => two_bridge_word(p, q),
        }
    }

    /// The power of `w` appearing in the relation.
    pub fn power(&self) -> i64 {
        match *self {
            KnotSpec::DoubleTwist { n, .. } => n,
            KnotSpec::TwoBridge { .. } => 1,
        }
    }

    pub fn presentation(&self) -> Presentation {
        Presentation {
            relator: relator_from(&self.word(), self.power()),
        }
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::DoubleTwist { k, n } => write!(f, "J({},{})", k, 2 * n),
            KnotSpec::TwoBridge { p, q } => write!(f, "b({p},{q})"),
        }
    }
}

/// `w = (ba^-1)^m (b^-1 a)^m` for `k = 2m`, `(ba^-1)^m ba (b^-1 a)^m` for `k = 2m + 1`.
pub fn word_w(k: i64) -> Result<GroupWord> {
    if k < 1 {
        return Err(Error::InvalidSpec(format!("word_w needs k >= 1, got {k}")));
    }
    let m = k / 2;
    let left = GroupWord::from_syllables([(Gen::B, 1), (Gen::A, -1)]).pow(m);
    let right = GroupWord::from_syllables([(Gen::B, -1), (Gen::A, 1)]).pow(m);
    let middle = if k % 2 == 0 {
        GroupWord::identity()
    } else {
        GroupWord::from_syllables([(Gen::B, 1), (Gen::A, 1)])
    };
    Ok(left.concat(&middle).concat(&right))
}

fn relator_from(w: &GroupWord, n: i64) -> GroupWord {
    let wn = w.pow(n);
    wn.concat(&GroupWord::gen(Gen::A))
        .concat(&wn.inverse())
        .concat(&GroupWord::power(Gen::B, -1))
}

/// `r = w^n a w^-n b^-1` for `J(k, 2n)`.
pub fn relator(k: i64, n: i64) -> Result<GroupWord> {
    KnotSpec::double_twist(k, n)?;
    Ok(relator_from(&word_w(k)?, n))
}

/// `w = a^e1 b^e2 ... a^e_{p-2} b^e_{p-1}` with `e_j = (-1)^floor(jq/p)`.
pub fn two_bridge_word(p: i64, q: i64) -> GroupWord {
    GroupWord::from_syllables((1..p).map(|j| {
        let gen = if j % 2 == 1 { Gen::A } else { Gen::B };
        let e = if (j * q / p) % 2 == 0 { 1 } else { -1 };
        (gen, e)
    }))
}

/// Known genus and fiberedness of `J(k, 2n)`, for validating detection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroundTruth {
    pub genus: u32,
    pub fibered: bool,
}

/// Seifert genus of `J(k, 2n)`. `None` for 2-bridge descriptors.
pub fn genus(spec: &KnotSpec) -> Option<u32> {
    match *spec {
        KnotSpec::DoubleTwist { k, n } => Some(if k == 1 {
            if n > 0 {
                (n - 1) as u32
            } else {
                (-n) as u32
            }
        } else if k % 2 == 0 {
            1
        } else {
            n.unsigned_abs() as u32
        }),
        KnotSpec::TwoBridge { .. } => None,
    }
}

/// Fibered members of the family: `J(2, +-2)`, every `J(1, 2n)`, and `J(3, 2n)` with `n > 0`.
pub fn is_fibered(spec: &KnotSpec) -> Option<bool> {
    match *spec {
        KnotSpec::DoubleTwist { k, n } => Some(match k {
            1 => true,
            2 => n.abs() == 1,
            3 => n > 0,
            _ => false,
        }),
        KnotSpec::TwoBridge { .. } => None,
    }
}

pub fn ground_truth(spec: &KnotSpec) -> Option<GroundTruth> {
    Some(GroundTruth {
        genus: genus(spec)?,
        fibered: is_fibered(spec)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn words_for_small_k() {
        assert_eq!(word_w(2).unwrap(), w("b a^-1 b^-1 a"));
        assert_eq!(word_w(1).unwrap(), w("ba"));
        assert_eq!(word_w(3).unwrap(), w("b a^-1 b a b^-1 a"));
        assert!(word_w(0).is_err());
    }

    #[test]
    fn relator_abelianizes_trivially() {
        let r = relator(1, 1).unwrap();
        assert_eq!(r.exponent_sum(Gen::A), 1);
        assert_eq!(r.exponent_sum(Gen::B), -1);
        assert_eq!(r.t_degree(), 0);
    }

    #[test]
    fn relator_twist_knot() {
        // (ba^-1b^-1a) a (a^-1 b a b^-1) b^-1
        let r = relator(2, 1).unwrap();
        let expected = w("b a^-1 b^-1 a a a^-1 b a b^-1 b^-1");
        assert_eq!(r, expected);
        // ten letters before reduction, eight after
        assert_eq!(r, w("b a^-1 b^-1 a b a b^-2"));
        assert_eq!(r.syllables().len(), 7);
        assert_eq!(r.len(), 8);
    }

    #[test]
    fn relator_length_bound() {
        for k in 1..=6 {
            for n in [-3, -2, -1, 1, 2, 3] {
                let r = relator(k, n).unwrap();
                let wl = word_w(k).unwrap().len();
                assert!(r.len() <= 2 * n.unsigned_abs() as usize * wl + 2);
            }
        }
    }

    #[test]
    fn two_bridge_words() {
        assert_eq!(two_bridge_word(3, 1), w("ab"));
        assert_eq!(two_bridge_word(5, 3), w("a b^-1 a^-1 b"));
        assert_eq!(two_bridge_word(5, 1), w("abab"));
        assert_eq!(two_bridge_word(13, 5).len(), 12);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("(ba^-1)^2"), w("b a^-1 b a^-1"));
        let p = w("a^3b^-2");
        assert_eq!(p.syllables().len(), 2);
        assert_eq!(
            p.syllables()[0],
            Syllable {
                gen: Gen::A,
                exp: 3
            }
        );
        assert!(w("a a^-1").is_identity());
        assert!(w("a^0 b").concat(&w("b^-1")).is_identity());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_word("ab)").unwrap_err() {
            Error::Syntax { offset, .. } => assert_eq!(offset, 2),
            e => panic!("unexpected {e}"),
        }
        match parse_word("(ab").unwrap_err() {
            Error::Syntax { offset, .. } => assert_eq!(offset, 3),
            e => panic!("unexpected {e}"),
        }
        assert!(parse_word("a^").is_err());
        assert!(parse_word("").is_err());
        assert!(parse_word("c").is_err());
    }

    #[test]
    fn display_round_trips() {
        let r = relator(3, -2).unwrap();
        assert_eq!(parse_word(&r.to_string()).unwrap(), r);
        assert_eq!(GroupWord::identity().to_string(), "1");
        assert!(parse_word("1").unwrap().is_identity());
    }

    #[test]
    fn spec_validation() {
        assert!(KnotSpec::double_twist(0, 1).is_err());
        let msg = KnotSpec::double_twist(-2, 1).unwrap_err().to_string();
        assert!(msg.contains("mirror"));
        assert!(KnotSpec::double_twist(2, 0).is_err());
        assert!(KnotSpec::two_bridge(4, 1).is_err());
        assert!(KnotSpec::two_bridge(9, 3).is_err());
        assert!(KnotSpec::two_bridge(5, 5).is_err());
        assert!(KnotSpec::two_bridge(5, 2).is_ok());
    }

    #[test]
    fn genus_table() {
        let g = |k, n| genus(&KnotSpec::double_twist(k, n).unwrap()).unwrap();
        assert_eq!(g(2, 1), 1);
        assert_eq!(g(3, -2), 2);
        assert_eq!(g(1, 3), 2);
        assert_eq!(g(1, -3), 3);
        assert_eq!(g(1, 1), 0);
        assert_eq!(g(6, -4), 1);
    }

    #[test]
    fn fibered_table() {
        let f = |k, n| is_fibered(&KnotSpec::double_twist(k, n).unwrap()).unwrap();
        assert!(f(2, 1));
        assert!(f(2, -1));
        assert!(!f(2, 2));
        assert!(!f(3, -1));
        assert!(f(3, 4));
        assert!(!f(4, 1));
        assert!(f(1, -4));
    }
}
