use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::int_poly::IntPoly;
use super::ring::Ring;

/// Polynomial over GF(2) packed into 64-bit words; bit `i` is the
/// coefficient of `y^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GF2Poly {
    words: Vec<u64>,
}

impl GF2Poly {
    fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }

    /// From the low `bits` of a machine word (handy for exhaustive sweeps).
    pub fn from_bits(bits: u64) -> Self {
        Self::from_words(vec![bits])
    }

    /// From a list of exponents with coefficient 1.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.flip(e);
        }
        p
    }

    /// `1 + y + ... + y^deg`
    pub fn all_ones(deg: usize) -> Self {
        let mut p = Self::zero();
        for e in 0..=deg {
            p.flip(e);
        }
        p
    }

    pub fn monomial(e: usize) -> Self {
        Self::from_exponents(&[e])
    }

    /// Coefficientwise reduction of an integer polynomial.
    pub fn from_int_poly(p: &IntPoly) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_odd() {
                out.flip(i);
            }
        }
        out
    }

    pub fn bit(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    fn flip(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << (i % 64);
        let trimmed = Self::from_words(std::mem::take(&mut self.words));
        *self = trimmed;
    }

    pub fn degree(&self) -> Option<usize> {
        let top = self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    fn shl(&self, s: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (s / 64, s % 64);
        let mut out = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            out[i + ws] ^= w << bs;
            if bs != 0 {
                out[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        Self::from_words(out)
    }

    fn xor_assign(&mut self, other: &Self) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        let trimmed = Self::from_words(std::mem::take(&mut self.words));
        *self = trimmed;
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quot.flip(shift);
            rem.xor_assign(&divisor.shl(shift));
        }
        (quot, rem)
    }

    pub fn rem(&self, modulus: &Self) -> Self {
        self.div_rem(modulus).1
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        (self * other).rem(modulus)
    }

    /// `y^(2^k) mod modulus`, by repeated squaring.
    pub fn frobenius_power(k: usize, modulus: &Self) -> Self {
        let mut acc = Self::monomial(1).rem(modulus);
        for _ in 0..k {
            acc = acc.mul_mod(&acc, modulus);
        }
        acc
    }
}

impl Zero for GF2Poly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.words.is_empty()
    }
}

impl One for GF2Poly {
    fn one() -> Self {
        Self::from_bits(1)
    }
}

impl Ring for GF2Poly {
    fn from_i64(n: i64) -> Self {
        Self::from_bits((n.rem_euclid(2)) as u64)
    }
}

impl Add for GF2Poly {
    type Output = GF2Poly;
    fn add(mut self, rhs: GF2Poly) -> GF2Poly {
        self.xor_assign(&rhs);
        self
    }
}

impl Sub for GF2Poly {
    type Output = GF2Poly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: GF2Poly) -> GF2Poly {
        self + rhs
    }
}

impl Neg for GF2Poly {
    type Output = GF2Poly;
    fn neg(self) -> GF2Poly {
        self
    }
}

impl Mul for GF2Poly {
    type Output = GF2Poly;
    fn mul(self, rhs: GF2Poly) -> GF2Poly {
        &self * &rhs
    }
}

impl Mul for &GF2Poly {
    type Output = GF2Poly;
    fn mul(self, rhs: &GF2Poly) -> GF2Poly {
        let mut out = GF2Poly::zero();
        let Some(d) = rhs.degree() else {
            return out;
        };
        for i in 0..=d {
            if rhs.bit(i) {
                out.xor_assign(&self.shl(i));
            }
        }
        out
    }
}

impl fmt::Display for GF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let terms: Vec<String> = (0..=d)
            .rev()
            .filter(|&i| self.bit(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "y".to_string(),
                _ => format!("y^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
