use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::int_poly::IntPoly;
use super::ring::Ring;

/// Sparse polynomial in `Z[x, y]`, keyed by `(deg_x, deg_y)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, dx: u32, dy: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dx, dy), c);
        }
        Self { terms }
    }

    /// Lift a polynomial in `y` alone.
    pub fn from_y_poly(p: &IntPoly) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| ((0, i as u32), c.clone()))
            .collect();
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(dx, dy), c)| (dx, dy, c))
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> BigInt {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// Specialize `x` to an integer, giving a polynomial in `y`.
    pub fn eval_x(&self, x: &BigInt) -> IntPoly {
        let deg = self.degree_y().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![BigInt::zero(); deg];
        for (&(dx, dy), c) in &self.terms {
            coeffs[dy as usize] += c * x.pow(dx);
        }
        IntPoly::new(coeffs)
    }

    pub fn eval_complex(&self, x: Complex<f64>, y: Complex<f64>) -> Complex<f64> {
        // Horner in y over x-polynomials keeps this deterministic.
        let dy = self.degree_y().unwrap_or(0);
        let mut acc = Complex::zero();
        for j in (0..=dy).rev() {
            let mut inner = Complex::zero();
            let dx = self
                .terms
                .keys()
                .filter(|k| k.1 == j)
                .map(|k| k.0)
                .max()
                .unwrap_or(0);
            for i in (0..=dx).rev() {
                let c = self.coeff(i, j).to_f64().unwrap_or(f64::NAN);
                inner = inner * x + c;
            }
            acc = acc * y + inner;
        }
        acc
    }

    /// True when every monomial has even `x`-degree.
    pub fn even_in_x(&self) -> bool {
        self.terms.keys().all(|k| k.0 % 2 == 0)
    }

    fn insert_add(&mut self, key: (u32, u32), c: BigInt) {
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Ring for BiPoly {
    fn from_i64(n: i64) -> Self {
        Self::constant(n)
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        for (k, c) in rhs.terms {
            self.insert_add(k, c);
        }
        self
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        self + (-rhs)
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(ax, ay), a) in &self.terms {
            for (&(bx, by), b) in &rhs.terms {
                out.insert_add((ax + bx, ay + by), a * b);
            }
        }
        out
    }
}

/// Renders by descending `y`-degree, then descending `x`-degree.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(dx, dy)| std::cmp::Reverse((dy, dx)));
        for (idx, key) in keys.iter().enumerate() {
            let c = &self.terms[key];
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if key.0 == 1 {
                factors.push("x".to_string());
            } else if key.0 > 1 {
                factors.push(format!("x^{}", key.0));
            }
            if key.1 == 1 {
                factors.push("y".to_string());
            } else if key.1 > 1 {
                factors.push(format!("y^{}", key.1));
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let p = BiPoly::x() - BiPoly::x();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn specialize_x() {
        // 1 - (y + 2 - x^2) at x = 2  ->  3 - y
        let p = BiPoly::one() - (BiPoly::y() + BiPoly::constant(2) - BiPoly::x() * BiPoly::x());
        assert_eq!(p.eval_x(&BigInt::from(2)), IntPoly::from_i64s(&[3, -1]));
        assert!(p.even_in_x());
        assert_eq!(p.to_string(), "-y + x^2 - 1");
    }

    #[test]
    fn complex_eval_matches_specialization() {
        let p = (BiPoly::x() * BiPoly::y() + BiPoly::constant(3)) * BiPoly::y();
        let v = p.eval_complex(Complex::new(2.0, 0.0), Complex::new(0.5, 1.0));
        let q = p.eval_x(&BigInt::from(2));
        assert!((v - q.eval_complex(Complex::new(0.5, 1.0))).norm() < 1e-14);
    }
}
