use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::ring::Ring;
use crate::error::{Error, Result};

/// Relative cutoff below which an end coefficient counts as zero.
pub const ZERO_THRESHOLD: f64 = 1e-9;

/// Finite Laurent polynomial in `t` with complex double coefficients.
///
/// `coeffs[i]` is the coefficient of `t^(low + i)`. After normalization the
/// first and last stored coefficients exceed `ZERO_THRESHOLD * max|c|`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Complex64>,
}

impl LaurentPoly {
    pub fn new(low: i64, coeffs: Vec<Complex64>) -> Self {
        let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if coeffs.is_empty() || scale == 0.0 {
            return Self::zero();
        }
        if !scale.is_finite() {
            return Self { low, coeffs };
        }
        let cut = ZERO_THRESHOLD * scale;
        let first = coeffs.iter().position(|c| c.norm() > cut);
        let last = coeffs.iter().rposition(|c| c.norm() > cut);
        match (first, last) {
            (Some(a), Some(b)) => Self {
                low: low + a as i64,
                coeffs: coeffs[a..=b].to_vec(),
            },
            _ => Self::zero(),
        }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(0, vec![c])
    }

    /// `c * t^e`
    pub fn monomial(c: Complex64, e: i64) -> Self {
        Self::new(e, vec![c])
    }

    /// From real coefficients starting at `t^low`.
    pub fn from_reals(low: i64, coeffs: &[f64]) -> Self {
        Self::new(
            low,
            coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        )
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent; equals `low` for constants. Meaningless for zero.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn span(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.high() - self.low
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> Complex64 {
        let i = e - self.low;
        if i < 0 {
            return Complex64::zero();
        }
        self.coeffs.get(i as usize).copied().unwrap_or_default()
    }

    pub fn lead(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn trail(&self) -> Complex64 {
        self.coeffs.first().copied().unwrap_or_default()
    }

    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            low: self.low + e,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Shift so the lowest exponent is zero.
    pub fn shifted_to_zero(&self) -> Self {
        self.shift(-self.low)
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        let body = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * t + c);
        body * t.powi(self.low as i32)
    }

    /// Long division from the highest exponent. The remainder left after the
    /// quotient is exhausted must be at most `tol * max|num|`.
    pub fn div_exact(&self, den: &LaurentPoly, tol: f64) -> Result<LaurentPoly> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.coeffs.len();
        let m = den.coeffs.len();
        let scale = self.max_norm();
        if n < m {
            return Err(Error::NotDivisible { residual: 1.0, tol });
        }
        let top = den.lead();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Complex64::zero(); n - m + 1];
        for i in (0..quot.len()).rev() {
            let q = rem[i + m - 1] / top;
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[i + j] -= q * d;
            }
            quot[i] = q;
        }
        let residual = rem.iter().map(|c| c.norm()).fold(0.0, f64::max) / scale;
        if residual > tol || !residual.is_finite() {
            return Err(Error::NotDivisible { residual, tol });
        }
        Ok(Self::new(self.low - den.low, quot))
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(Complex64::one())
    }
}

impl Ring for LaurentPoly {
    fn from_i64(n: i64) -> Self {
        Self::constant(Complex64::new(n as f64, 0.0))
    }
}

fn combine(a: &LaurentPoly, b: &LaurentPoly, sign: f64) -> LaurentPoly {
    if a.is_zero() {
        return b.scale(Complex64::new(sign, 0.0));
    }
    if b.is_zero() {
        return a.clone();
    }
    let low = a.low.min(b.low);
    let high = a.high().max(b.high());
    let coeffs = (low..=high)
        .map(|e| a.coeff(e) + b.coeff(e) * sign)
        .collect();
    LaurentPoly::new(low, coeffs)
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        combine(&self, &rhs, 1.0)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        combine(self, rhs, 1.0)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        combine(&self, &rhs, -1.0)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        combine(self, rhs, -1.0)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![Complex64::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.low + rhs.low, out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| format!("({:.6}{:+.6}i)*t^{}", c.re, c.im, self.low + i as i64))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(low: i64, c: &[f64]) -> LaurentPoly {
        LaurentPoly::from_reals(low, c)
    }

    #[test]
    fn relative_trim() {
        let p = re(-1, &[1e-12, 2.0, 3.0, 1e-11]);
        assert_eq!(p.low(), 0);
        assert_eq!(p.span(), 1);
        // the same tiny values survive when the polynomial itself is tiny
        let q = re(0, &[1e-12, 1e-11]);
        assert_eq!(q.span(), 1);
    }

    #[test]
    fn divide_square_times_linear() {
        let sq = re(0, &[1.0, -2.0, 1.0]);
        let num = &sq * &re(0, &[1.0, 1.0]);
        let q = num.div_exact(&sq, 1e-12).unwrap();
        assert!((&q - &re(0, &[1.0, 1.0])).max_norm() < 1e-12);
    }

    #[test]
    fn divide_by_linear() {
        let q = re(0, &[1.0, -2.0, 1.0])
            .div_exact(&re(0, &[-1.0, 1.0]), 1e-12)
            .unwrap();
        assert!((&q - &re(0, &[-1.0, 1.0])).max_norm() < 1e-12);
    }

    #[test]
    fn non_divisible_is_an_error() {
        let err = re(0, &[1.0, 0.0, 1.0])
            .div_exact(&re(0, &[-1.0, 1.0]), 1e-9)
            .unwrap_err();
        assert!(matches!(err, Error::NotDivisible { .. }));
    }

    #[test]
    fn negative_exponents_divide() {
        // (t^-2 + t^-1) / (1 + t) = t^-2
        let q = re(-2, &[1.0, 1.0])
            .div_exact(&re(0, &[1.0, 1.0]), 1e-12)
            .unwrap();
        assert_eq!(q.low(), -2);
        assert_eq!(q.span(), 0);
    }

    #[test]
    fn evaluation() {
        let p = re(-1, &[1.0, 0.0, 1.0]);
        let v = p.eval(Complex64::new(2.0, 0.0));
        assert!((v - Complex64::new(2.5, 0.0)).norm() < 1e-15);
    }
}
