use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use twofloat::TwoFloat;

use super::ring::{dd_from_bigint, ComplexDD, Ring};

/// Dense univariate polynomial over `Z`; `coeffs[i]` is the coefficient of `y^i`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and has no degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The variable `y`.
    pub fn var() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `c * y^e`
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.push(c.into());
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn max_abs_coeff_f64(&self) -> f64 {
        self.max_abs_coeff().to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Flip the global sign if needed so the leading coefficient is positive.
    pub fn sign_normalized(&self) -> Self {
        match self.leading() {
            Some(lc) if lc.is_negative() => -self.clone(),
            _ => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, y: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * y + c)
    }

    pub fn eval_complex(&self, y: Complex<f64>) -> Complex<f64> {
        self.coeffs.iter().rev().fold(Complex::zero(), |acc, c| {
            acc * y + Complex::new(c.to_f64().unwrap_or(f64::NAN), 0.0)
        })
    }

    pub fn eval_dd(&self, y: ComplexDD) -> ComplexDD {
        self.coeffs.iter().rev().fold(ComplexDD::zero(), |acc, c| {
            acc * y + Complex::new(dd_from_bigint(c), TwoFloat::from(0.0))
        })
    }

    /// Evaluate with coefficients in an arbitrary ring (used for composition).
    pub fn eval_in<R: Ring>(&self, z: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| {
            acc * z.clone() + bigint_into_ring::<R>(c)
        })
    }

    /// `self(inner(y))`
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        self.eval_in(inner)
    }

    /// Division with remainder by a divisor whose leading coefficient is a unit.
    /// Returns `None` when the divisor is zero or its leading coefficient is not +-1.
    pub fn div_rem_unit(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = divisor.degree()?;
        let lc = divisor.leading()?;
        if !lc.abs().is_one() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] * lc;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        Some((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact quotient by a unit-leading divisor; `None` if inexact.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_unit(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Content-free check helper: gcd of all coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Complex-coefficient copy, for the root finders.
    pub fn to_complex(&self) -> Vec<Complex<f64>> {
        self.coeffs
            .iter()
            .map(|c| Complex::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
            .collect()
    }
}

pub(crate) fn bigint_into_ring<R: Ring>(c: &BigInt) -> R {
    match c.to_i64() {
        Some(v) => R::from_i64(v),
        None => {
            // Horner in base 2^32 for coefficients beyond i64.
            let (sign, digits) = c.to_u32_digits();
            let base = R::from_i64(1 << 32);
            let mag = digits.iter().rev().fold(R::zero(), |acc, &d| {
                acc * base.clone() + R::from_i64(d as i64)
            });
            if sign == num_bigint::Sign::Minus {
                -mag
            } else {
                mag
            }
        }
    }
}

impl Zero for IntPoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for IntPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Ring for IntPoly {
    fn from_i64(n: i64) -> Self {
        Self::constant(n)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

/// Renders in descending powers of `y`, e.g. `y^2 - 3*y + 3`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_univariate(f, &self.coeffs, "y")
    }
}

pub(crate) fn write_univariate(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[BigInt],
    var: &str,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        match (i, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "{var}")?,
            (1, false) => write!(f, "{mag}*{var}")?,
            (_, true) => write!(f, "{var}^{i}")?,
            (_, false) => write!(f, "{mag}*{var}^{i}")?,
        }
    }
    Ok(())
}
