use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};
use twofloat::TwoFloat;

/// Commutative ring with unit, as used by the Chebyshev recurrences and
/// the 2x2 matrix algebra.
pub trait Ring:
    Clone
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Image of an integer under the canonical map `Z -> R`.
    fn from_i64(n: i64) -> Self;
}

impl Ring for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for i64 {
    fn from_i64(n: i64) -> Self {
        n
    }
}

impl Ring for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Ring for Complex<f64> {
    fn from_i64(n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }
}

impl Ring for Complex<TwoFloat> {
    fn from_i64(n: i64) -> Self {
        Complex::new(TwoFloat::from(n as f64), TwoFloat::from(0.0))
    }
}

/// Double-double complex scalar used wherever double precision is too coarse
/// (root polishing, residual certification).
pub type ComplexDD = Complex<TwoFloat>;

pub fn dd_from_c64(z: Complex<f64>) -> ComplexDD {
    Complex::new(TwoFloat::from(z.re), TwoFloat::from(z.im))
}

pub fn dd_to_c64(z: ComplexDD) -> Complex<f64> {
    Complex::new(z.re.hi() + z.re.lo(), z.im.hi() + z.im.lo())
}

pub fn dd_abs(z: ComplexDD) -> f64 {
    dd_to_c64(z).norm()
}

/// Split a big integer into a double-double with ~106 bits of mantissa.
pub fn dd_from_bigint(c: &BigInt) -> TwoFloat {
    use num_traits::{FromPrimitive, ToPrimitive};
    let hi = c.to_f64().unwrap_or(f64::INFINITY);
    if !hi.is_finite() {
        return TwoFloat::from(hi);
    }
    // hi is integer-valued, so the remainder is exact.
    let rem = c - BigInt::from_f64(hi).unwrap_or_default();
    TwoFloat::new_add(hi, rem.to_f64().unwrap_or(0.0))
}
