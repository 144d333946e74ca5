use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::LaurentPoly;
use super::ring::Ring;

/// 2x2 matrix `[[a, b], [c, d]]` over a commutative ring.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn zero() -> Self {
        Self::new(R::zero(), R::zero(), R::zero(), R::zero())
    }

    pub fn scalar(s: R) -> Self {
        Self::new(s.clone(), R::zero(), R::zero(), s)
    }

    pub fn det(&self) -> R {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> R {
        self.a.clone() + self.d.clone()
    }

    /// Adjugate; equals the inverse when `det == 1`.
    pub fn adjugate(&self) -> Self {
        Self::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    pub fn scale(&self, s: &R) -> Self {
        Self::new(
            self.a.clone() * s.clone(),
            self.b.clone() * s.clone(),
            self.c.clone() * s.clone(),
            self.d.clone() * s.clone(),
        )
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Mat2<S> {
        Mat2 {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
        }
    }

    pub fn entries(&self) -> [&R; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// `M^e` for a determinant-one matrix; negative powers go through the adjugate.
    pub fn pow_unimodular(&self, e: i64) -> Self {
        let base = if e < 0 { self.adjugate() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::identity();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * sq.clone();
            }
            k >>= 1;
            if k > 0 {
                sq = sq.clone() * sq;
            }
        }
        acc
    }
}

impl<R: Ring> Add for Mat2<R> {
    type Output = Mat2<R>;
    fn add(self, rhs: Mat2<R>) -> Mat2<R> {
        Mat2::new(
            self.a + rhs.a,
            self.b + rhs.b,
            self.c + rhs.c,
            self.d + rhs.d,
        )
    }
}

impl<R: Ring> Sub for Mat2<R> {
    type Output = Mat2<R>;
    fn sub(self, rhs: Mat2<R>) -> Mat2<R> {
        Mat2::new(
            self.a - rhs.a,
            self.b - rhs.b,
            self.c - rhs.c,
            self.d - rhs.d,
        )
    }
}

impl<R: Ring> Neg for Mat2<R> {
    type Output = Mat2<R>;
    fn neg(self) -> Mat2<R> {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl<R: Ring> Mul for Mat2<R> {
    type Output = Mat2<R>;
    fn mul(self, rhs: Mat2<R>) -> Mat2<R> {
        let Mat2 { a, b, c, d } = self;
        Mat2::new(
            a.clone() * rhs.a.clone() + b.clone() * rhs.c.clone(),
            a * rhs.b.clone() + b * rhs.d.clone(),
            c.clone() * rhs.a + d.clone() * rhs.c,
            c * rhs.b + d * rhs.d,
        )
    }
}

/// Determinant of a matrix of Laurent polynomials.
pub fn laurent_det2(m: &Mat2<LaurentPoly>) -> LaurentPoly {
    &(&m.a * &m.d) - &(&m.b * &m.c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_complex::Complex64;
    use num_traits::{One, Zero};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn det_of_identity_is_one() {
        let m: Mat2<LaurentPoly> = Mat2::identity();
        assert_eq!(laurent_det2(&m), LaurentPoly::one());
    }

    #[test]
    fn det_of_one_minus_t_b() {
        // B = [[1, 0], [2 - y, 1]] has trace 2, so det(I - tB) = 1 - 2t + t^2.
        let y = 0.7;
        let t = LaurentPoly::monomial(c(1.0), 1);
        let b = Mat2::new(c(1.0), c(0.0), c(2.0 - y), c(1.0)).map(|z| LaurentPoly::constant(*z));
        let m = Mat2::identity() - b.scale(&t);
        let det = laurent_det2(&m);
        assert!((det - LaurentPoly::from_reals(0, &[1.0, -2.0, 1.0])).max_norm() < 1e-15);
    }

    #[test]
    fn det_of_diag_t() {
        let t = LaurentPoly::monomial(c(1.0), 1);
        let m = Mat2::scalar(t);
        let det = laurent_det2(&m);
        assert_eq!(det.low(), 2);
        assert_eq!(det.span(), 0);
        assert!((det.lead() - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn unimodular_powers() {
        let m = Mat2::new(
            BigInt::from(2),
            BigInt::from(1),
            BigInt::from(1),
            BigInt::from(1),
        );
        let p = m.pow_unimodular(5) * m.pow_unimodular(-5);
        assert_eq!(p, Mat2::identity());
        assert!(m.pow_unimodular(0).b.is_zero());
        assert_eq!(m.pow_unimodular(3).det(), BigInt::one());
    }
}
