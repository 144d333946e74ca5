//! Riley polynomials of `J(k, 2n)` in closed form, and a literal matrix
//! product over `Z[y]` used as an independent oracle and for general
//! 2-bridge words.
//!
//! Representations are normalized as
//! `a -> [[s, 1], [0, 1/s]]`, `b -> [[s, 0], [2 - y, 1/s]]` with
//! `x = s + 1/s = tr A = tr B` and `y = tr AB^-1`. At `x = 2`, `s = 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{BiPoly, IntPoly, Mat2, Ring};
use crate::chebyshev::cheb_s;
use crate::error::{Error, Result};
use crate::knots::{Gen, GroupWord, KnotSpec};

/// `alpha_k` with `x^2` and `y` supplied as ring elements.
fn alpha_in<R: Ring>(k: i64, x2: &R, y: &R) -> R {
    let m = k / 2;
    let c = y.clone() + R::from_i64(2) - x2.clone();
    if k % 2 == 0 {
        let s1 = cheb_s(m - 1, y);
        let s2 = cheb_s(m - 2, y);
        R::one() - c * s1.clone() * (s1 - s2)
    } else {
        let s0 = cheb_s(m, y);
        let s1 = cheb_s(m - 1, y);
        R::one() + c * s1.clone() * (s0 - s1)
    }
}

/// `lambda = tr W` with `x^2` and `y` supplied as ring elements.
fn trace_in<R: Ring>(k: i64, x2: &R, y: &R) -> R {
    let m = k / 2;
    let c = y.clone() + R::from_i64(2) - x2.clone();
    let y2 = y.clone() - R::from_i64(2);
    if k % 2 == 0 {
        let s1 = cheb_s(m - 1, y);
        R::from_i64(2) + y2 * c * s1.clone() * s1
    } else {
        let s0 = cheb_s(m, y);
        let s1 = cheb_s(m - 1, y);
        x2.clone() - y.clone() - y2 * c * s0 * s1
    }
}

fn riley_in<R: Ring>(k: i64, n: i64, x2: &R, y: &R) -> R {
    let alpha = alpha_in(k, x2, y);
    let lambda = trace_in(k, x2, y);
    cheb_s(n - 1, &lambda) * alpha - cheb_s(n - 2, &lambda)
}

fn x_squared() -> BiPoly {
    BiPoly::x() * BiPoly::x()
}

/// `alpha_k(x, y)`, the (1,2) entry of `WA - BW`.
pub fn alpha_k(k: i64) -> BiPoly {
    assert!(k >= 1, "alpha_k needs k >= 1");
    alpha_in(k, &x_squared(), &BiPoly::y())
}

/// `lambda = tr W` as a polynomial in `x, y`.
pub fn trace_w(k: i64) -> BiPoly {
    assert!(k >= 1, "trace_w needs k >= 1");
    trace_in(k, &x_squared(), &BiPoly::y())
}

/// `phi_{k,2n}(x, y) = S_{n-1}(lambda) alpha_k - S_{n-2}(lambda)`, unnormalized.
pub fn riley_poly(k: i64, n: i64) -> BiPoly {
    assert!(k >= 1 && n != 0, "riley_poly needs k >= 1, n != 0");
    riley_in(k, n, &x_squared(), &BiPoly::y())
}

/// `alpha_k(2, y)`.
pub fn alpha_at_2(k: i64) -> IntPoly {
    alpha_in(k, &IntPoly::constant(4), &IntPoly::var())
}

/// `lambda(2, y)`.
pub fn trace_at_2(k: i64) -> IntPoly {
    trace_in(k, &IntPoly::constant(4), &IntPoly::var())
}

/// `phi_{k,2n}(2, y)` as produced by the closed form (no sign normalization).
pub fn riley_at_2_raw(k: i64, n: i64) -> IntPoly {
    riley_in(k, n, &IntPoly::constant(4), &IntPoly::var())
}

/// Everything the closed form produces for one `J(k, 2n)`.
#[derive(Debug, Clone)]
pub struct RileyData {
    pub k: i64,
    pub n: i64,
    pub alpha: BiPoly,
    pub lambda: BiPoly,
    pub phi: BiPoly,
    /// `phi(2, y)` with positive leading coefficient.
    pub phi_parabolic: IntPoly,
}

impl RileyData {
    pub fn new(k: i64, n: i64) -> Result<Self> {
        KnotSpec::double_twist(k, n)?;
        let phi = riley_poly(k, n);
        let phi_parabolic = phi.eval_x(&BigInt::from(2)).sign_normalized();
        Ok(Self {
            k,
            n,
            alpha: alpha_k(k),
            lambda: trace_w(k),
            phi,
            phi_parabolic,
        })
    }
}

/// Parabolic images `A = [[1,1],[0,1]]`, `B = [[1,0],[2-y,1]]` over `Z[y]`.
pub fn parabolic_generators() -> (Mat2<IntPoly>, Mat2<IntPoly>) {
    let one = IntPoly::one();
    let zero = IntPoly::zero();
    let a = Mat2::new(one.clone(), one.clone(), zero.clone(), one.clone());
    let b = Mat2::new(one.clone(), zero, IntPoly::from_i64s(&[2, -1]), one);
    (a, b)
}

/// Image of a word under a pair of determinant-one matrices.
pub fn word_image<R: Ring>(word: &GroupWord, a: &Mat2<R>, b: &Mat2<R>) -> Mat2<R> {
    word.syllables().iter().fold(Mat2::identity(), |acc, s| {
        let g = match s.gen {
            Gen::A => a,
            Gen::B => b,
        };
        acc * g.pow_unimodular(s.exp)
    })
}

/// `W^n A - B W^n` at `x = 2`, computed by literal matrix products over `Z[y]`.
pub fn riley_matrix_oracle(word: &GroupWord, n: i64) -> Mat2<IntPoly> {
    let (a, b) = parabolic_generators();
    let wn = word_image(word, &a, &b).pow_unimodular(n);
    wn.clone() * a - b * wn
}

/// `phi_K(2, y)` for `b(p, q)`, sign-normalized; degree `(p - 1) / 2`.
pub fn riley_two_bridge_parabolic(p: i64, q: i64) -> Result<IntPoly> {
    let spec = KnotSpec::two_bridge(p, q)?;
    let m = riley_matrix_oracle(&spec.word(), 1);
    let phi = m.b.sign_normalized();
    let want = ((p - 1) / 2) as usize;
    if phi.degree() != Some(want) {
        return Err(Error::Internal(format!(
            "{spec}: Riley polynomial has degree {:?}, expected {want}",
            phi.degree()
        )));
    }
    Ok(phi)
}

/// `phi_K(2, y)` for any supported knot, sign-normalized.
pub fn riley_parabolic(spec: &KnotSpec) -> Result<IntPoly> {
    match *spec {
        KnotSpec::DoubleTwist { k, n } => Ok(riley_at_2_raw(k, n).sign_normalized()),
        KnotSpec::TwoBridge { p, q } => riley_two_bridge_parabolic(p, q),
    }
}

/// Both sides of `alpha^2 - alpha lambda + 1 = (y-2)^3 S_{m-1}^4` (k even)
/// or `(y-2)((y-2) S_m S_{m-1} + 1)^2` (k odd) at `x = 2`.
#[derive(Debug, Clone)]
pub struct AlphaLambdaIdentity {
    pub lhs: IntPoly,
    pub rhs: IntPoly,
    pub equal: bool,
}

pub fn alpha_lambda_check(k: i64) -> AlphaLambdaIdentity {
    let y = IntPoly::var();
    let alpha = alpha_at_2(k);
    let lambda = trace_at_2(k);
    let lhs = &(&(&alpha * &alpha) - &(&alpha * &lambda)) + &IntPoly::one();
    let m = k / 2;
    let y2 = IntPoly::from_i64s(&[-2, 1]);
    let rhs = if k % 2 == 0 {
        let s = cheb_s(m - 1, &y);
        let s2 = &s * &s;
        &(&(&y2 * &y2) * &y2) * &(&s2 * &s2)
    } else {
        let inner = &(&(&y2 * &cheb_s(m, &y)) * &cheb_s(m - 1, &y)) + &IntPoly::one();
        &y2 * &(&inner * &inner)
    };
    let equal = lhs == rhs;
    AlphaLambdaIdentity { lhs, rhs, equal }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn two() -> BigInt {
        BigInt::from(2)
    }

    #[test]
    fn alpha_small_k() {
        assert_eq!(alpha_k(1), BiPoly::one());
        let c = BiPoly::y() + BiPoly::constant(2) - x_squared();
        assert_eq!(alpha_k(2), BiPoly::one() - c.clone());
        let k3 = BiPoly::one() + c * (BiPoly::y() - BiPoly::one());
        assert_eq!(alpha_k(3), k3);
        for k in 1..=9 {
            assert!(alpha_k(k).even_in_x());
        }
    }

    #[test]
    fn trace_small_k() {
        let x2 = x_squared();
        let y = BiPoly::y();
        let c = y.clone() + BiPoly::constant(2) - x2.clone();
        assert_eq!(trace_w(1), x2.clone() - y.clone());
        assert_eq!(
            trace_w(2),
            BiPoly::constant(2) + (y.clone() - BiPoly::constant(2)) * c.clone()
        );
        assert_eq!(
            trace_w(3),
            x2 - y.clone() - (y.clone() - BiPoly::constant(2)) * c * y
        );
    }

    #[test]
    fn riley_examples_at_two() {
        assert_eq!(riley_poly(2, 1).eval_x(&two()), p(&[3, -1]));
        assert_eq!(riley_poly(2, -1).eval_x(&two()), p(&[3, -3, 1]));
        assert_eq!(riley_poly(1, 2).eval_x(&two()), p(&[3, -1]));
        assert_eq!(riley_at_2_raw(2, -1), p(&[3, -3, 1]));
        assert!(riley_at_2_raw(1, 1).degree() == Some(0));
    }

    #[test]
    fn riley_data_is_monic_after_normalization() {
        let d = RileyData::new(2, 1).unwrap();
        assert_eq!(d.phi_parabolic, p(&[-3, 1]));
        assert!(RileyData::new(0, 1).is_err());
    }

    #[test]
    fn oracle_twist_knot() {
        let w = crate::knots::word_w(2).unwrap();
        let m = riley_matrix_oracle(&w, 1);
        assert!(m.a.is_zero() && m.d.is_zero());
        assert_eq!(m.b, p(&[3, -1]));
        assert_eq!(m.c, &p(&[-2, 1]) * &m.b);
    }

    #[test]
    fn two_bridge_small() {
        let t = riley_two_bridge_parabolic(3, 1).unwrap();
        assert_eq!(t.degree(), Some(1));
        assert!(t.is_monic());
        let f8 = riley_two_bridge_parabolic(5, 3).unwrap();
        assert_eq!(f8.degree(), Some(2));
        assert!(f8.is_monic());
        // discriminant of y^2 + b y + c
        let b = f8.coeff(1);
        let c = f8.coeff(0);
        assert!(&b * &b - BigInt::from(4) * c < BigInt::zero());
        let t5 = riley_two_bridge_parabolic(5, 1).unwrap();
        assert_eq!(t5.degree(), Some(2));
        assert!(t5.is_monic());
    }

    #[test]
    fn alpha_lambda_small() {
        let l2 = alpha_lambda_check(2);
        assert!(l2.equal);
        assert_eq!(l2.lhs, p(&[-8, 12, -6, 1]));
        let l1 = alpha_lambda_check(1);
        assert!(l1.equal);
        assert_eq!(l1.lhs, p(&[-2, 1]));
        let l4 = alpha_lambda_check(4);
        assert!(l4.equal);
        assert_eq!(l4.lhs.degree(), Some(7));
    }

    #[test]
    fn symbolic_x_matches_matrix_entry() {
        use num_complex::Complex64;
        let samples = [
            (Complex64::new(1.3, 0.4), Complex64::new(0.7, -1.1)),
            (Complex64::new(-0.6, 0.9), Complex64::new(2.5, 0.3)),
            (Complex64::new(0.8, -0.2), Complex64::new(-1.2, 0.6)),
        ];
        for k in 1..=6 {
            let w = crate::knots::word_w(k).unwrap();
            for n in [-2, -1, 1, 2] {
                let phi = riley_poly(k, n);
                for &(s, y) in &samples {
                    let one = Complex64::new(1.0, 0.0);
                    let a = Mat2::new(s, one, Complex64::zero(), one / s);
                    let b = Mat2::new(s, Complex64::zero(), 2.0 - y, one / s);
                    let wn = word_image(&w, &a, &b).pow_unimodular(n);
                    let diff = wn.clone() * a.clone() - b * wn;
                    let expected = phi.eval_complex(s + one / s, y);
                    let scale = 1.0 + expected.norm();
                    assert!(diff.a.norm() < 1e-9 * scale && diff.d.norm() < 1e-9 * scale);
                    assert!((diff.b - expected).norm() < 1e-9 * scale, "k={k} n={n}");
                }
            }
        }
    }
}
