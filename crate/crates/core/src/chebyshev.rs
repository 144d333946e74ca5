//! The sequences `S_i` and `T_i` solving `f_{i+1} = z f_i - f_{i-1}` with
//! base pairs `(S_0, S_1) = (1, z)` and `(T_0, T_1) = (2, z)`, for every
//! integer index, over any commutative ring.

use crate::algebra::{IntPoly, Ring};

/// Run the recurrence from `(f_0, f_1)` to index `i`, backwards when `i < 0`.
fn run_recurrence<R: Ring>(i: i64, z: &R, f0: R, f1: R) -> R {
    if i >= 0 {
        let (mut prev, mut cur) = (f0, f1);
        if i == 0 {
            return prev;
        }
        for _ in 1..i {
            let next = z.clone() * cur.clone() - prev;
            prev = cur;
            cur = next;
        }
        cur
    } else {
        // f_{j-1} = z f_j - f_{j+1}
        let (mut cur, mut next) = (f0, f1);
        for _ in 0..(-i) {
            let before = z.clone() * cur.clone() - next;
            next = cur;
            cur = before;
        }
        cur
    }
}

/// `S_i(z)`.
pub fn cheb_s<R: Ring>(i: i64, z: &R) -> R {
    run_recurrence(i, z, R::one(), z.clone())
}

/// `T_i(z)`.
pub fn cheb_t<R: Ring>(i: i64, z: &R) -> R {
    run_recurrence(i, z, R::from_i64(2), z.clone())
}

/// `(T_n(l) - 2) / (l - 2)` as an exact polynomial in `l`.
///
/// Panics if `n < 1` or if the division leaves a remainder.
pub fn ratio_tn(n: i64) -> IntPoly {
    assert!(n >= 1, "ratio_tn needs n >= 1, got {n}");
    let lambda = IntPoly::var();
    let num = cheb_t(n, &lambda) - IntPoly::constant(2);
    num.div_exact(&IntPoly::from_i64s(&[-2, 1]))
        .expect("T_n(l) - 2 is divisible by l - 2")
}

/// `S_i^2 - y S_i S_{i-1} + S_{i-1}^2 = 1` holds exactly in `Z[y]`.
pub fn unit_identity_holds(i: i64) -> bool {
    let z = IntPoly::var();
    let s = cheb_s(i, &z);
    let p = cheb_s(i - 1, &z);
    &(&(&s * &s) - &(&(&z * &s) * &p)) + &(&p * &p) == IntPoly::constant(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_complex::Complex64;

    fn y() -> IntPoly {
        IntPoly::var()
    }

    #[test]
    fn s_small_indices() {
        assert_eq!(cheb_s(2, &y()), IntPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(cheb_s(-1, &y()), IntPoly::from_i64s(&[]));
        assert_eq!(cheb_s(-2, &y()), IntPoly::from_i64s(&[-1]));
        assert_eq!(cheb_s(-3, &y()), IntPoly::from_i64s(&[0, -1]));
        assert_eq!(cheb_s(5, &2i64), 6);
    }

    #[test]
    fn s_at_two_is_index_plus_one() {
        for i in -12..=12 {
            assert_eq!(cheb_s(i, &BigInt::from(2)), BigInt::from(i + 1));
        }
    }

    #[test]
    fn t_small_indices() {
        assert_eq!(cheb_t(2, &y()), IntPoly::from_i64s(&[-2, 0, 1]));
        assert_eq!(cheb_t(0, &y()), IntPoly::from_i64s(&[2]));
        assert_eq!(cheb_t(-1, &y()), y());
        for i in 0..10 {
            assert_eq!(cheb_t(-i, &y()), cheb_t(i, &y()));
        }
    }

    #[test]
    fn ratio_small_cases() {
        assert_eq!(ratio_tn(1), IntPoly::from_i64s(&[1]));
        assert_eq!(ratio_tn(2), IntPoly::from_i64s(&[2, 1]));
        assert_eq!(ratio_tn(3).eval(&BigInt::from(2)), BigInt::from(9));
    }

    #[test]
    fn ratio_reconstructs_t() {
        let l = IntPoly::var();
        for n in 1..=30 {
            let r = ratio_tn(n);
            assert_eq!(r.degree(), Some(n as usize - 1));
            assert_eq!(r.eval(&BigInt::from(2)), BigInt::from(n * n));
            let back = &(&IntPoly::from_i64s(&[-2, 1]) * &r) + &IntPoly::constant(2);
            assert_eq!(back, cheb_t(n, &l));
        }
    }

    #[test]
    fn ratio_is_squared_geometric_sum() {
        // for l0 in [-2, 2] the roots of z^2 - l0 z + 1 are conjugate unit complexes
        for n in 1..=8 {
            let r = ratio_tn(n);
            for step in 0..=40 {
                let l0 = -2.0 + 4.0 * step as f64 / 40.0;
                let disc = Complex64::new(l0 * l0 - 4.0, 0.0).sqrt();
                let beta = (Complex64::new(l0, 0.0) + disc) / 2.0;
                let sum: Complex64 = (0..n).map(|j| beta.powi(j as i32)).sum();
                let want = sum.norm_sqr();
                let got = r.eval_complex(Complex64::new(l0, 0.0)).re;
                assert!((got - want).abs() <= 1e-9 * want.max(1.0), "n={n} l0={l0}");
            }
        }
    }

    #[test]
    fn chebyshev_unit_identity() {
        // S_i^2 - z S_i S_{i-1} + S_{i-1}^2 = 1
        let z = y();
        for i in -10..=10 {
            let s = cheb_s(i, &z);
            let p = cheb_s(i - 1, &z);
            let lhs = &(&(&s * &s) - &(&(&z * &s) * &p)) + &(&p * &p);
            assert_eq!(lhs, IntPoly::constant(1), "i = {i}");
            assert!(unit_identity_holds(i));
        }
    }
}
