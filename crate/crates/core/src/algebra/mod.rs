//! Ring arithmetic: exact integer polynomials in one and two variables,
//! GF(2) polynomials, complex Laurent polynomials and 2x2 matrices.

mod bi_poly;
mod gf2_poly;
mod int_poly;
mod laurent;
mod mat2;
mod ring;

pub use bi_poly::BiPoly;
pub use gf2_poly::GF2Poly;
pub use int_poly::IntPoly;
pub use laurent::{LaurentPoly, ZERO_THRESHOLD};
pub use mat2::{laurent_det2, Mat2};
pub use ring::{dd_abs, dd_from_bigint, dd_from_c64, dd_to_c64, ComplexDD, Ring};

use num_complex::Complex64;

/// Coefficientwise reduction `Z[y] -> GF(2)[y]`.
pub fn mod2_reduce(p: &IntPoly) -> GF2Poly {
    GF2Poly::from_int_poly(p)
}

/// Horner evaluation of a one-variable polynomial.
pub fn eval_complex(p: &IntPoly, y: Complex64) -> Complex64 {
    p.eval_complex(y)
}

/// Horner evaluation of a two-variable polynomial at `(x, y)`.
pub fn eval_complex_xy(p: &BiPoly, x: Complex64, y: Complex64) -> Complex64 {
    p.eval_complex(x, y)
}
