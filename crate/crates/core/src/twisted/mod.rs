//! Free differential calculus, the map `Phi = rho (x) f` into 2x2 Laurent
//! matrices, and Wada's twisted Alexander polynomial.

mod group_ring;

pub use group_ring::{fox_derivative, GroupRingElt};

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{dd_from_c64, dd_to_c64, laurent_det2, ComplexDD, LaurentPoly, Mat2};
use crate::chebyshev::ratio_tn;
use crate::error::{Error, Result};
use crate::knots::{Gen, GroupWord, KnotSpec};
use crate::parabolic::ParabolicRep;
use crate::riley::{trace_at_2, word_image};

/// Largest acceptable `|remainder| / max|numerator|` when dividing by `det Phi(1 - b)`.
pub const DIVISION_TOL: f64 = 1e-9;
/// Default tolerance for `lead = trail = 1`.
pub const MONIC_TOL: f64 = 1e-8;

/// Wada's invariant, shifted so the lowest exponent is 0.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistedAlex {
    pub poly: LaurentPoly,
    pub span: i64,
    pub lead: Complex64,
    pub trail: Complex64,
}

impl TwistedAlex {
    pub fn from_poly(poly: &LaurentPoly) -> Self {
        let poly = poly.shifted_to_zero();
        Self {
            span: poly.span(),
            lead: poly.lead(),
            trail: poly.trail(),
            poly,
        }
    }

    pub fn is_monic(&self, tol: f64) -> bool {
        (self.lead - 1.0).norm() <= tol && (self.trail - 1.0).norm() <= tol
    }
}

/// Predicted extreme coefficients and span of the normalized invariant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Extremes {
    pub lead: Complex64,
    pub trail: Complex64,
    pub span: i64,
}

/// `Phi(elt)`: a word `g` goes to `rho(g) t^e` with `e` the total exponent sum.
/// Word images are formed in double-double and rounded at the end.
pub fn phi_map(elt: &GroupRingElt, a: &Mat2<Complex64>, b: &Mat2<Complex64>) -> Mat2<LaurentPoly> {
    let a = a.map(|z| dd_from_c64(*z));
    let b = b.map(|z| dd_from_c64(*z));
    let mut by_degree: BTreeMap<i64, Mat2<ComplexDD>> = BTreeMap::new();
    for (word, c) in elt.terms() {
        let image = word_image(word, &a, &b).scale(&ComplexDD::new((c as f64).into(), 0.0.into()));
        let slot = by_degree.entry(word.t_degree()).or_insert_with(Mat2::zero);
        *slot = slot.clone() + image;
    }
    let Some((&low, _)) = by_degree.iter().next() else {
        return Mat2::new(
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
        );
    };
    let high = *by_degree.keys().next_back().expect("nonempty");
    let entry = |pick: fn(&Mat2<ComplexDD>) -> ComplexDD| {
        let coeffs = (low..=high)
            .map(|e| {
                by_degree
                    .get(&e)
                    .map_or(Complex64::zero(), |m| dd_to_c64(pick(m)))
            })
            .collect();
        LaurentPoly::new(low, coeffs)
    };
    Mat2::new(
        entry(|m| m.a),
        entry(|m| m.b),
        entry(|m| m.c),
        entry(|m| m.d),
    )
}

/// `det Phi(dr/da) / det Phi(1 - b)` for the representation `a -> A`, `b -> B`.
pub fn wada_with_matrices(
    spec: &KnotSpec,
    a: &Mat2<Complex64>,
    b: &Mat2<Complex64>,
) -> Result<TwistedAlex> {
    let relator = spec.presentation().relator;
    let num = laurent_det2(&phi_map(&fox_derivative(&relator, Gen::A), a, b));
    let one_minus_b = GroupRingElt::one() - GroupRingElt::gen(Gen::B);
    let den = laurent_det2(&phi_map(&one_minus_b, a, b));
    let quotient = num.div_exact(&den, DIVISION_TOL)?;
    if quotient.is_zero() {
        return Err(Error::Internal(format!(
            "{spec}: twisted Alexander polynomial vanished"
        )));
    }
    Ok(TwistedAlex::from_poly(&quotient))
}

pub fn wada_polynomial(spec: &KnotSpec, rep: &ParabolicRep) -> Result<TwistedAlex> {
    wada_with_matrices(spec, &rep.a, &rep.b)
}

fn ratio_at(n: i64, z: Complex64) -> Complex64 {
    crate::algebra::eval_complex(&ratio_tn(n), z)
}

/// Extreme coefficients and span predicted by the closed forms for `J(k, 2n)`.
pub fn closed_form_extremes(spec: &KnotSpec, y: Complex64) -> Result<Extremes> {
    let KnotSpec::DoubleTwist { k, n } = *spec else {
        return Err(Error::InvalidSpec(format!(
            "{spec}: closed-form extremes cover J(k,2n) only"
        )));
    };
    let m = k / 2;
    let l = n.abs();
    let (c, span) = if k % 2 == 0 {
        let lambda = crate::algebra::eval_complex(&trace_at_2(k), y);
        (ratio_at(l, lambda) * ratio_at(m, y), 2)
    } else if n < 0 {
        (ratio_at(m + 1, y), 4 * l - 2)
    } else if m > 0 {
        (ratio_at(m, y), 4 * n - 2)
    } else if n > 1 {
        (Complex64::one(), 4 * n - 6)
    } else {
        return Err(Error::InvalidSpec(
            "J(1,2) is the trivial knot and has no parabolic representation".into(),
        ));
    };
    Ok(Extremes {
        lead: c,
        trail: c,
        span,
    })
}

/// `lead = trail = 1` within [`MONIC_TOL`].
pub fn monicity(tap: &TwistedAlex) -> bool {
    tap.is_monic(MONIC_TOL)
}

/// Palindrome defect `max |c_i - c_{span-i}|`.
pub fn reciprocity_check(tap: &TwistedAlex) -> f64 {
    let c = tap.poly.coeffs();
    c.iter()
        .zip(c.iter().rev())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn word(parts: &[(Gen, i64)]) -> GroupWord {
    GroupWord::from_syllables(parts.iter().copied())
}

/// Closed expression for `dw/da`:
/// `-(ba^-1 + ... + (ba^-1)^m) + (ba^-1)^m (1 + ... + (b^-1 a)^(m-1)) b^-1` for `k = 2m`,
/// `-(ba^-1 + ... + (ba^-1)^m) + (ba^-1)^m b (1 + ab^-1 + ... + (ab^-1)^m)` for `k = 2m + 1`.
pub fn fox_w_closed_form(k: i64) -> GroupRingElt {
    let m = k / 2;
    let ba = word(&[(Gen::B, 1), (Gen::A, -1)]);
    let head = ba.pow(m);
    let mut out = -(GroupRingElt::geometric(&ba, m as usize + 1) - GroupRingElt::one());
    let tail = if k % 2 == 0 {
        let b_inv = GroupRingElt::from_word(word(&[(Gen::B, -1)]));
        let sum = GroupRingElt::geometric(&word(&[(Gen::B, -1), (Gen::A, 1)]), m as usize);
        (&sum * &b_inv).left_mul_word(&head)
    } else {
        let sum = GroupRingElt::geometric(&word(&[(Gen::A, 1), (Gen::B, -1)]), m as usize + 1);
        sum.left_mul_word(&head.concat(&word(&[(Gen::B, 1)])))
    };
    out = out + tail;
    out
}

/// Closed expression for `dr/da` with `r = w^n a w^-n b^-1`:
/// `w^n (1 + (1 - a)(w^-1 + ... + w^-n) dw/da)` for `n > 0`,
/// `w^-l (1 - (1 - a)(1 + w + ... + w^(l-1)) dw/da)` for `n = -l < 0`.
pub fn fox_relator_closed_form(k: i64, n: i64) -> GroupRingElt {
    let w = crate::knots::word_w(k).expect("k >= 1");
    let dw = fox_w_closed_form(k);
    let one_minus_a = GroupRingElt::one() - GroupRingElt::gen(Gen::A);
    let l = n.unsigned_abs() as usize;
    if n > 0 {
        let w_inv = w.inverse();
        let sum = GroupRingElt::geometric(&w_inv, l + 1) - GroupRingElt::one();
        let inner = GroupRingElt::one() + &(&one_minus_a * &sum) * &dw;
        inner.left_mul_word(&w.pow(n))
    } else {
        let sum = GroupRingElt::geometric(&w, l);
        let inner = GroupRingElt::one() - &(&one_minus_a * &sum) * &dw;
        inner.left_mul_word(&w.pow(n))
    }
}
