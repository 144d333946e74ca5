//! Parabolic representations: roots of `phi_K(2, y)` packaged with their
//! matrices and certified residuals.

mod roots;

pub use roots::{all_roots, cluster, residual_dd, sort_roots};

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{dd_abs, dd_from_c64, ComplexDD, IntPoly, Mat2};
use crate::error::{Error, Result};
use crate::knots::KnotSpec;
use crate::riley::{riley_parabolic, word_image};

/// Tolerances for accepting a parabolic root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolveOptions {
    /// Accept `|phi(y)| <= phi_tol * max|coeff|`.
    pub phi_tol: f64,
    /// Accept `max |W^n A - B W^n| <= matrix_tol`.
    pub matrix_tol: f64,
    /// Roots closer than this are merged into one cluster.
    pub cluster_tol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            phi_tol: 1e-8,
            matrix_tol: 1e-8,
            cluster_tol: 1e-7,
        }
    }
}

/// One parabolic representation `a -> A`, `b -> B` of the knot group.
#[derive(Debug, Clone, PartialEq)]
pub struct ParabolicRep {
    pub y: Complex64,
    pub a: Mat2<Complex64>,
    pub b: Mat2<Complex64>,
    /// `|phi_K(2, y)|`, evaluated in double-double.
    pub phi_residual: f64,
    /// Largest entry of `|W^n A - B W^n|`, evaluated in double-double.
    pub matrix_residual: f64,
    /// Number of raw roots merged into this one; above 1 flags a multiple root.
    pub multiplicity: usize,
}

impl ParabolicRep {
    pub fn at(y: Complex64) -> (Mat2<Complex64>, Mat2<Complex64>) {
        let one = Complex64::one();
        let zero = Complex64::zero();
        (
            Mat2::new(one, one, zero, one),
            Mat2::new(one, zero, Complex64::new(2.0, 0.0) - y, one),
        )
    }

    pub fn is_real(&self) -> bool {
        self.y.im.abs() < 1e-8
    }
}

/// `max |W^n A - B W^n|` at the parabolic point `y`, in double-double.
pub fn matrix_residual(spec: &KnotSpec, y: Complex64) -> f64 {
    let one = ComplexDD::one();
    let zero = ComplexDD::zero();
    let a = Mat2::new(one, one, zero, one);
    let b = Mat2::new(one, zero, dd_from_c64(Complex64::new(2.0, 0.0) - y), one);
    let wn = word_image(&spec.word(), &a, &b).pow_unimodular(spec.power());
    let diff = wn.clone() * a - b * wn;
    diff.entries()
        .into_iter()
        .map(|z| dd_abs(*z))
        .fold(0.0, f64::max)
}

/// All parabolic representations of `spec`, one per distinct root of
/// `phi_K(2, y)`, sorted by `(Re y, Im y)`.
///
/// A constant Riley polynomial (the unknot `J(1, 2)`) yields no representations.
pub fn solve_parabolic(spec: &KnotSpec, opts: &SolveOptions) -> Result<Vec<ParabolicRep>> {
    let phi = riley_parabolic(spec)?;
    solve_polynomial(spec, &phi, opts)
}

/// Same as [`solve_parabolic`] with a precomputed Riley polynomial.
pub fn solve_polynomial(
    spec: &KnotSpec,
    phi: &IntPoly,
    opts: &SolveOptions,
) -> Result<Vec<ParabolicRep>> {
    let raw = all_roots(phi)?;
    let scale = phi.max_abs_coeff_f64();
    let mut reps = Vec::new();
    for (y, multiplicity) in cluster(&raw, opts.cluster_tol) {
        let phi_residual = residual_dd(phi, y);
        if phi_residual > opts.phi_tol * scale {
            return Err(Error::UncertifiedRoot {
                poly: phi.clone(),
                residual: phi_residual / scale,
                tol: opts.phi_tol,
            });
        }
        let matrix_residual = matrix_residual(spec, y);
        if matrix_residual > opts.matrix_tol {
            return Err(Error::UncertifiedRoot {
                poly: phi.clone(),
                residual: matrix_residual,
                tol: opts.matrix_tol,
            });
        }
        let (a, b) = ParabolicRep::at(y);
        reps.push(ParabolicRep {
            y,
            a,
            b,
            phi_residual,
            matrix_residual,
            multiplicity,
        });
    }
    Ok(reps)
}

/// Outcome of checking that real parabolic roots exceed 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RealRootGate {
    pub real_roots: usize,
    /// `min(Re y) - 2` over real roots; `None` when there are none.
    pub min_margin: Option<f64>,
}

pub fn real_root_gate(reps: &[ParabolicRep]) -> Result<RealRootGate> {
    let mut gate = RealRootGate {
        real_roots: 0,
        min_margin: None,
    };
    for rep in reps.iter().filter(|r| r.is_real()) {
        let margin = rep.y.re - 2.0;
        if margin <= 0.0 {
            return Err(Error::TheoremViolation(format!(
                "real parabolic root y = {} is not greater than 2",
                rep.y.re
            )));
        }
        gate.real_roots += 1;
        gate.min_margin = Some(gate.min_margin.map_or(margin, |m: f64| m.min(margin)));
    }
    Ok(gate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dt(k: i64, n: i64) -> KnotSpec {
        KnotSpec::double_twist(k, n).unwrap()
    }

    #[test]
    fn figure_eight_root() {
        let reps = solve_parabolic(&dt(2, 1), &SolveOptions::default()).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].y, Complex64::new(3.0, 0.0));
        assert!(reps[0].matrix_residual < 1e-10);
        let gate = real_root_gate(&reps).unwrap();
        assert_eq!(gate.min_margin, Some(1.0));
    }

    #[test]
    fn trefoil_roots_are_conjugate() {
        let reps = solve_parabolic(&dt(2, -1), &SolveOptions::default()).unwrap();
        assert_eq!(reps.len(), 2);
        let s3 = 3f64.sqrt() / 2.0;
        assert!((reps[0].y - Complex64::new(1.5, -s3)).norm() < 1e-14);
        assert!((reps[1].y - Complex64::new(1.5, s3)).norm() < 1e-14);
        assert_eq!(reps[0].y, reps[1].y.conj());
        assert_eq!(real_root_gate(&reps).unwrap().real_roots, 0);
    }

    #[test]
    fn residual_examples() {
        assert!(matrix_residual(&dt(2, 1), Complex64::new(3.0, 0.0)) < 1e-10);
        assert!(matrix_residual(&dt(2, 1), Complex64::new(0.0, 0.0)) > 0.1);
        assert!(matrix_residual(&dt(1, 2), Complex64::new(3.0, 0.0)) < 1e-10);
    }

    #[test]
    fn j42_real_roots_exceed_two() {
        let reps = solve_parabolic(&dt(4, 1), &SolveOptions::default()).unwrap();
        assert_eq!(reps.len(), 3);
        let gate = real_root_gate(&reps).unwrap();
        assert!(gate.real_roots >= 1);
        assert!(gate.min_margin.unwrap() > 0.0);
    }

    #[test]
    fn gate_rejects_small_real_root() {
        let (a, b) = ParabolicRep::at(Complex64::new(1.0, 0.0));
        let rep = ParabolicRep {
            y: Complex64::new(1.0, 0.0),
            a,
            b,
            phi_residual: 0.0,
            matrix_residual: 0.0,
            multiplicity: 1,
        };
        assert!(matches!(
            real_root_gate(&[rep]),
            Err(Error::TheoremViolation(_))
        ));
    }

    #[test]
    fn unknot_has_no_parabolic_reps() {
        assert!(solve_parabolic(&dt(1, 1), &SolveOptions::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn grid_residuals_are_certified() {
        let opts = SolveOptions::default();
        for k in 1..=8 {
            for n in [-4, -3, -2, -1, 1, 2, 3, 4] {
                let spec = dt(k, n);
                let phi = riley_parabolic(&spec).unwrap();
                let reps = solve_parabolic(&spec, &opts).unwrap_or_else(|e| panic!("{spec}: {e}"));
                let total: usize = reps.iter().map(|r| r.multiplicity).sum();
                assert_eq!(total, phi.degree().unwrap(), "{spec}");
                real_root_gate(&reps).unwrap();
            }
        }
    }
}
