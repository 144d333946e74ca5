//! All complex roots of an integer polynomial: simultaneous Aberth-Ehrlich
//! iteration in double precision, then Newton polishing in double-double.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Zero;
use twofloat::TwoFloat;

use crate::algebra::{dd_abs, dd_from_bigint, dd_from_c64, dd_to_c64, ComplexDD, IntPoly};
use crate::error::{Error, Result};

const MAX_ABERTH_ITERS: usize = 2000;
const MAX_POLISH_ITERS: usize = 12;

fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn dd_coeffs(poly: &IntPoly) -> Vec<ComplexDD> {
    poly.coeffs()
        .iter()
        .map(|c| ComplexDD::new(dd_from_bigint(c), TwoFloat::from(0.0)))
        .collect()
}

fn eval_dd_with_derivative(coeffs: &[ComplexDD], z: ComplexDD) -> (ComplexDD, ComplexDD) {
    let mut p = ComplexDD::zero();
    let mut dp = ComplexDD::zero();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Simultaneous iteration on the monic rescaling of `poly`.
fn aberth(poly: &IntPoly) -> Result<Vec<Complex64>> {
    let deg = poly.degree().unwrap_or(0);
    let raw = poly.to_complex();
    let lead = raw[deg];
    let coeffs: Vec<Complex64> = raw.iter().map(|c| c / lead).collect();

    // Fujiwara-style root radius bound; initial guesses sit on that circle.
    let bound = (0..deg)
        .map(|i| coeffs[i].norm().powf(1.0 / (deg - i) as f64))
        .fold(0.0, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(bound, 2.0 * PI * k as f64 / deg as f64 + 0.4))
        .collect();

    for _ in 0..MAX_ABERTH_ITERS {
        let mut biggest_step: f64 = 0.0;
        for k in 0..deg {
            let (p, dp) = eval_with_derivative(&coeffs, z[k]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                biggest_step = biggest_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if biggest_step < 1e-15 {
            return Ok(z);
        }
    }
    // Slow convergence is normal near multiple roots; accept if residuals are small.
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let tolerable = z.iter().all(|&r| {
        let (p, _) = eval_with_derivative(&coeffs, r);
        p.norm() <= 1e-6 * scale * (1.0 + r.norm()).powi(deg as i32)
    });
    if tolerable && z.iter().all(|r| r.is_finite()) {
        Ok(z)
    } else {
        Err(Error::RootFinding { poly: poly.clone() })
    }
}

/// Newton in double-double; keeps the best iterate seen.
fn polish(coeffs: &[ComplexDD], start: Complex64) -> Complex64 {
    let mut z = dd_from_c64(start);
    let mut best = start;
    let mut best_res = dd_abs(eval_dd_with_derivative(coeffs, z).0);
    for _ in 0..MAX_POLISH_ITERS {
        let (p, dp) = eval_dd_with_derivative(coeffs, z);
        if dd_abs(dp) == 0.0 {
            break;
        }
        z -= p / dp;
        let candidate = dd_to_c64(z);
        let res = dd_abs(eval_dd_with_derivative(coeffs, dd_from_c64(candidate)).0);
        if res < best_res {
            best_res = res;
            best = candidate;
        }
        if res == 0.0 {
            break;
        }
    }
    // Prefer an exactly real root when the imaginary part is noise.
    if best.im != 0.0 && best.im.abs() <= 1e-12 * best.re.abs().max(1.0) {
        let real = Complex64::new(best.re, 0.0);
        let res = dd_abs(eval_dd_with_derivative(coeffs, dd_from_c64(real)).0);
        if res <= best_res {
            return real;
        }
    }
    best
}

/// Replace the lower half-plane roots by exact conjugates of the upper ones.
fn enforce_conjugate_symmetry(roots: Vec<Complex64>) -> Vec<Complex64> {
    let (real, rest): (Vec<Complex64>, Vec<Complex64>) = roots.iter().partition(|r| r.im == 0.0);
    let upper: Vec<Complex64> = rest.iter().copied().filter(|r| r.im > 0.0).collect();
    let lower_count = rest.len() - upper.len();
    if upper.len() != lower_count {
        return roots;
    }
    let mut out = real;
    for u in upper {
        out.push(u);
        out.push(u.conj());
    }
    out
}

/// All `deg` complex roots (with repetition), polished, in `(re, im)` order.
pub fn all_roots(poly: &IntPoly) -> Result<Vec<Complex64>> {
    let Some(deg) = poly.degree() else {
        return Err(Error::InvalidSpec(
            "the zero polynomial has no root set".into(),
        ));
    };
    if deg == 0 {
        return Ok(Vec::new());
    }
    let dd = dd_coeffs(poly);
    let mut roots = if deg == 1 {
        let c0 = dd_to_c64(dd[0]);
        let c1 = dd_to_c64(dd[1]);
        vec![-c0 / c1]
    } else {
        aberth(poly)?
    };
    roots = roots.into_iter().map(|r| polish(&dd, r)).collect();
    roots = enforce_conjugate_symmetry(roots);
    sort_roots(&mut roots);
    Ok(roots)
}

pub fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// `|p(z)|` evaluated in double-double at the double-precision point `z`.
pub fn residual_dd(poly: &IntPoly, z: Complex64) -> f64 {
    dd_abs(poly.eval_dd(dd_from_c64(z)))
}

/// Groups of roots closer than `tol` (single linkage), as (representative, multiplicity).
pub fn cluster(roots: &[Complex64], tol: f64) -> Vec<(Complex64, usize)> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (roots[i] - roots[j]).norm() < tol {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[rj] = ri;
                }
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Complex64>)> = Vec::new();
    for (i, &z) in roots.iter().enumerate() {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, members)) => members.push(z),
            None => groups.push((r, vec![z])),
        }
    }
    let mut out: Vec<(Complex64, usize)> = groups
        .into_iter()
        .map(|(_, members)| {
            let mean = members.iter().sum::<Complex64>() / members.len() as f64;
            (mean, members.len())
        })
        .collect();
    out.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    out
}
