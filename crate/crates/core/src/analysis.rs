//! Genus and fiberedness read off the twisted Alexander polynomials at all
//! parabolic representations, and numeric no-common-root checks backing the
//! non-degeneracy of the extreme coefficients.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::IntPoly;
use crate::arith::{in_p2, is_prime};
use crate::chebyshev::ratio_tn;
use crate::error::{Error, Result};
use crate::knots::KnotSpec;
use crate::parabolic::{all_roots, solve_parabolic, SolveOptions};
use crate::riley::{riley_parabolic, trace_at_2};
use crate::twisted::{reciprocity_check, wada_polynomial, MONIC_TOL};

/// Smallest root separation accepted by [`gcd_lemma_check`].
pub const GCD_DISTANCE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AssertionClass {
    /// Fiberedness detection is a theorem for this knot.
    Asserted,
    /// Detection is reported but not claimed.
    ReportOnly,
}

impl AssertionClass {
    pub fn as_str(self) -> &'static str {
        match self {
            AssertionClass::Asserted => "asserted",
            AssertionClass::ReportOnly => "report-only",
        }
    }
}

/// `|4mn - 1|` for `J(2m, 2n)`.
pub fn even_k_prime(spec: &KnotSpec) -> Option<u64> {
    match *spec {
        KnotSpec::DoubleTwist { k, n } if k % 2 == 0 => Some((4 * (k / 2) * n - 1).unsigned_abs()),
        _ => None,
    }
}

/// Asserted iff `k` is odd, `k = 2`, or `|4mn - 1|` is a prime in `P2`.
pub fn assertion_class(spec: &KnotSpec) -> AssertionClass {
    let asserted = match *spec {
        KnotSpec::DoubleTwist { k, .. } if k % 2 == 1 || k == 2 => true,
        KnotSpec::DoubleTwist { .. } => {
            let p = even_k_prime(spec).expect("k even");
            is_prime(p) && in_p2(p).unwrap_or(false)
        }
        KnotSpec::TwoBridge { .. } => false,
    };
    if asserted {
        AssertionClass::Asserted
    } else {
        AssertionClass::ReportOnly
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DetectOptions {
    pub solve: SolveOptions,
    pub monic_tol: f64,
}

impl Default for DetectOptions {
    fn default() -> Self {
        Self {
            solve: SolveOptions::default(),
            monic_tol: MONIC_TOL,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootRecord {
    pub y: Complex64,
    pub multiplicity: usize,
    pub span: i64,
    pub lead: Complex64,
    pub trail: Complex64,
    pub monic: bool,
    pub reciprocity_defect: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DetectionReport {
    pub spec: KnotSpec,
    pub roots: Vec<RootRecord>,
    pub detected_genus: u32,
    pub detected_fibered: bool,
    pub assertion_class: AssertionClass,
    /// `|4mn - 1|` when `k = 2m`.
    pub p: Option<u64>,
    pub in_p2: Option<bool>,
}

pub fn detect(spec: &KnotSpec) -> Result<DetectionReport> {
    detect_with(spec, &DetectOptions::default())
}

/// Genus from the largest span (`span = 4g - 2`), fiberedness from monicity
/// at every root. Without parabolic roots the Riley polynomial is constant,
/// which only happens for the trivial knot: genus 0, fibered.
pub fn detect_with(spec: &KnotSpec, opts: &DetectOptions) -> Result<DetectionReport> {
    let reps = solve_parabolic(spec, &opts.solve)?;
    let roots = reps
        .par_iter()
        .map(|rep| {
            let tap = wada_polynomial(spec, rep)?;
            Ok(RootRecord {
                y: rep.y,
                multiplicity: rep.multiplicity,
                span: tap.span,
                lead: tap.lead,
                trail: tap.trail,
                monic: tap.is_monic(opts.monic_tol),
                reciprocity_defect: reciprocity_check(&tap),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let detected_genus = match roots.iter().map(|r| r.span).max() {
        None => 0,
        Some(span) if span >= 2 && (span + 2) % 4 == 0 => ((span + 2) / 4) as u32,
        Some(span) => {
            return Err(Error::TheoremViolation(format!(
                "{spec}: largest span {span} is not of the form 4g - 2"
            )))
        }
    };
    let p = even_k_prime(spec);
    Ok(DetectionReport {
        spec: *spec,
        detected_fibered: roots.iter().all(|r| r.monic),
        roots,
        detected_genus,
        assertion_class: assertion_class(spec),
        p,
        in_p2: p.map(|p| is_prime(p) && in_p2(p).unwrap_or(false)),
    })
}

/// Which polynomial in `y` is compared against `phi_K(2, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GcdTarget {
    /// `(T_l(lambda) - 2) / (lambda - 2)` with `l = |n|`.
    TraceRatio,
    /// `(T_j(y) - 2) / (y - 2)`.
    YRatio,
    /// `(T_l(lambda) - 2) / (lambda - 2) - 1`.
    TraceRatioMinusOne,
    /// `(T_j(y) - 2) / (y - 2) - 1`.
    YRatioMinusOne,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GcdCheck {
    pub target: GcdTarget,
    /// Index of the Chebyshev ratio used.
    pub index: i64,
    /// Smallest distance between a root of `phi` and a root of the target;
    /// `None` when the target is constant.
    pub min_distance: Option<f64>,
}

fn min_root_distance(phi_roots: &[Complex64], other: &IntPoly) -> Result<Option<f64>> {
    if other.degree().unwrap_or(0) == 0 {
        return Ok(None);
    }
    let roots = all_roots(other)?;
    let d = phi_roots
        .iter()
        .flat_map(|a| roots.iter().map(move |b| (a - b).norm()))
        .fold(f64::INFINITY, f64::min);
    Ok(Some(d))
}

/// Checks that `phi_K(2, y)` shares no root with the extreme-coefficient
/// polynomials that apply to `spec`. Two-bridge specs yield no checks.
pub fn gcd_lemma_check(spec: &KnotSpec) -> Result<Vec<GcdCheck>> {
    let KnotSpec::DoubleTwist { k, n } = *spec else {
        return Ok(Vec::new());
    };
    let m = k / 2;
    let l = n.abs();
    let one = IntPoly::constant(1);
    let lambda = trace_at_2(k);
    let trace_ratio = || ratio_tn(l).compose(&lambda);

    let mut targets: Vec<(GcdTarget, i64, IntPoly)> = Vec::new();
    if k % 2 == 0 {
        targets.push((GcdTarget::TraceRatio, l, trace_ratio()));
        targets.push((GcdTarget::YRatio, m, ratio_tn(m)));
        if k == 2 && l > 1 {
            targets.push((GcdTarget::TraceRatioMinusOne, l, &trace_ratio() - &one));
        }
    } else {
        let j = if n > 0 { m } else { m + 1 };
        if j >= 1 {
            targets.push((GcdTarget::YRatio, j, ratio_tn(j)));
        }
        if j > 1 {
            targets.push((GcdTarget::YRatioMinusOne, j, &ratio_tn(j) - &one));
        }
    }

    let phi_roots = all_roots(&riley_parabolic(spec)?)?;
    let mut out = Vec::new();
    for (target, index, poly) in targets {
        let min_distance = min_root_distance(&phi_roots, &poly)?;
        if let Some(d) = min_distance {
            if d <= GCD_DISTANCE_TOL {
                return Err(Error::TheoremViolation(format!(
                    "{spec}: phi shares a root with the {target:?} polynomial (distance {d:e})"
                )));
            }
        }
        out.push(GcdCheck {
            target,
            index,
            min_distance,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadPolyCheck {
    pub deg_h: usize,
    pub deg_phi: usize,
    pub expected: usize,
    pub ok: bool,
}

/// `h(y) = ratio_n(lambda(y)) * ratio_m(y)` for `J(2m, 2n)`, `m > 1`, `n > 0`:
/// `deg h = 2mn - (m + 1) < deg phi`.
pub fn leadpoly_degree_check(m: i64, n: i64) -> Result<LeadPolyCheck> {
    if m <= 1 || n <= 0 {
        return Err(Error::InvalidSpec(format!(
            "leading-coefficient degree check needs m > 1 and n > 0, got m = {m}, n = {n}"
        )));
    }
    let k = 2 * m;
    let h = &ratio_tn(n).compose(&trace_at_2(k)) * &ratio_tn(m);
    let deg_h = h.degree().unwrap_or(0);
    let deg_phi = riley_parabolic(&KnotSpec::double_twist(k, n)?)?
        .degree()
        .unwrap_or(0);
    let expected = (2 * m * n - (m + 1)) as usize;
    Ok(LeadPolyCheck {
        deg_h,
        deg_phi,
        expected,
        ok: deg_h == expected && deg_h < deg_phi,
    })
}
