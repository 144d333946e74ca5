//! Batch verification over the grid `J(k, 2n)`, `1 <= k <= kmax`,
//! `1 <= |n| <= nmax`: one pass/fail verdict per criterion.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::IntPoly;
use crate::analysis::{assertion_class, gcd_lemma_check, AssertionClass, DetectOptions, GcdCheck};
use crate::arith::{
    cheb_sum_mod2, chebyshev_cyclotomic_bridge, cyclotomic_gf2, gf2_irreducible, in_p2, is_prime,
    pow_mod, riley_mod2_check, sophie_germain_sufficient,
};
use crate::chebyshev::unit_identity_holds;
use crate::error::Result;
use crate::knots::{genus, is_fibered, word_w, KnotSpec};
use crate::parabolic::{real_root_gate, solve_parabolic, ParabolicRep};
use crate::riley::{alpha_lambda_check, riley_at_2_raw, riley_matrix_oracle};
use crate::twisted::{
    closed_form_extremes, reciprocity_check, wada_polynomial, Extremes, TwistedAlex,
};

/// Largest `d` for which the mod-2 Chebyshev irreducibility implication is checked.
const BRIDGE_DMAX: u64 = 50;
/// Bound for the Sophie-Germain-style sufficient condition.
const SOPHIE_GERMAIN_PMAX: u64 = 1000;
/// Largest `p` for the two-bridge mod-2 check.
const TWO_BRIDGE_PMAX: i64 = 13;

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub kmax: i64,
    pub nmax: i64,
    pub pmax: u64,
    pub opts: DetectOptions,
    /// Closed-form `phi_{k,2n}(2, y)` under test against the matrix oracle.
    pub riley: fn(i64, i64) -> IntPoly,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            kmax: 8,
            nmax: 4,
            pmax: 200,
            opts: DetectOptions::default(),
            riley: riley_at_2_raw,
        }
    }
}

impl VerifyConfig {
    pub fn grid(&self) -> Vec<KnotSpec> {
        let mut out = Vec::new();
        for k in 1..=self.kmax {
            for n in (-self.nmax..=self.nmax).filter(|&n| n != 0) {
                out.push(KnotSpec::double_twist(k, n).expect("valid grid spec"));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl CriterionResult {
    fn new(id: u8, name: &'static str) -> Self {
        Self {
            id,
            name,
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub kmax: i64,
    pub nmax: i64,
    pub pmax: u64,
    pub criteria: Vec<CriterionResult>,
    pub elapsed_secs: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(CriterionResult::passed)
    }

    pub fn criterion(&self, id: u8) -> Option<&CriterionResult> {
        self.criteria.iter().find(|c| c.id == id)
    }
}

struct RootData {
    rep: ParabolicRep,
    tap: Result<TwistedAlex>,
    closed: Result<Extremes>,
}

struct SpecData {
    spec: KnotSpec,
    roots: Result<Vec<RootData>>,
    gcd: Result<Vec<GcdCheck>>,
}

fn compute(spec: KnotSpec, opts: &DetectOptions) -> SpecData {
    let roots = solve_parabolic(&spec, &opts.solve).map(|reps| {
        reps.into_par_iter()
            .map(|rep| RootData {
                tap: wada_polynomial(&spec, &rep),
                closed: closed_form_extremes(&spec, rep.y),
                rep,
            })
            .collect()
    });
    SpecData {
        spec,
        roots,
        gcd: gcd_lemma_check(&spec),
    }
}

fn rel_close(a: num_complex::Complex64, b: num_complex::Complex64, rel: f64) -> bool {
    (a - b).norm() <= rel * b.norm()
}

pub fn run(config: &VerifyConfig) -> VerifyReport {
    let start = Instant::now();
    let grid = config.grid();
    let data: Vec<SpecData> = grid
        .par_iter()
        .map(|&spec| compute(spec, &config.opts))
        .collect();

    let criteria = vec![
        genus_criterion(&data),
        fibered_criterion(&data, config.opts.monic_tol),
        closed_form_criterion(&data),
        oracle_criterion(config),
        mod2_criterion(&grid),
        number_theory_criterion(config.pmax),
        residual_criterion(&data, config),
        structural_criterion(&data, config.kmax),
    ];
    VerifyReport {
        kmax: config.kmax,
        nmax: config.nmax,
        pmax: config.pmax,
        criteria,
        elapsed_secs: start.elapsed().as_secs_f64(),
    }
}

fn genus_criterion(data: &[SpecData]) -> CriterionResult {
    let mut c = CriterionResult::new(1, "genus detection");
    for d in data {
        let g = genus(&d.spec).expect("double-twist spec") as i64;
        let roots = match &d.roots {
            Ok(r) => r,
            Err(e) => {
                c.check(false, || format!("{}: {e}", d.spec));
                continue;
            }
        };
        if roots.is_empty() {
            c.check(g == 0, || {
                format!("{}: no parabolic roots but genus {g}", d.spec)
            });
        }
        for r in roots {
            match &r.tap {
                Ok(tap) => c.check(
                    tap.span == 4 * g - 2 && tap.lead.norm() > 1e-8 && tap.trail.norm() > 1e-8,
                    || {
                        format!(
                            "{} y={}: span {} lead {} trail {}, genus {g}",
                            d.spec, r.rep.y, tap.span, tap.lead, tap.trail
                        )
                    },
                ),
                Err(e) => c.check(false, || format!("{} y={}: {e}", d.spec, r.rep.y)),
            }
        }
    }
    c
}

fn fibered_criterion(data: &[SpecData], monic_tol: f64) -> CriterionResult {
    let mut c = CriterionResult::new(2, "fiberedness detection");
    for d in data {
        let Ok(roots) = &d.roots else {
            c.check(false, || format!("{}: no roots", d.spec));
            continue;
        };
        let taps: Vec<&TwistedAlex> = roots.iter().filter_map(|r| r.tap.as_ref().ok()).collect();
        if taps.len() != roots.len() {
            c.check(false, || format!("{}: twisted polynomial failed", d.spec));
            continue;
        }
        let fibered = is_fibered(&d.spec).expect("double-twist spec");
        let all_monic = taps.iter().all(|t| t.is_monic(monic_tol));
        let some_far = taps.iter().any(|t| (t.lead - 1.0).norm() > 1e-6);
        match (fibered, assertion_class(&d.spec)) {
            (true, _) => c.check(all_monic, || {
                format!("{}: fibered but not monic at every root", d.spec)
            }),
            (false, AssertionClass::Asserted) => c.check(some_far, || {
                format!("{}: non-fibered but no root has |lead - 1| > 1e-6", d.spec)
            }),
            (false, AssertionClass::ReportOnly) => c.notes.push(format!(
                "{} report-only: monic at every root = {all_monic}",
                d.spec
            )),
        }
    }
    c
}

fn closed_form_criterion(data: &[SpecData]) -> CriterionResult {
    let mut c = CriterionResult::new(3, "closed-form extremes");
    for d in data {
        let Ok(roots) = &d.roots else {
            c.check(false, || format!("{}: no roots", d.spec));
            continue;
        };
        for r in roots {
            match (&r.tap, &r.closed) {
                (Ok(t), Ok(e)) => c.check(
                    t.span == e.span
                        && rel_close(t.lead, e.lead, 1e-7)
                        && rel_close(t.trail, e.trail, 1e-7),
                    || {
                        format!(
                            "{} y={}: computed ({}, {}, {}) vs closed form ({}, {}, {})",
                            d.spec, r.rep.y, t.lead, t.trail, t.span, e.lead, e.trail, e.span
                        )
                    },
                ),
                (Err(e), _) | (_, Err(e)) => {
                    c.check(false, || format!("{} y={}: {e}", d.spec, r.rep.y))
                }
            }
        }
    }
    c
}

fn oracle_criterion(config: &VerifyConfig) -> CriterionResult {
    let mut c = CriterionResult::new(4, "Riley oracle equivalence");
    let kmax = config.kmax.max(1) + 1;
    let cases: Vec<(i64, i64)> = (1..=kmax)
        .flat_map(|k| {
            (-config.nmax..=config.nmax)
                .filter(|&n| n != 0)
                .map(move |n| (k, n))
        })
        .collect();
    let results: Vec<(i64, i64, bool, Option<bool>)> = cases
        .par_iter()
        .map(|&(k, n)| {
            let closed = (config.riley)(k, n);
            let oracle = riley_matrix_oracle(&word_w(k).expect("k >= 1"), n).b;
            let equal = closed == oracle;
            let degree = (k % 2 == 0).then(|| {
                let p = (4 * (k / 2) * n - 1).unsigned_abs();
                closed.degree() == Some(((p - 1) / 2) as usize)
            });
            (k, n, equal, degree)
        })
        .collect();
    for (k, n, equal, degree) in results {
        c.check(equal, || {
            format!(
                "J({k},{}): closed form differs from the matrix product",
                2 * n
            )
        });
        if let Some(ok) = degree {
            c.check(ok, || {
                format!("J({k},{}): degree differs from (|4mn-1|-1)/2", 2 * n)
            });
        }
    }
    c
}

fn mod2_criterion(grid: &[KnotSpec]) -> CriterionResult {
    let mut c = CriterionResult::new(5, "mod-2 identity");
    let mut specs: Vec<KnotSpec> = grid.to_vec();
    for p in (3..=TWO_BRIDGE_PMAX).step_by(2) {
        for q in 1..p {
            if let Ok(s) = KnotSpec::two_bridge(p, q) {
                specs.push(s);
            }
        }
    }
    for spec in specs {
        match riley_mod2_check(&spec) {
            Ok(ok) => c.check(ok, || {
                format!("{spec}: phi mod 2 differs from S_d + S_(d-1)")
            }),
            Err(e) => c.check(false, || format!("{spec}: {e}")),
        }
    }
    c
}

fn order_of_two_brute(p: u64) -> u64 {
    (1..p).find(|&e| pow_mod(2, e, p) == 1).unwrap_or(p)
}

fn number_theory_criterion(pmax: u64) -> CriterionResult {
    let mut c = CriterionResult::new(6, "number theory");
    for p in (3..pmax).step_by(2).filter(|&p| is_prime(p)) {
        let member = in_p2(p).unwrap_or(false);
        let brute = order_of_two_brute(p) == p - 1;
        let cyclo = gf2_irreducible(&cyclotomic_gf2(p).expect("odd prime"));
        c.check(member == brute && member == cyclo, || {
            format!(
                "p={p}: order test {member}, brute force {brute}, cyclotomic irreducible {cyclo}"
            )
        });
        let d = (p - 1) / 2;
        if member && d <= BRIDGE_DMAX {
            c.check(gf2_irreducible(&cheb_sum_mod2(d as usize)), || {
                format!("p={p}: S_d + S_(d-1) reducible mod 2")
            });
        }
    }
    for d in 1..=BRIDGE_DMAX as usize {
        c.check(chebyshev_cyclotomic_bridge(d), || {
            format!("d={d}: cyclotomic bridge fails")
        });
    }
    for p in (3..SOPHIE_GERMAIN_PMAX).step_by(2).filter(|&p| is_prime(p)) {
        if sophie_germain_sufficient(p) {
            c.check(in_p2(p).unwrap_or(false), || {
                format!("p={p}: sufficient condition holds but 2 is not primitive")
            });
        }
    }
    c
}

fn residual_criterion(data: &[SpecData], config: &VerifyConfig) -> CriterionResult {
    let mut c = CriterionResult::new(7, "residuals");
    let opts = &config.opts.solve;
    for d in data {
        let roots = match &d.roots {
            Ok(r) => r,
            Err(e) => {
                c.check(false, || format!("{}: {e}", d.spec));
                continue;
            }
        };
        let scale = crate::riley::riley_parabolic(&d.spec)
            .map(|p| p.max_abs_coeff_f64())
            .unwrap_or(f64::NAN);
        for r in roots {
            c.check(
                r.rep.phi_residual <= opts.phi_tol * scale
                    && r.rep.matrix_residual <= opts.matrix_tol,
                || {
                    format!(
                        "{} y={}: residuals {:e}, {:e}",
                        d.spec, r.rep.y, r.rep.phi_residual, r.rep.matrix_residual
                    )
                },
            );
        }
    }
    c
}

fn structural_criterion(data: &[SpecData], kmax: i64) -> CriterionResult {
    let mut c = CriterionResult::new(8, "structural invariants");
    for i in -10..=10 {
        c.check(unit_identity_holds(i), || {
            format!("Chebyshev unit identity fails at i={i}")
        });
    }
    for k in 1..=kmax.max(1) + 1 {
        c.check(alpha_lambda_check(k).equal, || {
            format!("alpha/lambda identity fails at k={k}")
        });
    }
    for d in data {
        let Ok(roots) = &d.roots else {
            c.check(false, || format!("{}: no roots", d.spec));
            continue;
        };
        for r in roots {
            if let Ok(t) = &r.tap {
                let defect = reciprocity_check(t);
                c.check(defect < 1e-8, || {
                    format!("{} y={}: reciprocity defect {defect:e}", d.spec, r.rep.y)
                });
            }
        }
        let reps: Vec<ParabolicRep> = roots.iter().map(|r| r.rep.clone()).collect();
        let gate = real_root_gate(&reps);
        c.check(gate.is_ok(), || {
            format!("{}: {}", d.spec, gate.unwrap_err())
        });
        match &d.gcd {
            Ok(checks) => {
                for g in checks {
                    c.check(g.min_distance.is_none_or(|x| x > 1e-6), || {
                        format!("{}: {:?} distance {:?}", d.spec, g.target, g.min_distance)
                    });
                }
            }
            Err(e) => c.check(false, || format!("{}: {e}", d.spec)),
        }
    }
    c
}
