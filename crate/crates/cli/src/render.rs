use std::str::FromStr;

use clap::ValueEnum;
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Map, Number, Value};
use tapkit_core::algebra::{IntPoly, LaurentPoly};
use tapkit_core::analysis::{detect_with, DetectOptions, DetectionReport};
use tapkit_core::arith::p2_primes;
use tapkit_core::parabolic::solve_parabolic;
use tapkit_core::riley::{riley_parabolic, riley_poly};
use tapkit_core::twisted::{reciprocity_check, wada_polynomial};
use tapkit_core::verify::{run, VerifyConfig};
use tapkit_core::{Error, KnotSpec};

use crate::Failure;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub const SWEEP_HEADER: [&str; 12] = [
    "spec",
    "k",
    "n",
    "root_index",
    "y_re",
    "y_im",
    "span",
    "lead_re",
    "lead_im",
    "monic",
    "genus_detected",
    "fibered_detected",
];

fn big(s: impl ToString) -> Value {
    Value::Number(Number::from_str(&s.to_string()).expect("integer literal"))
}

fn float(x: f64) -> Value {
    Number::from_f64(x).map_or(Value::Null, Value::Number)
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

fn csv_string(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{} - {}i", z.re, -z.im)
    } else {
        format!("{} + {}i", z.re, z.im)
    }
}

fn poly_coeffs(p: &IntPoly) -> Vec<Value> {
    p.coeffs().iter().map(big).collect()
}

pub fn riley(spec: &KnotSpec, symbolic: bool, fmt: Format) -> Result<String, Failure> {
    if symbolic {
        let KnotSpec::DoubleTwist { k, n } = *spec else {
            return Err(
                Error::InvalidSpec("symbolic x is available for J(k,2n) only".into()).into(),
            );
        };
        let phi = riley_poly(k, n);
        return Ok(match fmt {
            Format::Text => format!("φ(x,y) = {phi}\n"),
            Format::Json => {
                let terms: Vec<Value> = phi
                    .terms()
                    .map(|(i, j, c)| json!({"x": i, "y": j, "coeff": big(c)}))
                    .collect();
                json_line(
                    &json!({"x_degree": phi.degree_x(), "y_degree": phi.degree_y(), "terms": terms}),
                )
            }
            Format::Csv => csv_string(
                &["x_power", "y_power", "coeff"],
                phi.terms()
                    .map(|(i, j, c)| vec![i.to_string(), j.to_string(), c.to_string()])
                    .collect(),
            ),
        });
    }
    let phi = riley_parabolic(spec)?;
    Ok(match fmt {
        Format::Text => format!("φ(2,y) = {phi}\n"),
        Format::Json => {
            json_line(&json!({"degree": phi.degree().unwrap_or(0), "coeffs": poly_coeffs(&phi)}))
        }
        Format::Csv => csv_string(
            &["power", "coeff"],
            phi.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![i.to_string(), c.to_string()])
                .collect(),
        ),
    })
}

pub fn parabolic(spec: &KnotSpec, opts: &DetectOptions, fmt: Format) -> Result<String, Failure> {
    let reps = solve_parabolic(spec, &opts.solve)?;
    Ok(match fmt {
        Format::Text => {
            let mut s = format!("{spec}: {} parabolic representation(s)\n", reps.len());
            for (i, r) in reps.iter().enumerate() {
                s += &format!(
                    "{i:>3}  y = {}  |phi| = {:.3e}  |W^nA - BW^n| = {:.3e}{}\n",
                    complex(r.y),
                    r.phi_residual,
                    r.matrix_residual,
                    if r.multiplicity > 1 {
                        format!("  multiplicity {}", r.multiplicity)
                    } else {
                        String::new()
                    }
                );
            }
            s
        }
        Format::Json => json_line(&Value::Array(
            reps.iter()
                .enumerate()
                .map(|(i, r)| {
                    json!({
                        "index": i,
                        "y_re": float(r.y.re),
                        "y_im": float(r.y.im),
                        "phi_residual": float(r.phi_residual),
                        "matrix_residual": float(r.matrix_residual),
                        "multiplicity": r.multiplicity,
                    })
                })
                .collect(),
        )),
        Format::Csv => csv_string(
            &[
                "index",
                "y_re",
                "y_im",
                "phi_residual",
                "matrix_residual",
                "multiplicity",
            ],
            reps.iter()
                .enumerate()
                .map(|(i, r)| {
                    vec![
                        i.to_string(),
                        r.y.re.to_string(),
                        r.y.im.to_string(),
                        r.phi_residual.to_string(),
                        r.matrix_residual.to_string(),
                        r.multiplicity.to_string(),
                    ]
                })
                .collect(),
        ),
    })
}

fn laurent_text(p: &LaurentPoly) -> String {
    let terms: Vec<String> = (p.low()..=p.high())
        .rev()
        .map(|e| format!("({})t^{e}", complex(p.coeff(e))))
        .collect();
    terms.join(" + ")
}

pub fn tap(
    spec: &KnotSpec,
    index: usize,
    opts: &DetectOptions,
    fmt: Format,
) -> Result<String, Failure> {
    let reps = solve_parabolic(spec, &opts.solve)?;
    let Some(rep) = reps.get(index) else {
        return Err(Failure::usage(format!(
            "{spec}: root index {index} out of range ({} parabolic roots)",
            reps.len()
        )));
    };
    let t = wada_polynomial(spec, rep)?;
    let monic = t.is_monic(opts.monic_tol);
    let defect = reciprocity_check(&t);
    Ok(match fmt {
        Format::Text => format!(
            "{spec} at y = {}\nΔ(t) = {}\nspan {}  lead {}  trail {}  monic {monic}  reciprocity defect {defect:.3e}\n",
            complex(rep.y),
            laurent_text(&t.poly),
            t.span,
            complex(t.lead),
            complex(t.trail)
        ),
        Format::Json => json_line(&json!({
            "root_index": index,
            "y_re": float(rep.y.re),
            "y_im": float(rep.y.im),
            "span": t.span,
            "coeffs_re": t.poly.coeffs().iter().map(|c| float(c.re)).collect::<Vec<_>>(),
            "coeffs_im": t.poly.coeffs().iter().map(|c| float(c.im)).collect::<Vec<_>>(),
            "monic": monic,
            "reciprocity_defect": float(defect),
        })),
        Format::Csv => csv_string(
            &["power", "re", "im"],
            t.poly
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![i.to_string(), c.re.to_string(), c.im.to_string()])
                .collect(),
        ),
    })
}

fn spec_kn(spec: &KnotSpec) -> (String, String) {
    match *spec {
        KnotSpec::DoubleTwist { k, n } => (k.to_string(), n.to_string()),
        KnotSpec::TwoBridge { .. } => (String::new(), String::new()),
    }
}

fn report_json(r: &DetectionReport) -> Value {
    let mut m = Map::new();
    m.insert("spec".into(), Value::String(r.spec.to_string()));
    m.insert("genus".into(), json!(r.detected_genus));
    m.insert("fibered".into(), json!(r.detected_fibered));
    m.insert("assertion".into(), json!(r.assertion_class.as_str()));
    if let Some(p) = r.p {
        m.insert("p".into(), json!(p));
    }
    if let Some(b) = r.in_p2 {
        m.insert("in_p2".into(), json!(b));
    }
    let roots: Vec<Value> = r
        .roots
        .iter()
        .enumerate()
        .map(|(i, x)| {
            json!({
                "index": i,
                "y_re": float(x.y.re),
                "y_im": float(x.y.im),
                "span": x.span,
                "lead_re": float(x.lead.re),
                "lead_im": float(x.lead.im),
                "trail_re": float(x.trail.re),
                "trail_im": float(x.trail.im),
                "monic": x.monic,
                "reciprocity_defect": float(x.reciprocity_defect),
            })
        })
        .collect();
    m.insert("roots".into(), Value::Array(roots));
    Value::Object(m)
}

fn report_rows(r: &DetectionReport) -> Vec<Vec<String>> {
    let (k, n) = spec_kn(&r.spec);
    r.roots
        .iter()
        .enumerate()
        .map(|(i, x)| {
            vec![
                r.spec.to_string(),
                k.clone(),
                n.clone(),
                i.to_string(),
                x.y.re.to_string(),
                x.y.im.to_string(),
                x.span.to_string(),
                x.lead.re.to_string(),
                x.lead.im.to_string(),
                x.monic.to_string(),
                r.detected_genus.to_string(),
                r.detected_fibered.to_string(),
            ]
        })
        .collect()
}

fn report_text(r: &DetectionReport) -> String {
    let mut s = format!(
        "{}: genus {}, fibered {}, {}",
        r.spec,
        r.detected_genus,
        r.detected_fibered,
        r.assertion_class.as_str()
    );
    if let (Some(p), Some(b)) = (r.p, r.in_p2) {
        s += &format!(" (p = {p}, in P2: {b})");
    }
    s.push('\n');
    for (i, x) in r.roots.iter().enumerate() {
        s += &format!(
            "{i:>3}  y = {}  span {}  lead {}  monic {}\n",
            complex(x.y),
            x.span,
            complex(x.lead),
            x.monic
        );
    }
    s
}

pub fn analyze(spec: &KnotSpec, opts: &DetectOptions, fmt: Format) -> Result<String, Failure> {
    let r = detect_with(spec, opts)?;
    Ok(match fmt {
        Format::Text => report_text(&r),
        Format::Json => json_line(&report_json(&r)),
        Format::Csv => csv_string(&SWEEP_HEADER, report_rows(&r)),
    })
}

pub fn sweep(kmax: i64, nmax: i64, opts: &DetectOptions, fmt: Format) -> Result<String, Failure> {
    let grid = VerifyConfig {
        kmax,
        nmax,
        ..VerifyConfig::default()
    }
    .grid();
    let reports = grid
        .par_iter()
        .map(|spec| detect_with(spec, opts))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(match fmt {
        Format::Text => reports.iter().map(report_text).collect(),
        Format::Json => json_line(&Value::Array(reports.iter().map(report_json).collect())),
        Format::Csv => csv_string(
            &SWEEP_HEADER,
            reports.iter().flat_map(report_rows).collect(),
        ),
    })
}

const MAX_LISTED_FAILURES: usize = 10;

pub fn verify(
    kmax: i64,
    nmax: i64,
    pmax: u64,
    opts: &DetectOptions,
    fmt: Format,
) -> (String, bool) {
    let report = run(&VerifyConfig {
        kmax,
        nmax,
        pmax,
        opts: *opts,
        ..VerifyConfig::default()
    });
    let passed = report.passed();
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let out = match fmt {
        Format::Text => {
            let mut s = format!("grid k <= {kmax}, |n| <= {nmax}, primes < {pmax}\n");
            for c in &report.criteria {
                s += &format!(
                    "[{}] {} {} ({} checks)\n",
                    verdict(c.passed()),
                    c.id,
                    c.name,
                    c.checked
                );
                for f in c.failures.iter().take(MAX_LISTED_FAILURES) {
                    s += &format!("      {f}\n");
                }
                if c.failures.len() > MAX_LISTED_FAILURES {
                    s += &format!(
                        "      ... {} more\n",
                        c.failures.len() - MAX_LISTED_FAILURES
                    );
                }
                for n in &c.notes {
                    s += &format!("      note: {n}\n");
                }
            }
            s += &format!("{} in {:.2} s\n", verdict(passed), report.elapsed_secs);
            s
        }
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("report serializes");
            v["passed"] = json!(passed);
            json_line(&v)
        }
        Format::Csv => csv_string(
            &["criterion", "name", "passed", "checked", "failures"],
            report
                .criteria
                .iter()
                .map(|c| {
                    vec![
                        c.id.to_string(),
                        c.name.to_string(),
                        c.passed().to_string(),
                        c.checked.to_string(),
                        c.failures.len().to_string(),
                    ]
                })
                .collect(),
        ),
    };
    (out, passed)
}

pub fn p2(max: u64, fmt: Format) -> String {
    let primes = p2_primes(max);
    match fmt {
        Format::Text => {
            let parts: Vec<String> = primes.iter().map(u64::to_string).collect();
            format!("{}\n", parts.join(", "))
        }
        Format::Json => json_line(&json!(primes)),
        Format::Csv => csv_string(&["p"], primes.iter().map(|p| vec![p.to_string()]).collect()),
    }
}
