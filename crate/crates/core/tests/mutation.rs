//! The oracle criterion must catch a sign error in the negative-index
//! Chebyshev extension.

use num_traits::Zero;
use tapkit_core::algebra::IntPoly;
use tapkit_core::chebyshev::cheb_s;
use tapkit_core::riley::{alpha_at_2, riley_at_2_raw, trace_at_2};
use tapkit_core::verify::{run, VerifyConfig};

fn s_negated_below(i: i64, z: &IntPoly, cutoff: i64) -> IntPoly {
    let s = cheb_s(i, z);
    if i <= cutoff {
        -s
    } else {
        s
    }
}

fn riley_with_cutoff(k: i64, n: i64, cutoff: i64) -> IntPoly {
    let lambda = trace_at_2(k);
    s_negated_below(n - 1, &lambda, cutoff) * alpha_at_2(k)
        - s_negated_below(n - 2, &lambda, cutoff)
}

fn mutated_below_minus_two(k: i64, n: i64) -> IntPoly {
    riley_with_cutoff(k, n, -2)
}

fn config(riley: fn(i64, i64) -> IntPoly) -> VerifyConfig {
    VerifyConfig {
        kmax: 4,
        nmax: 3,
        pmax: 50,
        riley,
        ..VerifyConfig::default()
    }
}

#[test]
fn reconstruction_matches_library() {
    for k in 1..=6 {
        for n in (-4..=4).filter(|&n| n != 0) {
            assert_eq!(riley_with_cutoff(k, n, i64::MIN), riley_at_2_raw(k, n));
        }
    }
}

#[test]
fn oracle_criterion_catches_negated_negative_indices() {
    let report = run(&config(mutated_below_minus_two));
    let oracle = report.criterion(4).unwrap();
    assert!(!oracle.passed(), "mutation survived the oracle criterion");
}

#[test]
fn unmutated_oracle_criterion_passes() {
    let report = run(&config(riley_at_2_raw));
    assert!(report.criterion(4).unwrap().passed());
}

#[test]
fn flipping_s_minus_one_alone_is_invisible() {
    // S_{-1} = 0, so negating it changes nothing.
    assert!(cheb_s(-1, &trace_at_2(3)).is_zero());
    for k in 1..=6 {
        for n in (-4..=4).filter(|&n| n != 0) {
            let lambda = trace_at_2(k);
            let flip = |i: i64| {
                if i == -1 {
                    -cheb_s(i, &lambda)
                } else {
                    cheb_s(i, &lambda)
                }
            };
            assert_eq!(
                flip(n - 1) * alpha_at_2(k) - flip(n - 2),
                riley_at_2_raw(k, n)
            );
        }
    }
}
