use thiserror::Error;

use crate::algebra::IntPoly;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid knot: {0}")]
    InvalidSpec(String),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact Laurent division: relative residual {residual:.3e} exceeds {tol:.1e}")]
    NotDivisible { residual: f64, tol: f64 },

    #[error("root finder did not converge for {poly}")]
    RootFinding { poly: IntPoly },

    #[error("root residual {residual:.3e} above tolerance {tol:.1e} for {poly}")]
    UncertifiedRoot {
        poly: IntPoly,
        residual: f64,
        tol: f64,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
