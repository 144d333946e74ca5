//! Riley polynomials, parabolic `SL(2, C)` representations and twisted
//! Alexander polynomials of double-twist knots `J(k, 2n)` and 2-bridge
//! knots `b(p, q)`, together with the checks that tie them to knot genus
//! and fiberedness.

pub mod algebra;
pub mod analysis;
pub mod arith;
pub mod chebyshev;
pub mod error;
pub mod knots;
pub mod parabolic;
pub mod riley;
pub mod twisted;
pub mod verify;

pub use error::{Error, Result};
pub use knots::KnotSpec;
