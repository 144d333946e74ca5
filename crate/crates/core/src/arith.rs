//! Primitive roots, the prime set `P2 = {p odd prime : 2 is a primitive root mod p}`,
//! GF(2) irreducibility, and the mod-2 shape of Riley polynomials.

use serde::Serialize;

use crate::algebra::{mod2_reduce, GF2Poly, IntPoly};
use crate::chebyshev::cheb_s;
use crate::error::{Error, Result};
use crate::knots::KnotSpec;
use crate::riley::riley_parabolic;

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    let mut acc = 1u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Multiplicative order of `g` mod the prime `p`, found by stripping prime
/// factors off `p - 1`.
pub fn multiplicative_order(g: u64, p: u64) -> Result<u64> {
    check_odd_prime(p)?;
    if g.is_multiple_of(p) {
        return Err(Error::InvalidSpec(format!("{g} is not a unit mod {p}")));
    }
    let mut order = p - 1;
    for r in prime_factors(p - 1) {
        while order.is_multiple_of(r) && pow_mod(g, order / r, p) == 1 {
            order /= r;
        }
    }
    Ok(order)
}

/// An odd prime with the order of 2 modulo it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimeP {
    pub p: u64,
    pub order_of_2: u64,
}

impl PrimeP {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self {
            p,
            order_of_2: multiplicative_order(2, p)?,
        })
    }

    pub fn in_p2(&self) -> bool {
        self.order_of_2 == self.p - 1
    }
}

pub fn is_primitive_root(g: u64, p: u64) -> Result<bool> {
    check_odd_prime(p)?;
    if g == 0 || g >= p {
        return Err(Error::InvalidSpec(format!(
            "need 1 <= g <= p - 1, got g = {g}, p = {p}"
        )));
    }
    Ok(multiplicative_order(g, p)? == p - 1)
}

pub fn in_p2(p: u64) -> Result<bool> {
    is_primitive_root(2, p)
}

/// Members of `P2` up to and including `max`.
pub fn p2_primes(max: u64) -> Vec<u64> {
    (3..=max)
        .step_by(2)
        .filter(|&p| is_prime(p) && in_p2(p).unwrap_or(false))
        .collect()
}

/// `(p - 1) / 2` is a prime congruent to 1 mod 4.
pub fn sophie_germain_sufficient(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let q = (p - 1) / 2;
    is_prime(q) && q % 4 == 1
}

/// Rabin's test: `f | y^(2^d) - y` and `gcd(f, y^(2^(d/r)) - y) = 1` for primes `r | d`.
pub fn gf2_irreducible(f: &GF2Poly) -> bool {
    let Some(d) = f.degree() else {
        return false;
    };
    if d == 0 {
        return false;
    }
    let y = GF2Poly::monomial(1).rem(f);
    if GF2Poly::frobenius_power(d, f) != y {
        return false;
    }
    prime_factors(d as u64).into_iter().all(|r| {
        let h = GF2Poly::frobenius_power(d / r as usize, f) + y.clone();
        f.gcd(&h).degree() == Some(0)
    })
}

/// `u^(p-1) + ... + u + 1`.
pub fn cyclotomic_gf2(p: u64) -> Result<GF2Poly> {
    check_odd_prime(p)?;
    Ok(GF2Poly::all_ones((p - 1) as usize))
}

/// `S_d(y) + S_{d-1}(y)` reduced mod 2.
pub fn cheb_sum_mod2(d: usize) -> GF2Poly {
    let y = IntPoly::var();
    mod2_reduce(&(cheb_s(d as i64, &y) + cheb_s(d as i64 - 1, &y)))
}

/// Checks `(1 + u) u^d P(u + 1/u) = 1 + u^(2d+1)` in GF(2)[u] for
/// `P = S_d + S_{d-1}`.
pub fn chebyshev_cyclotomic_bridge(d: usize) -> bool {
    let p = cheb_sum_mod2(d);
    let one_plus_u2 = GF2Poly::from_exponents(&[0, 2]);
    let mut cleared = GF2Poly::from_bits(0);
    let mut power = GF2Poly::from_bits(1);
    for i in 0..=d {
        if p.bit(i) {
            cleared = cleared + &power * &GF2Poly::monomial(d - i);
        }
        power = &power * &one_plus_u2;
    }
    &GF2Poly::from_exponents(&[0, 1]) * &cleared == GF2Poly::from_exponents(&[0, 2 * d + 1])
}

/// `phi_K(2, y) = S_d + S_{d-1}` mod 2, with `d = deg phi`.
pub fn riley_mod2_check(spec: &KnotSpec) -> Result<bool> {
    let phi = riley_parabolic(spec)?;
    let d = phi.degree().unwrap_or(0);
    Ok(mod2_reduce(&phi) == cheb_sum_mod2(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZIrreducibility {
    /// `|4mn - 1|` for `J(2m, 2n)`.
    pub p: Option<u64>,
    pub in_p2: Option<bool>,
    pub irreducible_mod2: bool,
    /// A monic integer polynomial that is irreducible mod 2 is irreducible over Z.
    pub implies_z_irreducible: bool,
}

pub fn z_irreducibility_report(spec: &KnotSpec) -> Result<ZIrreducibility> {
    let phi = riley_parabolic(spec)?;
    let irreducible_mod2 = gf2_irreducible(&mod2_reduce(&phi));
    let p = match *spec {
        KnotSpec::DoubleTwist { k, n } if k % 2 == 0 => Some((4 * (k / 2) * n - 1).unsigned_abs()),
        _ => None,
    };
    let in_p2 = p.map(|p| is_prime(p) && p % 2 == 1 && in_p2(p).unwrap_or(false));
    Ok(ZIrreducibility {
        p,
        in_p2,
        irreducible_mod2,
        implies_z_irreducible: irreducible_mod2 && phi.is_monic(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_irreducible(f: u64) -> bool {
        let f = GF2Poly::from_bits(f);
        let d = f.degree().unwrap();
        if d == 0 {
            return false;
        }
        (2u64..(1 << (d / 2 + 1)))
            .map(GF2Poly::from_bits)
            .filter(|g| g.degree().is_some_and(|e| e >= 1 && 2 * e <= d))
            .all(|g| f.rem(&g).degree().is_some())
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(999_983));
        assert!(!is_prime(999_981));
    }

    #[test]
    fn primitive_root_examples() {
        assert!(is_primitive_root(2, 5).unwrap());
        assert!(!is_primitive_root(2, 7).unwrap());
        assert!(is_primitive_root(2, 3).unwrap());
        assert!(in_p2(13).unwrap());
        assert!(matches!(in_p2(9), Err(Error::NotPrime(9))));
        assert!(is_primitive_root(7, 5).is_err());
        assert_eq!(PrimeP::new(7).unwrap().order_of_2, 3);
        assert!(PrimeP::new(11).unwrap().in_p2());
    }

    #[test]
    fn order_matches_brute_force() {
        for p in (3..300).filter(|&p| is_prime(p)) {
            for g in 1..p {
                let brute = (1..p).find(|&e| pow_mod(g, e, p) == 1).unwrap();
                assert_eq!(multiplicative_order(g, p).unwrap(), brute, "g={g} p={p}");
            }
        }
    }

    #[test]
    fn p2_small() {
        assert_eq!(p2_primes(20), vec![3, 5, 11, 13, 19]);
    }

    #[test]
    fn sophie_germain() {
        assert!(sophie_germain_sufficient(11) && in_p2(11).unwrap());
        assert!(!sophie_germain_sufficient(7));
        assert!(sophie_germain_sufficient(59) && in_p2(59).unwrap());
        for p in (3..1000).filter(|&p| is_prime(p)) {
            if sophie_germain_sufficient(p) {
                assert!(in_p2(p).unwrap(), "{p}");
            }
        }
    }

    #[test]
    fn irreducibility_examples() {
        assert!(gf2_irreducible(&GF2Poly::from_exponents(&[0, 1, 2])));
        assert!(!gf2_irreducible(&GF2Poly::from_exponents(&[0, 2])));
        assert!(gf2_irreducible(&GF2Poly::all_ones(4)));
        assert!(gf2_irreducible(&GF2Poly::from_exponents(&[0, 1])));
        assert!(!gf2_irreducible(&GF2Poly::from_bits(1)));
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for f in 2u64..(1 << 13) {
            assert_eq!(
                gf2_irreducible(&GF2Poly::from_bits(f)),
                trial_irreducible(f),
                "{}",
                GF2Poly::from_bits(f)
            );
        }
    }

    #[test]
    fn cyclotomic_criterion() {
        assert_eq!(
            cyclotomic_gf2(3).unwrap(),
            GF2Poly::from_exponents(&[0, 1, 2])
        );
        assert_eq!(
            cyclotomic_gf2(5).unwrap(),
            GF2Poly::from_exponents(&[0, 1, 2, 3, 4])
        );
        for p in (3..200).filter(|&p| is_prime(p)) {
            let c = cyclotomic_gf2(p).unwrap();
            assert_eq!(in_p2(p).unwrap(), gf2_irreducible(&c), "p={p}");
            if in_p2(p).unwrap() {
                assert!(
                    gf2_irreducible(&cheb_sum_mod2(((p - 1) / 2) as usize)),
                    "p={p}"
                );
            }
        }
    }

    #[test]
    fn bridge_small_cases() {
        // d = 1: y + 1 -> u^2 + u + 1; d = 2: y^2 + y + 1 -> u^4 + u^3 + u^2 + u + 1
        assert_eq!(cheb_sum_mod2(1), GF2Poly::from_exponents(&[0, 1]));
        assert_eq!(cheb_sum_mod2(2), GF2Poly::from_exponents(&[0, 1, 2]));
        for d in 1..=50 {
            assert!(chebyshev_cyclotomic_bridge(d), "d={d}");
        }
    }

    #[test]
    fn riley_mod2_examples() {
        assert!(riley_mod2_check(&KnotSpec::double_twist(2, 1).unwrap()).unwrap());
        assert!(riley_mod2_check(&KnotSpec::double_twist(2, -1).unwrap()).unwrap());
        assert!(riley_mod2_check(&KnotSpec::two_bridge(5, 3).unwrap()).unwrap());
    }

    #[test]
    fn z_irreducibility_examples() {
        let r = z_irreducibility_report(&KnotSpec::double_twist(2, 1).unwrap()).unwrap();
        assert_eq!((r.p, r.in_p2), (Some(3), Some(true)));
        assert!(r.irreducible_mod2 && r.implies_z_irreducible);
        let r = z_irreducibility_report(&KnotSpec::double_twist(2, -1).unwrap()).unwrap();
        assert_eq!((r.p, r.in_p2), (Some(5), Some(true)));
        assert!(r.irreducible_mod2);
        let r = z_irreducibility_report(&KnotSpec::double_twist(4, 1).unwrap()).unwrap();
        assert_eq!((r.p, r.in_p2), (Some(7), Some(false)));
    }

    proptest! {
        #[test]
        fn products_are_reducible(f in 2u64..256, g in 2u64..256) {
            let prod = &GF2Poly::from_bits(f) * &GF2Poly::from_bits(g);
            prop_assert!(!gf2_irreducible(&prod));
        }
    }
}
