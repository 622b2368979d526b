//! Places of ℚ — the real place and one finite place per prime — and
//! p-adic valuations of rationals.

use crate::{primes, Int, NumError, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// A place of ℚ: the archimedean completion ℝ or the p-adic completion ℚ_p.
///
/// Construct finite places through [`Place::prime`], which checks primality;
/// a `Place::Prime` built directly with a composite is a caller bug and the
/// symbol routines will reject it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Prime(Int),
}

impl Place {
    /// The finite place at `p`; fails unless `p` is prime.
    pub fn prime(p: Int) -> Result<Place> {
        if primes::is_prime(&p) {
            Ok(Place::Prime(p))
        } else {
            Err(NumError::NotPrime(p))
        }
    }

    /// The finite place at a small prime; panics if `p` is composite.
    pub fn at(p: i64) -> Place {
        Place::prime(Int::from(p)).expect("Place::at requires a prime")
    }

    pub fn two() -> Place {
        Place::Prime(Int::from(2))
    }

    pub fn is_real(&self) -> bool {
        matches!(self, Place::Real)
    }

    /// True exactly at the even prime p = 2.
    pub fn is_dyadic(&self) -> bool {
        matches!(self, Place::Prime(p) if p.is_even())
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// Value of a p-adic valuation; v_p(0) = ∞ by convention, kept as a
/// distinguished variant so callers must decide how to treat zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// Unwrap a finite valuation; panics on the valuation of zero.
    pub fn expect_finite(self, what: &str) -> i64 {
        match self {
            Valuation::Finite(v) => v,
            Valuation::Infinite => panic!("valuation of zero: {what}"),
        }
    }

    pub fn is_even(self) -> bool {
        self.expect_finite("parity undefined") % 2 == 0
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "∞"),
        }
    }
}

/// v_p(a) for a rational, extended by v_p(0) = ∞. `p` must be prime.
pub fn valuation(a: &Rat, p: &Int) -> Valuation {
    if a.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(int_valuation(a.numer(), p) - int_valuation(a.denom(), p))
}

/// v_p(n) for a nonzero integer.
pub fn int_valuation(n: &Int, p: &Int) -> i64 {
    assert!(!n.is_zero(), "valuation of zero integer");
    debug_assert!(primes::is_prime(p), "valuation at non-prime {p}");
    let mut m = n.clone();
    let mut v = 0i64;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// Split a nonzero rational as a = p^v · u with u a p-adic unit
/// (numerator and denominator both prime to p). Returns (v, u).
pub fn unit_part(a: &Rat, p: &Int) -> (i64, Rat) {
    assert!(!a.is_zero(), "unit part of zero");
    let vn = int_valuation(a.numer(), p);
    let vd = int_valuation(a.denom(), p);
    let u = Rat::new(
        a.numer() / p.pow(vn as u32),
        a.denom() / p.pow(vd as u32),
    );
    (vn - vd, u)
}

/// The places where a finite family of nonzero rationals can have nontrivial
/// local behavior: the real place, 2, and every prime dividing a numerator or
/// denominator. A Hilbert symbol of values drawn from the family is +1 at
/// every place outside this set.
pub fn relevant_places(values: &[Rat]) -> Vec<Place> {
    let mut primes_seen: BTreeSet<Int> = BTreeSet::new();
    primes_seen.insert(Int::from(2));
    for a in values {
        if a.is_zero() {
            continue;
        }
        for part in [a.numer(), a.denom()] {
            if part.abs().is_one() {
                continue;
            }
            for p in primes::prime_divisors(part) {
                primes_seen.insert(p);
            }
        }
    }
    let mut out = vec![Place::Real];
    out.extend(primes_seen.into_iter().map(Place::Prime));
    out
}
