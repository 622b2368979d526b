//! Rational multiples of half-integer powers of π.
//!
//! Mass formulas mix Γ(i/2) factors, powers of π, and even zeta values. Every
//! such quantity has the shape c·π^{h/2} with c ∈ ℚ, and the products that
//! matter cancel down to plain rationals. [`SymPi`] does that bookkeeping
//! symbolically so the cancellation is exact rather than numerical.

use crate::{zeta, Int, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Div, Mul};

/// The number `coeff · π^(half_pi / 2)`, with `coeff` an exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPi {
    coeff: Rat,
    half_pi: i64,
}

impl SymPi {
    pub fn new(coeff: Rat, half_pi: i64) -> SymPi {
        // Normalize the representation of zero so Eq behaves.
        if coeff.is_zero() {
            SymPi {
                coeff,
                half_pi: 0,
            }
        } else {
            SymPi { coeff, half_pi }
        }
    }

    pub fn from_rat(coeff: Rat) -> SymPi {
        SymPi::new(coeff, 0)
    }

    pub fn one() -> SymPi {
        SymPi::from_rat(Rat::one())
    }

    /// π^{half/2}.
    pub fn pi_pow_half(half: i64) -> SymPi {
        SymPi::new(Rat::one(), half)
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    /// Exponent of π in half-integer units: the value is coeff·π^{half_pi()/2}.
    pub fn half_pi(&self) -> i64 {
        self.half_pi
    }

    pub fn is_rational(&self) -> bool {
        self.half_pi == 0
    }

    /// The exact rational value, if no π survives.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.coeff)
    }

    pub fn recip(&self) -> SymPi {
        assert!(!self.coeff.is_zero(), "reciprocal of zero");
        SymPi::new(self.coeff.recip(), -self.half_pi)
    }

    pub fn pow(&self, e: i32) -> SymPi {
        if e == 0 {
            return SymPi::one();
        }
        let base = if e < 0 { self.recip() } else { self.clone() };
        let mut out = base.clone();
        for _ in 1..e.unsigned_abs() {
            out = &out * &base;
        }
        out
    }
}

impl Mul for &SymPi {
    type Output = SymPi;
    fn mul(self, rhs: &SymPi) -> SymPi {
        SymPi::new(&self.coeff * &rhs.coeff, self.half_pi + rhs.half_pi)
    }
}

impl Div for &SymPi {
    type Output = SymPi;
    fn div(self, rhs: &SymPi) -> SymPi {
        assert!(!rhs.coeff.is_zero(), "division by zero");
        SymPi::new(&self.coeff / &rhs.coeff, self.half_pi - rhs.half_pi)
    }
}

impl Mul<&Rat> for &SymPi {
    type Output = SymPi;
    fn mul(self, rhs: &Rat) -> SymPi {
        SymPi::new(&self.coeff * rhs, self.half_pi)
    }
}

impl fmt::Display for SymPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.half_pi == 0 {
            return write!(f, "{}", self.coeff);
        }
        if !self.coeff.is_one() {
            write!(f, "{}·", self.coeff)?;
        }
        if self.half_pi == 2 {
            write!(f, "π")
        } else if self.half_pi % 2 == 0 {
            write!(f, "π^{}", self.half_pi / 2)
        } else {
            write!(f, "π^({}/2)", self.half_pi)
        }
    }
}

/// Γ(n/2) for n ≥ 1, as a rational times a half-integer power of π:
/// Γ(1/2) = √π, Γ(1) = 1, and Γ(s+1) = s·Γ(s) upward from there.
pub fn gamma_half(n: u64) -> SymPi {
    assert!(n >= 1, "gamma_half needs n >= 1");
    let mut val = if n % 2 == 1 {
        SymPi::pi_pow_half(1)
    } else {
        SymPi::one()
    };
    // Multiply by (n−2)/2 · (n−4)/2 · … down to Γ(1/2) or Γ(1).
    let mut i = n;
    while i >= 3 {
        i -= 2;
        val = &val * &Rat::new(Int::from(i), Int::from(2));
    }
    val
}

/// ζ(2k) itself, as a [`SymPi`]: the rational `zeta_even(k)` times π^{2k}.
pub fn zeta_even_sym(k: u32) -> SymPi {
    SymPi::new(zeta::zeta_even(k), 4 * k as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};

    #[test]
    fn gamma_small_values() {
        assert_eq!(gamma_half(1), SymPi::pi_pow_half(1)); // Γ(1/2) = √π
        assert_eq!(gamma_half(2), SymPi::one());
        assert_eq!(gamma_half(3), SymPi::new(rat(1, 2), 1));
        assert_eq!(gamma_half(4), SymPi::from_rat(rat_int(1)));
        assert_eq!(gamma_half(5), SymPi::new(rat(3, 4), 1));
        assert_eq!(gamma_half(6), SymPi::from_rat(rat_int(2)));
        assert_eq!(gamma_half(7), SymPi::new(rat(15, 8), 1));
        assert_eq!(gamma_half(8), SymPi::from_rat(rat_int(6)));
    }

    #[test]
    fn gamma_product_through_eight() {
        // ∏_{i=1..8} Γ(i/2) = (135/16)·π²
        let mut prod = SymPi::one();
        for i in 1..=8 {
            prod = &prod * &gamma_half(i);
        }
        assert_eq!(prod, SymPi::new(rat(135, 16), 4));
    }

    #[test]
    fn cancellation_to_rational() {
        let x = SymPi::new(rat(3, 2), 5);
        let y = SymPi::new(rat(2, 9), -5);
        let prod = &x * &y;
        assert_eq!(prod.as_rat(), Some(&rat(1, 3)));
        assert_eq!((&x / &x).as_rat(), Some(&rat_int(1)));
        assert!((&x * &y).is_rational());
        assert!(!x.is_rational());
    }

    #[test]
    fn zeta_sym_and_powers() {
        assert_eq!(zeta_even_sym(1), SymPi::new(rat(1, 6), 4));
        assert_eq!(
            zeta_even_sym(1).pow(2),
            SymPi::new(rat(1, 36), 8)
        );
        assert_eq!(SymPi::pi_pow_half(3).pow(-2), SymPi::pi_pow_half(-6));
    }

    #[test]
    fn display_forms() {
        assert_eq!(SymPi::new(rat(1, 6), 4).to_string(), "1/6·π^2");
        assert_eq!(SymPi::pi_pow_half(1).to_string(), "π^(1/2)");
        assert_eq!(SymPi::from_rat(rat(-2, 3)).to_string(), "-2/3");
        assert_eq!(SymPi::pi_pow_half(2).to_string(), "π");
    }
}
