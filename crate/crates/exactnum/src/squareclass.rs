//! Square classes ℚ_v^× / (ℚ_v^×)².
//!
//! At the real place the class of a nonzero rational is its sign. At an odd
//! prime it is (valuation mod 2, residue class of the unit part), four classes
//! in all. At p = 2 it is (valuation mod 2, unit part mod 8), eight classes.
//! These tuples are complete invariants, so equality of `SquareClass` values
//! is equality in the square class group.

use crate::place::unit_part;
use crate::symbols::{legendre_symbol, smallest_nonresidue};
use crate::{Int, NumError, Place, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// The class of a nonzero element of ℚ_v^× modulo squares.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SquareClass {
    /// ℝ^×/(ℝ^×)² ≅ {±1}.
    Real { negative: bool },
    /// ℚ_p^×/(ℚ_p^×)² for odd p, generated by p and a nonresidue unit.
    Odd {
        p: Int,
        odd_val: bool,
        nonresidue: bool,
    },
    /// ℚ_2^×/(ℚ_2^×)² ≅ (ℤ/2)³, generated by 2, −1, and 5.
    Dyadic { odd_val: bool, unit_mod8: u8 },
}

impl SquareClass {
    /// The square class of a nonzero rational at a place.
    pub fn of(a: &Rat, v: &Place) -> Result<SquareClass> {
        if a.is_zero() {
            return Err(NumError::ZeroArgument);
        }
        match v {
            Place::Real => Ok(SquareClass::Real {
                negative: a.is_negative(),
            }),
            Place::Prime(p) => {
                if !crate::primes::is_prime(p) {
                    return Err(NumError::NotPrime(p.clone()));
                }
                let (val, u) = unit_part(a, p);
                if p.is_even() {
                    // For odd n, n⁻¹ ≡ n mod 8, so m/n ≡ m·n.
                    let m8 = (u.numer() * u.denom())
                        .mod_floor(&Int::from(8))
                        .to_u8()
                        .expect("unit residue mod 8");
                    Ok(SquareClass::Dyadic {
                        odd_val: val % 2 != 0,
                        unit_mod8: m8,
                    })
                } else {
                    let num = legendre_symbol(u.numer(), p)?;
                    let den = legendre_symbol(u.denom(), p)?;
                    Ok(SquareClass::Odd {
                        p: p.clone(),
                        odd_val: val % 2 != 0,
                        nonresidue: num * den == -1,
                    })
                }
            }
        }
    }

    /// The place this class lives at.
    pub fn place(&self) -> Place {
        match self {
            SquareClass::Real { .. } => Place::Real,
            SquareClass::Odd { p, .. } => Place::Prime(p.clone()),
            SquareClass::Dyadic { .. } => Place::Prime(Int::from(2)),
        }
    }

    /// Is this the trivial class (the class of 1)?
    pub fn is_square(&self) -> bool {
        match self {
            SquareClass::Real { negative } => !negative,
            SquareClass::Odd {
                odd_val,
                nonresidue,
                ..
            } => !odd_val && !nonresidue,
            SquareClass::Dyadic { odd_val, unit_mod8 } => !odd_val && *unit_mod8 == 1,
        }
    }

    /// Group law of the square class group. Fails if the places differ.
    pub fn mul(&self, rhs: &SquareClass) -> Result<SquareClass> {
        match (self, rhs) {
            (SquareClass::Real { negative: x }, SquareClass::Real { negative: y }) => {
                Ok(SquareClass::Real { negative: x ^ y })
            }
            (
                SquareClass::Odd {
                    p,
                    odd_val: v1,
                    nonresidue: r1,
                },
                SquareClass::Odd {
                    p: q,
                    odd_val: v2,
                    nonresidue: r2,
                },
            ) if p == q => Ok(SquareClass::Odd {
                p: p.clone(),
                odd_val: v1 ^ v2,
                nonresidue: r1 ^ r2,
            }),
            (
                SquareClass::Dyadic {
                    odd_val: v1,
                    unit_mod8: u1,
                },
                SquareClass::Dyadic {
                    odd_val: v2,
                    unit_mod8: u2,
                },
            ) => Ok(SquareClass::Dyadic {
                odd_val: v1 ^ v2,
                unit_mod8: (u1 * u2) % 8,
            }),
            _ => Err(NumError::PlaceMismatch(self.place(), rhs.place())),
        }
    }

    /// A small rational representative of the class.
    pub fn representative(&self) -> Rat {
        match self {
            SquareClass::Real { negative } => {
                Rat::from_integer(if *negative { -Int::one() } else { Int::one() })
            }
            SquareClass::Odd {
                p,
                odd_val,
                nonresidue,
            } => {
                let mut r = if *nonresidue {
                    smallest_nonresidue(p)
                } else {
                    Int::one()
                };
                if *odd_val {
                    r *= p;
                }
                Rat::from_integer(r)
            }
            SquareClass::Dyadic { odd_val, unit_mod8 } => {
                let mut r = Int::from(*unit_mod8);
                if *odd_val {
                    r *= 2;
                }
                Rat::from_integer(r)
            }
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·□ at {}", self.representative(), self.place())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat, rat_int};

    #[test]
    fn real_classes() {
        let pos = SquareClass::of(&rat(3, 7), &Place::Real).unwrap();
        let neg = SquareClass::of(&rat_int(-12), &Place::Real).unwrap();
        assert!(pos.is_square());
        assert!(!neg.is_square());
        assert_eq!(neg.mul(&neg).unwrap(), pos);
        assert_eq!(neg.representative(), rat_int(-1));
    }

    #[test]
    fn odd_prime_classes() {
        let five = Place::at(5);
        // 50 = 2·25 ≡ 2 mod squares at 5, and 2 is a nonresidue mod 5.
        let a = SquareClass::of(&rat_int(50), &five).unwrap();
        assert_eq!(
            a,
            SquareClass::Odd {
                p: int(5),
                odd_val: false,
                nonresidue: true
            }
        );
        assert_eq!(a.representative(), rat_int(2));
        let b = SquareClass::of(&rat(1, 5), &five).unwrap();
        assert!(matches!(b, SquareClass::Odd { odd_val: true, nonresidue: false, .. }));
        // 50/5 · 5 = classes multiply: a·b has odd valuation and nonresidue unit.
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.representative(), rat_int(10));
        assert!(SquareClass::of(&rat_int(-1), &five).unwrap().is_square());
    }

    #[test]
    fn dyadic_classes() {
        let two = Place::two();
        let a = SquareClass::of(&rat_int(17), &two).unwrap();
        assert!(a.is_square());
        let b = SquareClass::of(&rat(3, 2), &two).unwrap();
        assert_eq!(
            b,
            SquareClass::Dyadic {
                odd_val: true,
                unit_mod8: 3
            }
        );
        assert_eq!(b.representative(), rat_int(6));
        assert!(b.mul(&b).unwrap().is_square());
        // −1 ≡ 7 mod 8.
        let m1 = SquareClass::of(&rat_int(-1), &two).unwrap();
        assert_eq!(
            m1,
            SquareClass::Dyadic {
                odd_val: false,
                unit_mod8: 7
            }
        );
    }

    #[test]
    fn place_mismatch_rejected() {
        let a = SquareClass::of(&rat_int(3), &Place::Real).unwrap();
        let b = SquareClass::of(&rat_int(3), &Place::two()).unwrap();
        assert_eq!(
            a.mul(&b),
            Err(NumError::PlaceMismatch(Place::Real, Place::two()))
        );
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(
            SquareClass::of(&rat_int(0), &Place::two()),
            Err(NumError::ZeroArgument)
        );
    }
}
