//! 2-torsion Brauer classes of ℚ as ramification sets, and the
//! Clifford–Witt invariant of a diagonalized form.
//!
//! A quaternion algebra (a, b) is determined by the finite set of places
//! where it does not split, and that set always has even cardinality; the
//! class group operation is symmetric difference of ramification sets. This
//! keeps the arithmetic exact and cheap, while `algebra` carries the actual
//! structure constants for the low-dimensional isomorphism checks.

use crate::CliffordError;
use exactnum::symbols::hilbert_symbol;
use exactnum::{relevant_places, Place, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerClass2 {
    ramified: BTreeSet<Place>,
}

impl BrauerClass2 {
    pub fn trivial() -> BrauerClass2 {
        BrauerClass2 {
            ramified: BTreeSet::new(),
        }
    }

    pub fn new(ramified: BTreeSet<Place>) -> Result<BrauerClass2, CliffordError> {
        if ramified.len() % 2 != 0 {
            return Err(CliffordError::OddRamification);
        }
        Ok(BrauerClass2 { ramified })
    }

    pub fn is_trivial(&self) -> bool {
        self.ramified.is_empty()
    }

    pub fn ramification(&self) -> &BTreeSet<Place> {
        &self.ramified
    }

    pub fn is_ramified_at(&self, v: &Place) -> bool {
        self.ramified.contains(v)
    }

    /// Group law in the 2-torsion Brauer group: symmetric difference.
    pub fn product(&self, other: &BrauerClass2) -> BrauerClass2 {
        BrauerClass2 {
            ramified: self
                .ramified
                .symmetric_difference(&other.ramified)
                .cloned()
                .collect(),
        }
    }
}

impl fmt::Display for BrauerClass2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ramified.is_empty() {
            return write!(f, "split");
        }
        let names: Vec<String> = self.ramified.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Brauer class of the quaternion algebra (a, b): ramified exactly where the
/// Hilbert symbol is −1.
pub fn quaternion_class(a: &Rat, b: &Rat) -> Result<BrauerClass2, CliffordError> {
    if a.is_zero() || b.is_zero() {
        return Err(CliffordError::Num(exactnum::NumError::ZeroArgument));
    }
    let mut ramified = BTreeSet::new();
    for v in relevant_places(&[a.clone(), b.clone()]) {
        if hilbert_symbol(a, b, &v)? == -1 {
            ramified.insert(v);
        }
    }
    BrauerClass2::new(ramified)
}

// disc_B of ⟨a₁, …, a_k⟩: (−1)^⌊k/2⌋ times the product of the coefficients.
fn disc_b(coeffs: &[Rat]) -> Rat {
    let det: Rat = coeffs.iter().fold(Rat::one(), |p, a| p * a);
    if (coeffs.len() / 2) % 2 == 1 {
        -det
    } else {
        det
    }
}

/// Clifford–Witt invariant of ⟨a₁, …, a_n⟩: the class of C(V) (n even) or
/// C₀(V) (n odd). Computed by folding one coefficient at a time through the
/// product rule cw(V ⊥ W) = cw(V)·cw(W)·(±disc_B(V), disc_B(W)), with the
/// sign flipped when the parities of dim V and dim W differ.
pub fn clifford_witt_invariant(coeffs: &[Rat]) -> Result<BrauerClass2, CliffordError> {
    if coeffs.iter().any(|a| a.is_zero()) {
        return Err(CliffordError::Num(exactnum::NumError::ZeroArgument));
    }
    let mut cw = BrauerClass2::trivial();
    for k in 1..coeffs.len() {
        let head = &coeffs[..k];
        let a = &coeffs[k];
        // cw([a]) is trivial, so only the correction symbol accumulates:
        // odd ⊥ odd uses (disc_B(head), a); even ⊥ odd swaps the roles and
        // uses (−a, disc_B(head)).
        let factor = if k % 2 == 1 {
            quaternion_class(&disc_b(head), a)?
        } else {
            quaternion_class(&-a.clone(), &disc_b(head))?
        };
        cw = cw.product(&factor);
    }
    Ok(cw)
}

/// The correction class relating Hasse and Clifford–Witt invariants:
/// s(V) = cw(V) · cw_hasse_correction(dim V, det V), branching on dim mod 8.
/// `det` is the space determinant (product of the diagonal Q-coefficients).
pub fn cw_hasse_correction(dim: usize, det: &Rat) -> Result<BrauerClass2, CliffordError> {
    let minus_one = -Rat::one();
    match dim % 8 {
        1 | 2 => Ok(BrauerClass2::trivial()),
        3 | 4 => quaternion_class(&minus_one, &-det.clone()),
        5 | 6 => quaternion_class(&minus_one, &minus_one),
        _ => quaternion_class(&minus_one, det),
    }
}
