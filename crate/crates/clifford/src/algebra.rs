//! The Clifford algebra C(V, Q) of a diagonalized form ⟨a₁, …, a_n⟩, as a
//! 2^n-dimensional table over the monomial basis e_{i₁}⋯e_{i_k} (i₁ < … < i_k).
//!
//! A basis monomial is indexed by the bitmask of its generator set. The
//! relations are eᵢ² = aᵢ·1 and eᵢeⱼ = −eⱼeᵢ for i ≠ j, which together give
//! v² = Q(v)·1 for every vector v.

use crate::CliffordError;
use exactnum::Rat;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct CliffordElement {
    form: Vec<Rat>,
    coeffs: Vec<Rat>,
}

impl CliffordElement {
    pub fn zero(form: &[Rat]) -> CliffordElement {
        CliffordElement {
            form: form.to_vec(),
            coeffs: vec![Rat::zero(); 1 << form.len()],
        }
    }

    pub fn scalar(form: &[Rat], c: &Rat) -> CliffordElement {
        let mut x = Self::zero(form);
        x.coeffs[0] = c.clone();
        x
    }

    pub fn one(form: &[Rat]) -> CliffordElement {
        Self::scalar(form, &Rat::one())
    }

    /// The generator eᵢ.
    pub fn generator(form: &[Rat], i: usize) -> CliffordElement {
        assert!(i < form.len(), "generator index out of range");
        let mut x = Self::zero(form);
        x.coeffs[1 << i] = Rat::one();
        x
    }

    /// The image of the vector Σ xᵢeᵢ under the canonical embedding V → C(V).
    pub fn vector(form: &[Rat], x: &[Rat]) -> CliffordElement {
        assert_eq!(x.len(), form.len(), "vector length must match the form");
        let mut el = Self::zero(form);
        for (i, c) in x.iter().enumerate() {
            el.coeffs[1 << i] = c.clone();
        }
        el
    }

    pub fn dim(&self) -> usize {
        self.form.len()
    }

    pub fn form(&self) -> &[Rat] {
        &self.form
    }

    /// Coefficient of the monomial with generator set `mask`.
    pub fn coeff(&self, mask: usize) -> &Rat {
        &self.coeffs[mask]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// 0 or 1 if every nonzero monomial has that parity; None if mixed or zero.
    pub fn parity(&self) -> Option<usize> {
        let mut seen = None;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = mask.count_ones() as usize % 2;
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        seen
    }

    fn check_form(&self, other: &CliffordElement) -> Result<(), CliffordError> {
        if self.form != other.form {
            return Err(CliffordError::FormMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &CliffordElement) -> Result<CliffordElement, CliffordError> {
        self.check_form(other)?;
        let mut out = self.clone();
        for (c, d) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *c += d;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CliffordElement) -> Result<CliffordElement, CliffordError> {
        self.check_form(other)?;
        let mut out = self.clone();
        for (c, d) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *c -= d;
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &Rat) -> CliffordElement {
        let mut out = self.clone();
        for x in out.coeffs.iter_mut() {
            *x *= c;
        }
        out
    }

    pub fn mul(&self, other: &CliffordElement) -> Result<CliffordElement, CliffordError> {
        clifford_multiply(self, other)
    }
}

// e_S · e_T = (−1)^inv · (∏_{i ∈ S∩T} aᵢ) · e_{S△T}, where inv counts the
// pairs (s, t) ∈ S×T with s > t — the adjacent transpositions needed to
// merge the two sorted monomials.
fn merge_sign_and_square(s: usize, t: usize, form: &[Rat]) -> (bool, Rat) {
    let mut inversions = 0u32;
    let mut square = Rat::one();
    for i in 0..form.len() {
        if t & (1 << i) != 0 {
            inversions += (s >> (i + 1)).count_ones();
        }
        if s & t & (1 << i) != 0 {
            square *= &form[i];
        }
    }
    (inversions % 2 == 1, square)
}

pub fn clifford_multiply(
    x: &CliffordElement,
    y: &CliffordElement,
) -> Result<CliffordElement, CliffordError> {
    if x.form != y.form {
        return Err(CliffordError::FormMismatch);
    }
    let mut out = CliffordElement::zero(&x.form);
    for (s, cx) in x.coeffs.iter().enumerate() {
        if cx.is_zero() {
            continue;
        }
        for (t, cy) in y.coeffs.iter().enumerate() {
            if cy.is_zero() {
                continue;
            }
            let (negate, square) = merge_sign_and_square(s, t, &x.form);
            let mut c = cx * cy * square;
            if negate {
                c = -c;
            }
            out.coeffs[s ^ t] += c;
        }
    }
    Ok(out)
}
