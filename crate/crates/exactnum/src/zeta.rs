//! Even zeta values as exact rationals.
//!
//! ζ(2k) is a rational multiple of π^{2k}; this module returns that rational,
//! computed from Bernoulli numbers: ζ(2k)/π^{2k} = (−1)^{k+1} B_{2k} 2^{2k−1} / (2k)!.

use crate::{Int, Rat};
use num_traits::{One, Zero};

/// Bernoulli numbers B_0 … B_n (with B_1 = −1/2), by the defining recurrence
/// Σ_{j≤m} C(m+1, j) B_j = 0 for m ≥ 1.
pub fn bernoulli(n: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(n + 1);
    b.push(Rat::one());
    for m in 1..=n {
        // B_m = −1/(m+1) · Σ_{j<m} C(m+1, j) B_j
        let mut sum = Rat::zero();
        let mut binom = Int::one(); // C(m+1, j), updated incrementally
        for (j, bj) in b.iter().enumerate() {
            sum += Rat::from_integer(binom.clone()) * bj;
            binom = binom * Int::from(m + 1 - j) / Int::from(j + 1);
        }
        b.push(-sum / Rat::from_integer(Int::from(m + 1)));
    }
    b
}

/// The rational ζ(2k)/π^{2k}, for k ≥ 1. ζ(2) = π²/6 gives `zeta_even(1) = 1/6`.
pub fn zeta_even(k: u32) -> Rat {
    assert!(k >= 1, "zeta_even needs k >= 1");
    let b2k = bernoulli(2 * k as usize).pop().expect("B_2k computed");
    let mut fact = Int::one();
    for i in 2..=2 * k {
        fact *= Int::from(i);
    }
    let sign = if k % 2 == 1 { 1 } else { -1 };
    Rat::from_integer(Int::from(sign)) * b2k * Rat::new(Int::from(2).pow(2 * k - 1), fact)
}
