//! Exact-rational LLL reduction.
//!
//! A basis is α-LLL reduced when the Gram–Schmidt data satisfies
//! |c_{ij}| ≤ 1/2 and α·Q(p̃_{j−1}v_j) ≤ Q(p̃_{j−1}v_{j+1}); in terms of the
//! h_j the second condition reads α·h_j ≤ h_{j+1} + c_{j,j+1}²·h_j. The
//! loop below size-reduces, swaps at the smallest violating index, and
//! repeats; the usual potential argument gives termination because the
//! leading-minor products live in a discrete set of rationals.

use crate::gso::gso_from_b_gram;
use crate::{Lattice, LatticeError, Result};
use exactnum::{rat, Int, Rat};
use num_traits::{One, Signed, Zero};
use quadspace::Mat;

/// LLL-reduce a positive definite lattice. Returns the reduced lattice and
/// the unimodular transform U with reduced basis = (old basis)·U.
pub fn lll_reduce(l: &Lattice, alpha: &Rat) -> Result<(Lattice, Mat)> {
    if alpha <= &rat(1, 4) || alpha > &Rat::one() {
        return Err(LatticeError::AlphaOutOfRange);
    }
    let n = l.rank();
    let b_gram = l.gram().mat().scale(&rat(1, 2));
    // Current basis in terms of the original one.
    let mut u = Mat::identity(n);
    loop {
        let m = congruent(&b_gram, &u);
        let (h, mut c) = gso_from_b_gram(&m)?;
        // Size reduction, innermost coefficient first. A column operation
        // v_j ← v_j − r·v_i leaves every h untouched and shifts the row
        // segment c_{kj} (k ≤ i) by −r·c_{ki}, so the matrix can be kept
        // current without recomputing the orthogonalization.
        for j in 1..n {
            for i in (0..j).rev() {
                let r = round_half_toward_zero(&c[(i, j)]);
                if r.is_zero() {
                    continue;
                }
                let rr = Rat::from_integer(r);
                for row in 0..n {
                    let sub = &rr * &u[(row, i)];
                    u[(row, j)] -= sub;
                }
                for k in 0..i {
                    let sub = &rr * &c[(k, i)];
                    c[(k, j)] -= sub;
                }
                c[(i, j)] -= rr;
            }
        }
        // Smallest index violating the exchange condition.
        let mut swap = None;
        for j in 0..n - 1 {
            let projected_next = &h[j + 1] + &c[(j, j + 1)] * &c[(j, j + 1)] * &h[j];
            if alpha * &h[j] > projected_next {
                swap = Some(j);
                break;
            }
        }
        let Some(j) = swap else { break };
        for row in 0..n {
            let tmp = u[(row, j)].clone();
            u[(row, j)] = u[(row, j + 1)].clone();
            u[(row, j + 1)] = tmp;
        }
    }
    debug_assert!(u.det().abs().is_one());
    let reduced = Lattice::new(l.ambient().clone(), l.basis() * &u)?;
    Ok((reduced, u))
}

fn congruent(b_gram: &Mat, u: &Mat) -> Mat {
    &(&u.transpose() * b_gram) * u
}

/// Nearest integer, ties broken toward zero: 3/2 → 1, −3/2 → −1.
fn round_half_toward_zero(r: &Rat) -> Int {
    let floor = r.floor().to_integer();
    let frac = r - Rat::from_integer(floor.clone());
    let half = rat(1, 2);
    if frac > half || (frac == half && r.is_negative()) {
        floor + 1
    } else {
        floor
    }
}
