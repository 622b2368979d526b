//! Simultaneous diophantine approximation through lattice reduction.
//!
//! To approximate α₁,…,αₙ by pᵢ/q with |pᵢ − qαᵢ| ≤ ε and a denominator
//! bound q ≤ 2^{n(n+1)/4}·ε^{−n}, embed the problem in the lattice spanned
//! by e₁,…,eₙ and (α₁,…,αₙ,δ) with a carefully squashed last coordinate:
//! any short vector reads off a solution. Both bounds are then *verified*
//! exactly for every candidate, and the smallest admissible q is returned.

use crate::{catalog, short_vectors, Lattice, LatticeError, Result};
use crate::lll::lll_reduce;
use exactnum::{rat, Int, Rat};
use num_traits::{One, Signed, Zero};
use quadspace::Mat;

/// Approximate the αᵢ simultaneously: returns (p₁,…,pₙ, q) with
/// |pᵢ − q·αᵢ| ≤ ε for all i and 0 < q ≤ 2^{n(n+1)/4}·ε^{−n}, the smallest
/// q among the admissible candidates in the search ball.
pub fn diophantine_approx(alphas: &[Rat], eps: &Rat) -> Result<(Vec<Int>, Int)> {
    if eps <= &Rat::zero() || eps >= &Rat::one() {
        return Err(LatticeError::EpsilonOutOfRange);
    }
    let n = alphas.len();
    assert!(n > 0, "nothing to approximate");
    // δ = ε^{n+1} / 2^{⌈n(n+1)/4⌉}: rational, and at most the value ε^{n+1}
    // / 2^{n(n+1)/4} used in the classical argument, so a short first basis
    // vector — and with it an admissible solution — is still guaranteed.
    let quarter_exp = n * (n + 1);
    let pow2 = Int::one() << quarter_exp.div_ceil(4);
    let mut delta = Rat::from_integer(Int::one());
    for _ in 0..n + 1 {
        delta *= eps;
    }
    delta /= Rat::from_integer(pow2);

    // Ambient Q(x) = Σ xᵢ² on ℝ^{n+1}; columns e₁..eₙ and (α, δ).
    let ambient = catalog::i_lattice(n + 1).ambient().clone();
    let mut cols: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut c = vec![Rat::zero(); n + 1];
            c[i] = Rat::one();
            c
        })
        .collect();
    let mut last: Vec<Rat> = alphas.to_vec();
    last.push(delta);
    cols.push(last);
    let l = Lattice::new(ambient, Mat::from_cols(cols))?;

    let (reduced, u) = lll_reduce(&l, &rat(3, 4))?;
    // Every admissible (p, q) has Σ(pᵢ−qαᵢ)² + (δq)² ≤ nε² + ε², so the
    // ball below misses none of them.
    let ball_bound = eps * eps * rat((n + 1) as i64, 1);
    let ball = short_vectors(&reduced, &ball_bound)?;

    // q ≤ 2^{n(n+1)/4}·ε^{−n} checked exactly as q⁴·ε^{4n} ≤ 2^{n(n+1)}.
    let q_cap_pow4 = Rat::from_integer(Int::one() << quarter_exp);
    let eps_4n = {
        let mut e = Rat::one();
        for _ in 0..4 * n {
            e *= eps;
        }
        e
    };
    let mut best: Option<(Int, Vec<Int>)> = None;
    for sv in &ball {
        let coords: Vec<Rat> = sv.coords.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let orig = u.apply(&coords);
        let mut p: Vec<Int> = orig[..n].iter().map(|r| r.to_integer()).collect();
        let mut q = -orig[n].to_integer();
        if q.is_zero() {
            continue;
        }
        if q.is_negative() {
            q = -q;
            for pi in p.iter_mut() {
                *pi = -pi.clone();
            }
        }
        let q4 = Rat::from_integer(&q * &q * &q * &q);
        if &q4 * &eps_4n > q_cap_pow4 {
            continue;
        }
        let residuals_ok = (0..n).all(|i| {
            (Rat::from_integer(p[i].clone()) - Rat::from_integer(q.clone()) * &alphas[i]).abs() <= *eps
        });
        if !residuals_ok {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bq, bp)) => q < *bq || (q == *bq && p < *bp),
        };
        if better {
            best = Some((q, p));
        }
    }
    let (q, p) = best.expect("a solution within both stated bounds always exists in the ball");
    Ok((p, q))
}
