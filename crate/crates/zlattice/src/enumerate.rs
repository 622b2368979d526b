//! Short-vector enumeration and successive minima.
//!
//! Enumeration walks the Gram–Schmidt cone: with ξ_i = x_i + Σ_{j>i} c_{ij}x_j
//! one has Q(Σ x_i v_i) = Σ h_i ξ_i², so coordinates are chosen from the last
//! to the first inside exact rational intervals. No floating point is used,
//! hence no vector inside the bound can be missed.

use crate::gso::gso_from_b_gram;
use crate::lll::lll_reduce;
use crate::{Lattice, LatticeError, Result};
use exactnum::{rat, Int, Rat};
use num_traits::{Signed, Zero};
use quadspace::Mat;

/// Nodes the enumeration may visit before giving up.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// A lattice vector with Q(x) ≤ bound, in basis coordinates, up to sign
/// (the first nonzero coordinate is positive).
#[derive(Debug, Clone, PartialEq)]
pub struct ShortVector {
    pub coords: Vec<Int>,
    pub q: Rat,
}

/// All nonzero lattice vectors with Q ≤ bound, up to sign, sorted by
/// (Q, coordinates). Exhausting the node budget is an error distinct from
/// an empty result.
pub fn short_vectors(l: &Lattice, bound: &Rat) -> Result<Vec<ShortVector>> {
    short_vectors_with_budget(l, bound, DEFAULT_NODE_BUDGET)
}

pub fn short_vectors_with_budget(l: &Lattice, bound: &Rat, budget: u64) -> Result<Vec<ShortVector>> {
    let m = l.gram().mat().scale(&rat(1, 2)); // B-Gram
    let (h, c) = gso_from_b_gram(&m)?;
    let n = h.len();
    let mut walker = Walker {
        h,
        c,
        bound: bound.clone(),
        budget,
        visited: 0,
        x: vec![Int::zero(); n],
        out: Vec::new(),
    };
    if bound >= &Rat::zero() {
        walker.descend(n, Rat::zero())?;
    }
    let mut out = walker.out;
    out.sort_by(|a, b| a.q.cmp(&b.q).then_with(|| a.coords.cmp(&b.coords)));
    Ok(out)
}

struct Walker {
    h: Vec<Rat>,
    c: Mat,
    bound: Rat,
    budget: u64,
    visited: u64,
    x: Vec<Int>,
    out: Vec<ShortVector>,
}

impl Walker {
    /// Choose x_{level−1}, with x_{level..} fixed and partial value `s`.
    fn descend(&mut self, level: usize, s: Rat) -> Result<()> {
        if level == 0 {
            if let Some(first) = self.x.iter().find(|v| !v.is_zero()) {
                if first.is_positive() {
                    self.out.push(ShortVector { coords: self.x.clone(), q: s });
                }
            }
            return Ok(());
        }
        let i = level - 1;
        let n = self.x.len();
        let mut t = Rat::zero();
        for j in level..n {
            t += &self.c[(i, j)] * Rat::from_integer(self.x[j].clone());
        }
        let remaining = &self.bound - &s;
        // Feasible x_i form a contiguous interval around −t; probe outward
        // from the two integers nearest the center, small |x_i| first and
        // the positive branch before the negative one.
        let center_floor = (-&t).floor().to_integer();
        let mut feasible: Vec<(Int, Rat)> = Vec::new();
        let mut probe = |x: &Int, this: &mut Walker| -> Result<Option<Rat>> {
            this.visited += 1;
            if this.visited > this.budget {
                return Err(LatticeError::BudgetExhausted { visited: this.visited });
            }
            let xi = Rat::from_integer(x.clone()) + &t;
            let contribution = &this.h[i] * &xi * &xi;
            Ok((contribution <= remaining).then_some(contribution))
        };
        let mut down = center_floor.clone();
        while let Some(contribution) = probe(&down, self)? {
            feasible.push((down.clone(), contribution));
            down -= 1;
        }
        let mut up = &center_floor + 1;
        while let Some(contribution) = probe(&up, self)? {
            feasible.push((up.clone(), contribution));
            up += 1;
        }
        feasible.sort_by(|a, b| {
            a.0.abs().cmp(&b.0.abs()).then_with(|| b.0.cmp(&a.0))
        });
        for (x, contribution) in feasible {
            self.x[i] = x;
            let s_next = &s + &contribution;
            self.descend(i, s_next)?;
        }
        self.x[i] = Int::zero();
        Ok(())
    }
}

/// Successive minima with witnesses.
#[derive(Debug, Clone, PartialEq)]
pub struct Minima {
    /// μ₁ ≤ … ≤ μ_n.
    pub mu: Vec<Rat>,
    /// Witness vectors in basis coordinates, linearly independent, Q = μ_j.
    pub witnesses: Vec<Vec<Int>>,
}

/// The successive minima μ₁ ≤ … ≤ μ_n of a positive definite lattice:
/// greedy selection of linearly independent vectors in order of Q over the
/// ball of radius max_j Q(w_j) of an LLL-reduced basis w.
pub fn successive_minima(l: &Lattice) -> Result<Minima> {
    let (reduced, u) = lll_reduce(l, &rat(3, 4))?;
    let m = reduced.gram();
    let n = m.dim();
    let bound = (0..n)
        .map(|i| m.entry(i, i) / rat(2, 1))
        .max()
        .expect("nonempty basis");
    let ball = short_vectors(&reduced, &bound)?;
    let mut mu = Vec::with_capacity(n);
    let mut witnesses: Vec<Vec<Int>> = Vec::with_capacity(n);
    let mut picked_cols: Vec<Vec<Rat>> = Vec::new();
    for sv in &ball {
        if witnesses.len() == n {
            break;
        }
        let col: Vec<Rat> = sv.coords.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let mut cols = picked_cols.clone();
        cols.push(col.clone());
        if Mat::from_cols(cols).rank() == picked_cols.len() + 1 {
            picked_cols.push(col);
            mu.push(sv.q.clone());
            // Back to the original basis coordinates through the transform.
            let orig = u.apply(
                &sv.coords.iter().map(|c| Rat::from_integer(c.clone())).collect::<Vec<_>>(),
            );
            witnesses.push(orig.into_iter().map(|r| r.to_integer()).collect());
        }
    }
    assert_eq!(witnesses.len(), n, "ball of the reduced basis contains a full independent set");
    Ok(Minima { mu, witnesses })
}
