//! Exact Gram–Schmidt orthogonalization.
//!
//! For a basis v₁,…,vₙ the orthogonalization v′₁,…,v′ₙ satisfies
//! v_j = v′_j + Σ_{i<j} c_{ij} v′_i with C upper unit triangular, and the
//! B-Gram matrix factors as Cᵗ·diag(h₁,…,hₙ)·C with h_j = Q(v′_j). The C
//! and h_j with these properties are unique.

use crate::{Lattice, LatticeError, Result};
use exactnum::Rat;
use num_traits::{One, Zero};
use quadspace::Mat;

#[derive(Debug, Clone, PartialEq)]
pub struct Gso {
    /// Ambient coordinates of the orthogonal vectors v′_j.
    pub orthogonal: Vec<Vec<Rat>>,
    /// Upper unit-triangular coefficient matrix, c[(i,j)] for i < j.
    pub c: Mat,
    /// h_j = Q(v′_j), all positive for positive definite input.
    pub h: Vec<Rat>,
}

/// Gram–Schmidt data of a positive definite lattice basis.
pub fn gram_schmidt(l: &Lattice) -> Result<Gso> {
    let m = l.gram().mat().scale(&Rat::new(1.into(), 2.into())); // B-Gram
    let (h, c) = gso_from_b_gram(&m)?;
    // v′_j in basis coordinates: e_j − Σ_{k<j} c_{kj}·(v′_k coords).
    let n = m.rows();
    let mut coords: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = vec![Rat::zero(); n];
        v[j] = Rat::one();
        for k in 0..j {
            for (idx, item) in v.iter_mut().enumerate() {
                let sub = &c[(k, j)] * &coords[k][idx];
                *item -= sub;
            }
        }
        coords.push(v);
    }
    let orthogonal = coords.iter().map(|v| l.basis().apply(v)).collect();
    Ok(Gso { orthogonal, c, h })
}

/// Cholesky-style recursion on a B-Gram matrix: returns (h, C) or the
/// 1-based index of the first non-positive leading principal minor.
pub(crate) fn gso_from_b_gram(m: &Mat) -> Result<(Vec<Rat>, Mat)> {
    let n = m.rows();
    let mut h: Vec<Rat> = Vec::with_capacity(n);
    let mut c = Mat::identity(n);
    for j in 0..n {
        // d_i = B(v_j, v′_i), accumulated left to right.
        let mut d: Vec<Rat> = Vec::with_capacity(j + 1);
        for i in 0..=j {
            let mut val = m[(i, j)].clone();
            for k in 0..i {
                let sub = &c[(k, i)] * &d[k];
                val -= sub;
            }
            if i < j {
                c[(i, j)] = &val / &h[i];
            }
            d.push(val);
        }
        let hj = d.pop().expect("diagonal entry");
        if hj <= Rat::zero() {
            return Err(LatticeError::NotPositiveDefinite { minor: j + 1 });
        }
        h.push(hj);
    }
    Ok((h, c))
}
