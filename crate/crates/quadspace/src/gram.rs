//! Gram matrices of quadratic spaces.
//!
//! The stored matrix is always the **b-Gram**: entries b(e_i, e_j) for the
//! symmetric bilinear form with Q(x) = b(x,x)/2. The "matrix of Q" in the
//! other convention, B = b/2, never appears in storage; code that needs the
//! determinant of the quadratic space uses [`GramMatrix::det_space`] =
//! det(b)/2^n, the determinant of a diagonalization by Q-coefficients.

use crate::mat::Mat;
use crate::QuadError;
use exactnum::{Int, Rat};
use num_traits::Zero;

/// A symmetric rational matrix representing a quadratic space in the b-Gram
/// convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    mat: Mat,
}

impl GramMatrix {
    pub fn new(mat: Mat) -> Result<GramMatrix, QuadError> {
        if !mat.is_symmetric() {
            return Err(QuadError::NotSymmetric);
        }
        Ok(GramMatrix { mat })
    }

    /// b-Gram from integer row literals; panics on asymmetry (test fixtures).
    pub fn from_b_rows(rows: &[&[i64]]) -> GramMatrix {
        GramMatrix::new(Mat::from_int_rows(rows)).expect("symmetric fixture")
    }

    /// Diagonal b-Gram diag(d₁, …, d_n).
    pub fn from_diag_b(d: &[Rat]) -> GramMatrix {
        let n = d.len();
        let mut m = Mat::zero(n, n);
        for (i, di) in d.iter().enumerate() {
            m[(i, i)] = di.clone();
        }
        GramMatrix { mat: m }
    }

    /// Space ⟨a₁, …, a_n⟩ given by Q-coefficients: Q(x) = Σ aᵢxᵢ², i.e. the
    /// b-Gram diag(2a₁, …, 2a_n).
    pub fn from_q_diag(a: &[Rat]) -> GramMatrix {
        let doubled: Vec<Rat> = a
            .iter()
            .map(|x| x * Rat::from_integer(Int::from(2)))
            .collect();
        GramMatrix::from_diag_b(&doubled)
    }

    /// Q-coefficients from integer literals (test fixtures).
    pub fn from_q_ints(a: &[i64]) -> GramMatrix {
        let a: Vec<Rat> = a
            .iter()
            .map(|&x| Rat::from_integer(Int::from(x)))
            .collect();
        GramMatrix::from_q_diag(&a)
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.mat[(i, j)]
    }

    /// b(x, y) = xᵗ G y.
    pub fn b(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let gy = self.mat.apply(y);
        x.iter()
            .zip(&gy)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |s, t| s + t)
    }

    /// Q(x) = b(x, x)/2.
    pub fn q(&self, x: &[Rat]) -> Rat {
        self.b(x, x) / Rat::from_integer(Int::from(2))
    }

    /// det of the b-Gram.
    pub fn det_b(&self) -> Rat {
        self.mat.det()
    }

    /// det of the quadratic space: det(b)/2^n, the determinant of any
    /// diagonalization written in Q-coefficients.
    pub fn det_space(&self) -> Rat {
        self.det_b() / Rat::from_integer(Int::from(2).pow(self.dim() as u32))
    }

    pub fn is_regular(&self) -> bool {
        !self.det_b().is_zero()
    }

    /// Orthogonal sum: block diagonal b-Gram.
    pub fn perp(&self, other: &GramMatrix) -> GramMatrix {
        let (n, m) = (self.dim(), other.dim());
        let mut out = Mat::zero(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self.mat[(i, j)].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                out[(n + i, n + j)] = other.mat[(i, j)].clone();
            }
        }
        GramMatrix { mat: out }
    }

    /// The congruent Gram TᵗGT — the form in the basis given by T's columns.
    pub fn congruent_by(&self, t: &Mat) -> GramMatrix {
        let m = &(&t.transpose() * &self.mat) * t;
        GramMatrix { mat: m }
    }

    /// The scaled space (V, c·Q).
    pub fn scaled(&self, c: &Rat) -> GramMatrix {
        GramMatrix {
            mat: self.mat.scale(c),
        }
    }

    /// The negated space (V, −Q).
    pub fn negated(&self) -> GramMatrix {
        self.scaled(&-Rat::from_integer(Int::from(1)))
    }
}
