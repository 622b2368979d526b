//! Quadratic spaces: exact rational Gram-matrix algebra, diagonalization,
//! the invariants (signature, determinant class, Hasse symbol), and the
//! local–global decision procedures for isotropy, representation, and
//! equivalence — plus quadratic forms over small finite fields, including
//! characteristic 2.
//!
//! Convention used throughout: a form is given by the Gram matrix of its
//! polar form b(x, y) = Q(x+y) − Q(x) − Q(y), so Q(x) = b(x, x)/2 and an
//! integral quadratic form has a b-Gram matrix with even diagonal.

pub mod finitefield;
pub mod gram;
pub mod mat;
pub mod space;

pub use gram::GramMatrix;
pub use mat::Mat;
pub use space::{
    diagonalize, equivalent, exists_even_unimodular, invariants, is_isotropic,
    is_square_rational, radical, represents_form, represents_number, witt_decomposition,
    RepVerdict, Scope, SpaceInvariants, WittSplit,
};

use exactnum::NumError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuadError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("form is degenerate (radical rank {radical_rank})")]
    Degenerate { radical_rank: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("unsupported finite field size {q}")]
    UnsupportedField { q: usize },
    #[error(transparent)]
    Num(#[from] NumError),
}

pub type Result<T> = std::result::Result<T, QuadError>;
