//! Clifford algebras of diagonal quadratic forms over ℚ, quaternion Brauer
//! classes as ramification sets, the Clifford–Witt invariant, constructive
//! factorization of isometries into reflections, and spinor norms.

pub mod algebra;
pub mod brauer;
pub mod reflect;

pub use algebra::{clifford_multiply, CliffordElement};
pub use brauer::{clifford_witt_invariant, cw_hasse_correction, quaternion_class, BrauerClass2};
pub use reflect::{
    apply_reflections, reflection_factorization, spinor_norm, squarefree_part,
};

use exactnum::NumError;
use quadspace::QuadError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliffordError {
    #[error("elements live in Clifford algebras of different forms")]
    FormMismatch,
    #[error("ramification set has odd cardinality")]
    OddRamification,
    #[error("matrix is not an isometry: entry ({row}, {col}) of TᵗGT differs from G")]
    NotIsometry { row: usize, col: usize },
    #[error("isometry has determinant -1; the spinor norm here is defined on SO only")]
    ImproperIsometry,
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Num(#[from] NumError),
}

pub type Result<T> = std::result::Result<T, CliffordError>;
