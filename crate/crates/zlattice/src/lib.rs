//! Exact geometry of ℤ-lattices in a rational quadratic space: Gram–Schmidt
//! orthogonalization, LLL and HKZ reduction, short-vector enumeration,
//! successive minima, Minkowski/Siegel membership tests, dual lattices, and
//! simultaneous diophantine approximation.
//!
//! Everything is exact rational arithmetic; there is no floating point
//! anywhere, so every inequality a caller checks against the returned data
//! is a theorem about the input, not an estimate.

pub mod catalog;
pub mod dioph;
pub mod enumerate;
pub mod gso;
pub mod lattice;
pub mod lll;
pub mod reduce;

pub use dioph::diophantine_approx;
pub use enumerate::{short_vectors, short_vectors_with_budget, successive_minima, Minima, ShortVector, DEFAULT_NODE_BUDGET};
pub use gso::{gram_schmidt, Gso};
pub use lattice::{dual_lattice, Lattice};
pub use lll::lll_reduce;
pub use reduce::{extends_to_minkowski_reduced, hkz_reduce, is_hkz, is_minkowski_reduced, is_siegel_member};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    /// Positive definiteness fails: the leading principal minor of this
    /// order (1-based) of the intrinsic Gram matrix is not positive.
    #[error("form is not positive definite: leading principal minor {minor} is not positive")]
    NotPositiveDefinite { minor: usize },
    /// Basis columns are linearly dependent.
    #[error("basis matrix does not have full column rank")]
    DependentBasis,
    /// LLL parameter outside (1/4, 1].
    #[error("LLL parameter alpha must lie in (1/4, 1]")]
    AlphaOutOfRange,
    /// Approximation quality outside (0, 1).
    #[error("epsilon must lie strictly between 0 and 1")]
    EpsilonOutOfRange,
    /// Enumeration gave up; this is an explicit failure, not an empty result.
    #[error("short-vector enumeration exceeded the node budget ({visited} nodes visited)")]
    BudgetExhausted { visited: u64 },
    /// An operation only implemented up to a dimension cutoff.
    #[error("operation supports dimension at most {max}, got {dim}")]
    UnsupportedDimension { dim: usize, max: usize },
    #[error(transparent)]
    Quad(#[from] quadspace::QuadError),
}

pub type Result<T> = std::result::Result<T, LatticeError>;
