//! Exact arithmetic for quadratic forms over ℚ and its completions ℚ_v.
//!
//! Everything in this crate is integer or rational arithmetic — no floating
//! point anywhere. The modules supply the number-theoretic substrate the
//! geometry crates build on: primality and factorization, places of ℚ,
//! p-adic valuations and square classes, the Legendre and Hilbert symbols,
//! even zeta values, and a small symbolic type for rational multiples of
//! half-integer powers of π (so mass computations can cancel π's exactly).

pub mod place;
pub mod primes;
pub mod squareclass;
pub mod symbols;
pub mod sympi;
pub mod zeta;

pub use place::{relevant_places, unit_part, valuation, Place, Valuation};
pub use squareclass::SquareClass;
pub use symbols::{hilbert_symbol, is_square_local, legendre_symbol};
pub use sympi::SymPi;

use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational, always kept in lowest terms by `num-rational`.
pub type Rat = num_rational::BigRational;

/// Shorthand for an [`Int`] from a machine integer.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand for a [`Rat`] from a numerator/denominator pair. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

/// A [`Rat`] from a plain integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

/// Errors from the arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    /// An argument that must be nonzero was zero (square classes and symbols
    /// are only defined on ℚ_v^×).
    #[error("argument must be nonzero")]
    ZeroArgument,
    /// A prime was required.
    #[error("{0} is not prime")]
    NotPrime(Int),
    /// The Legendre symbol needs an odd prime modulus.
    #[error("Legendre symbol requires an odd prime modulus, got {0}")]
    EvenModulus(Int),
    /// Square classes at different places cannot be combined.
    #[error("square classes live at different places: {0} vs {1}")]
    PlaceMismatch(Place, Place),
}

pub type Result<T> = std::result::Result<T, NumError>;
