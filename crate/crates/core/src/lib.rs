//! Decide, explain and check for which cube-free radicands d the 3-class
//! group of k = Q(∛d, ζ₃) is of type (9, 3).
//!
//! The crate is organized bottom-up:
//!
//! - [`eisenstein`]: exact arithmetic in Z[ω], cubic residue characters.
//! - [`radicand`]: cube-free normalization and the residue-class
//!   decomposition of d modulo 9.
//! - [`ramification`]: ramified primes of Γ and of k/k₀, `t`, `q*` and the
//!   ambiguous-class rank.
//! - [`genus`]: genus number and defining polynomials of the fields M(p).
//! - [`classifier`]: the elimination pipeline and certified verdicts.
//! - [`data_bridge`]: tabulated class-number data, persistence and an
//!   optional external computer-algebra adapter.

pub mod arith;
pub mod classifier;
pub mod data_bridge;
pub mod eisenstein;
pub mod error;
pub mod genus;
pub mod radicand;
pub mod ramification;

pub use eisenstein::{CubicCharacterValue, EisensteinInt};
pub use error::{Error, Result};

/// Eisenstein integers over the default 128-bit carrier.
pub type Eisenstein = EisensteinInt<i128>;
/// Eisenstein integers over a 64-bit carrier.
pub type Eisenstein64 = EisensteinInt<i64>;
