use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("{0} is not a rational prime")]
    NotPrime(u64),

    #[error("{0} is not a prime of Z[ω]")]
    NotEisensteinPrime(String),

    #[error("zero has no {0}")]
    Zero(&'static str),

    #[error("{0} has norm divisible by 3; no primary associate exists")]
    NoPrimaryAssociate(String),

    #[error("the modulus must have norm different from 3")]
    NormThreeModulus,

    #[error("prime {p} is not ≡ 1 (mod 3){hint}")]
    PrimeNotOneModThree { p: u64, hint: &'static str },

    #[error("{p} divides {a}")]
    Divisible { a: i64, p: u64 },

    #[error("radicand must be at least 2, got {0}")]
    RadicandTooSmall(u64),

    #[error("{0} is a perfect cube; Q(∛{0}) = Q")]
    PerfectCube(u64),

    #[error("{0} is not cube-free")]
    NotCubeFree(u64),

    #[error("unit index u must be 1 or 3, got {0}")]
    InvalidUnitIndex(u64),

    #[error("3-class number {0} is not a power of 3")]
    NotPowerOfThree(u64),

    #[error("(u/3)·h² is not an integer for h = {h}, u = {u}")]
    NonIntegralClassNumber { h: u64, u: u64 },

    #[error("invalid class group shape: {0}")]
    InvalidShape(String),

    #[error("contradiction: {0}")]
    Contradiction(String),

    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: invariant violated: {message}")]
    Invariant { line: usize, message: String },
}
