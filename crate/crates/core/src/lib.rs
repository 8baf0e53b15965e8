//! Exact-arithmetic machinery for fully explicit Chevalley–Weil bounds on
//! coverings of curves, together with the empirical certification harness
//! that checks the bounds and the ramification predictions on concrete
//! coverings over ℚ.
//!
//! The polynomial core is generic over the scalar type (anything modelling
//! a field through the `num-traits` operator bounds); the concrete
//! instantiations used throughout are the exact ones below.

pub mod scalar;
pub(crate) mod util;

pub mod interval;
pub mod poly;
pub mod primes;

pub mod polyfactor;

pub mod numfield;

pub mod heights;

pub mod eliminate;

pub mod puiseux;

pub mod badplaces;

pub mod bounds;

pub mod verify;

use num_rational::BigRational;

/// Rational scalars.
pub type Q = BigRational;
/// Univariate polynomials over ℚ.
pub type QPoly = poly::Poly1<Q>;
/// Bivariate polynomials over ℚ (Y-major, X-coefficient polynomials).
pub type QPoly2 = poly::Poly2<Q>;
/// Univariate polynomials over a number field.
pub type NfPoly = poly::Poly1<numfield::NfElem>;
/// Bivariate polynomials over a number field.
pub type NfPoly2 = poly::Poly2<numfield::NfElem>;

/// Library-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("not irreducible")]
    NotIrreducible,
    #[error("zero vector")]
    ZeroVector,
    #[error("field tower too large (degree {0} exceeds cap {1})")]
    FieldTowerTooLarge(usize, usize),
    #[error("increase truncation: order {have} cannot certify cutoff {need}")]
    IncreaseTruncation { have: i64, need: i64 },
    #[error("not close: |ξ-α| ≥ 1 at every extension of {0}")]
    NotClose(u64),
    #[error("no embedding witness between the given fields")]
    NoEmbedding,
    #[error("bound formula requires n ≥ 2")]
    DegreeTooSmallForBound,
    #[error("fiber at infinity; transform model")]
    FiberAtInfinity,
    #[error("y-expression does not define a covering map")]
    NotACovering,
    #[error("degree mismatch: expected ñ = n·ν")]
    DegreeMismatch,
    #[error("cannot certify: {0}")]
    Uncertified(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
