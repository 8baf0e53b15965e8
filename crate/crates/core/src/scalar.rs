//! Scalar abstractions for the polynomial engine.
//!
//! `Ring` is the minimal bound for polynomial arithmetic, `Scalar` adds
//! division (a field), and `ExactDiv` marks integral domains where the
//! fraction-free eliminations may divide. Concrete instantiations are
//! `BigRational` for ℚ, `NfElem` for number fields, and the float types
//! for quick numeric work.

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Integral domain with exact quotients where they exist.
pub trait ExactDiv: Ring {
    /// `self / d`, panicking when the division is not exact.
    fn exact_div(&self, d: &Self) -> Self;
}

/// A field scalar.
pub trait Scalar: Ring + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Scalar for BigRational {}
impl Scalar for f64 {}

impl ExactDiv for BigRational {
    fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "exact_div by zero");
        self / d
    }
}

impl ExactDiv for f64 {
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
}
