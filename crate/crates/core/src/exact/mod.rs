//! Exact arithmetic: rationals, polynomials, rational functions, matrices.

mod mat;
mod poly;
mod ratfn;

pub use mat::{
    burnside_dimension, commutant_basis, rf_coeff_at_infinity, ExpandError, Mat, QMat, RFMat,
    RowSpan,
};
pub use poly::{rational_roots, Poly, QPoly};
pub use ratfn::{RatFn, RF};

use num::BigInt;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator (the `num` crate maintains both invariants).
pub type Rat = num::BigRational;

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from(BigInt::from(p))
}

/// Commutative ring with the element operations our generic containers need.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + num::Zero
    + num::One
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
        + num::Zero
        + num::One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
{
}

/// Ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Field for T where T: Ring + Div<Output = Self> {}
