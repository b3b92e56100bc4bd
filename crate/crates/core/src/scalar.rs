//! The integer scalar every dimension vector is built on.
//!
//! Verdicts depend on exact sign comparisons, so only signed primitive
//! integers qualify and every arithmetic step is checked.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{NumCast, PrimInt, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// A signed primitive integer usable as a dimension-vector entry.
///
/// Blanket-implemented for `i8` through `i128`.
pub trait Scalar: PrimInt + Signed + Hash + Debug + Display + Send + Sync + 'static {}

impl<T> Scalar for T where T: PrimInt + Signed + Hash + Debug + Display + Send + Sync + 'static {}

pub(crate) fn add<T: Scalar>(a: T, b: T) -> Result<T> {
    a.checked_add(&b).ok_or(Error::Overflow)
}

pub(crate) fn sub<T: Scalar>(a: T, b: T) -> Result<T> {
    a.checked_sub(&b).ok_or(Error::Overflow)
}

pub(crate) fn mul<T: Scalar>(a: T, b: T) -> Result<T> {
    a.checked_mul(&b).ok_or(Error::Overflow)
}

pub(crate) fn cast<T: Scalar, N: ToPrimitive>(n: N) -> Result<T> {
    <T as NumCast>::from(n).ok_or(Error::Overflow)
}
