//! Integer scalars for the exact linear algebra.
//!
//! Everything in [`crate::homology`] is generic over [`Scalar`]. The crate
//! root exposes aliases for the two instantiations that matter in practice:
//! arbitrary precision ([`num_bigint::BigInt`], the default everywhere else in
//! the crate) and machine `i64` for callers who know their entries stay small.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact Euclidean ring of integers.
pub trait Scalar:
    Clone + Debug + Display + Ord + Hash + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type cannot represent i64 value")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + Ord + Hash + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Greatest common divisor of a sequence, nonnegative, `0` for an empty or all-zero input.
pub fn gcd_all<'a, T: Scalar, I: IntoIterator<Item = &'a T>>(values: I) -> T {
    values.into_iter().fold(T::zero(), |acc, v| acc.gcd(v))
}
