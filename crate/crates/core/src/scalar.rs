//! Integer scalars.
//!
//! Every matrix, group and chain map in this crate is generic over an exact
//! integer type. [`num_bigint::BigInt`] is the default everywhere (see the
//! aliases at the crate root); fixed-width types such as `i64` also satisfy
//! the bound and are handy for quick experiments, but they carry the usual
//! overflow caveat.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as matrix entries.
pub trait Int:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Int for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Shorthand used by tests and examples: `int::<T>(3)`.
pub fn int<T: Int>(v: i64) -> T {
    T::from_i64(v).expect("integer conversion")
}
