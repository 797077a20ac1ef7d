//! Representation of numerical sets and semigroups.

mod bits;
mod semigroup;
mod set;
mod text;

pub(crate) use bits::Words;
pub use semigroup::{GeneratorList, NumericalSemigroup};
pub use set::{NumericalSet, Profile, DEFAULT_MAX_FROBENIUS};

pub(crate) mod raw {
    pub(crate) use super::bits::{iter_ones, set, shifted_intersects};
}
