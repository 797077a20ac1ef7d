//! Numerical sets and numerical semigroups.
//!
//! A numerical set is a cofinite subset of ℕ that contains 0; a numerical
//! semigroup is one that is also closed under addition. This crate computes
//! pseudo-Frobenius numbers and type, the T-set reflection and the chains it
//! generates, the associated and star-closure semigroups, ordinarization,
//! explicit families of prescribed type, and exhaustive counts of semigroups
//! by Frobenius number, genus and type.

pub mod enumeration;
pub mod error;
pub mod families;
pub mod numcore;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use numcore::{GeneratorList, NumericalSemigroup, NumericalSet, Profile};
