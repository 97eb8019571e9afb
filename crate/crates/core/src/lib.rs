//! Numerical semigroups, their gap posets, normalized-ideal posets and
//! ideal class monoids, together with the algorithms that recover the
//! semigroup from abstract copies of each structure.
//!
//! The three recovery routes are:
//! - [`poset::reconstruct`]: from a poset isomorphic to the gap poset;
//! - [`ideal::recover_from_inclusion_poset`]: from the inclusion poset of
//!   normalized ideals;
//! - [`monoid::recover_from_abstract_monoid`]: from the bare Cayley table
//!   of the ideal class monoid.
//!
//! [`verify`] runs exhaustive pairwise non-isomorphism checks over the
//! census of semigroups up to a genus bound.

pub mod error;
pub mod ideal;
pub mod io;
pub mod monoid;
pub mod poset;
pub mod semigroup;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::{InclusionPoset, NormalizedIdeal};
pub use monoid::{AbstractMonoid, IdealClassMonoid};
pub use poset::{AbstractPoset, GapPoset};
pub use semigroup::NumericalSemigroup;
