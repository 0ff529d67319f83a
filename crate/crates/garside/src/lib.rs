//! Exact computations in Garside groups.
//!
//! The crate implements left-greedy normal forms, the lattice operations,
//! cycling and decycling, super/ultra/stable summit sets with conjugator
//! witnesses and minimal conjugacy graphs, exact rational translation
//! numbers, and finite-time algorithms for abelian subgroups: basis,
//! membership, conjugacy membership, subgroup equality and subgroup
//! conjugacy.
//!
//! Two Garside structures are bundled: the classical braid monoid on up to
//! 16 strands ([`Braid`]) and free-abelian lattices ([`FreeAbelian`]), the
//! latter serving as a degenerate oracle where all conjugacy machinery
//! collapses to equality.

pub mod abelian;
pub mod braid;
pub mod budget;
pub mod conjugacy;
pub mod element;
pub mod error;
pub mod intmat;
pub mod simultaneous;
pub mod structure;
pub mod translation;
pub mod zn;

pub use braid::Braid;
pub use budget::Budget;
pub use element::Element;
pub use error::{Error, Result};
pub use structure::Structure;
pub use zn::FreeAbelian;

/// An element of the braid group.
pub type BraidElement = Element<Braid>;
/// An element of a free-abelian lattice.
pub type AbelianElement = Element<FreeAbelian>;
