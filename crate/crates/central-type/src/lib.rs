//! Exact-arithmetic twisted group algebras over finite groups.
//!
//! The crate decides whether a finite group is of central type (admits a
//! nondegenerate 2-cocycle, equivalently a simple twisted group algebra),
//! analyzes the semi-center of simple twisted group algebras, and carries
//! a catalog of the explicit groups and cocycles of orders 16, 81, 64 and
//! the dihedral example of order 8. All scalars are roots of unity stored
//! as exponents; there is no floating point anywhere.

pub mod arith;
pub mod catalog;
pub mod classify;
pub mod cocycles;
pub mod constructions;
pub mod dsl;
pub mod groups;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod twisted;

pub use arith::RootOfUnity;
pub use groups::{abelian_structure, character_group, embeds, AbelianStructure, Character, FiniteGroup, Subgroup};
