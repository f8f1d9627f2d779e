//! Finite bounded commutative integral residuated lattices, their twist-products
//! `K(A)`, admissible subalgebras, congruences and subvariety lattices.
//!
//! Elements of every algebra are the indices `0..size`. Tables are total and
//! row-major.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod limits;
pub mod structure;
pub mod term;
pub mod twist;
pub mod varieties;

pub use algebra::{leq, verify_algebra, Elem, FiniteAlgebra, Op, VerificationReport};
pub use error::{Error, Result};
pub use limits::Limits;
pub use term::{holds_identity, satisfies_profile, Identity, Profile, Term};
