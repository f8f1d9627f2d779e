//! Subuniverses, congruences, quotients, isomorphism search and rigidity.

mod bitset;
mod congruence;
mod iso;
mod rigid;
mod subuniverse;

pub use bitset::ElemSet;
pub use congruence::{
    congruence_generated_by, congruence_lattice, is_compatible, is_simple, is_subdirectly_irreducible, monolith,
    principal_congruence, quotient, upper_covers, Congruence,
};
pub use iso::{exists_embedding, is_homomorphism, is_isomorphic};
pub use rigid::{is_rigid, is_tight_reduct, stiffk3_subalgebra};
pub(crate) use subuniverse::{closed_supersets, closure_set};
pub use subuniverse::{
    closure_violation, enumerate_subuniverses, enumerate_subuniverses_up_to_iso, generated_subuniverse,
    generated_zero_free, is_subuniverse, SubUniverse,
};
