//! Group families of order `27p`, their elements, subgroups, and
//! automorphism search.

mod aut;
mod descriptor;
mod element;
mod group;
mod subgroup;

pub use aut::{enumerate_gensets, enumerate_minimal_triples, genset_equivalent, Automorphism};
pub(crate) use descriptor::modpow;
pub use descriptor::{GroupDescriptor, QFamily};
pub use element::Element;
pub use group::{find_primitive_cube_roots, is_prime, Group, W_MATRIX};
pub use subgroup::{sylow_count, StructuralKind, Subgroup};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("p = {0} is not an odd prime >= 5")]
    InvalidPrime(u32),
    #[error("no primitive cube root of unity mod {0} (need p = 1 mod 3)")]
    NoCubeRoot(u32),
    #[error("invalid action payload: {0}")]
    InvalidAction(String),
    #[error("element does not belong to this group")]
    FamilyMismatch,
    #[error("malformed descriptor: {0}")]
    BadDescriptor(String),
    #[error("malformed element: {0}")]
    BadElement(String),
    #[error("set does not generate the group")]
    NotGenerating,
}
