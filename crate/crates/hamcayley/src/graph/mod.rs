//! Cayley graphs, right-coset quotient multigraphs, walk verification,
//! and DOT export.

mod cayley;
mod dot;
mod quotient;
mod walk;

pub use cayley::CayleyGraph;
pub use dot::export_dot;
pub use quotient::{DoubleEdge, QuotientMultigraph};
pub use walk::{trace, verify_hamiltonian, HamVerdict, Label, VertexGraph, Walk};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("the identity element cannot be a generator")]
    IdentityGenerator,
    #[error("generating set is empty")]
    EmptyGenset,
    #[error("label {0} is out of range for this generating set")]
    LabelOutOfRange(i8),
    #[error("label value 0 is not a valid signed generator index")]
    ZeroLabel,
    #[error("element is not a vertex of this graph")]
    UnknownVertex,
}
