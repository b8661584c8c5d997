//! Exact arithmetic for the finite groups of order `27p`, their Cayley
//! graphs and right-coset quotient multigraphs, and a toolkit of
//! voltage-based lifts that turns quotient hamiltonian cycles into
//! verified hamiltonian cycles of the full graph.
//!
//! Everything a lift produces is replayed through an independent walk
//! verifier before it is handed out, and can be serialized as a
//! self-contained JSON certificate that external tooling can re-check.

pub mod algebra;
pub mod cases;
pub mod graph;
pub mod lift;
