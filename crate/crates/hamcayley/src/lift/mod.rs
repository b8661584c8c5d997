//! Hamiltonicity toolkit: voltages, cycle lifts through cyclic fibers,
//! a backtracking search oracle, and certificates.

mod certificate;
mod double;
mod hypotheses;
mod search;
mod voltage;

pub use certificate::{CertClaim, HamCertificate, ReplayError};
pub use double::{double_edge_lift, multidouble_lift, multidouble_voltages};
pub use hypotheses::{lemma_hypotheses, LemmaMatch};
pub use search::{ham_search, SearchOutcome};
pub use voltage::{fgl_lift, quotient_certificate, voltage};

use crate::graph::HamVerdict;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("walk is not closed in the quotient (voltage lies outside the subgroup)")]
    NotClosed,
    #[error("walk does not start at the subgroup's own coset")]
    StartOutsideSubgroup,
    #[error("walk is not a hamiltonian cycle of the quotient: {0}")]
    QuotientNotHamiltonian(HamVerdict),
    #[error("voltage does not generate the fiber subgroup")]
    VoltageDoesNotGenerate,
    #[error("the two labels are not congruent distinct elements mod the subgroup")]
    NotCongruent,
    #[error("subgroup does not qualify: {0}")]
    BadSubgroup(String),
    #[error("cycle uses no edge with the requested label")]
    NoEdgeLabelled,
    #[error("no substitution of up to two occurrences makes the voltage generate")]
    ExhaustedSubstitutions,
    #[error("cycle does not traverse the given double edge")]
    DoubleEdgeNotOnCycle,
    #[error("label {0} is not in the alphabet of this generating set")]
    UnknownLabel(i8),
    #[error("generating set cannot build the full graph: {0}")]
    BadGenset(String),
}
