//! Signed generator labels, walks, and the hamiltonian-cycle verifier.

use super::GraphError;
use crate::algebra::Element;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A signed generator index: `+k` is the k-th element of `S` (1-based),
/// `-k` its formal inverse. `0` is never valid.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Label(i8);

impl Label {
    pub fn new(v: i8) -> Result<Label, GraphError> {
        if v == 0 {
            return Err(GraphError::ZeroLabel);
        }
        Ok(Label(v))
    }

    pub fn gen(k: usize) -> Label {
        Label(k as i8)
    }

    pub fn gen_inv(k: usize) -> Label {
        Label(-(k as i8))
    }

    pub fn value(self) -> i8 {
        self.0
    }

    /// 1-based generator index.
    pub fn generator(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Label {
        Label(-self.0)
    }

    /// Dense slot used by the step tables: `+k -> 2(k-1)`, `-k -> 2(k-1)+1`.
    pub(crate) fn slot(self) -> usize {
        (self.generator() - 1) * 2 + usize::from(self.is_inverse())
    }

    pub fn name(self) -> String {
        if self.is_inverse() {
            format!("s{}^-1", self.generator())
        } else {
            format!("s{}", self.generator())
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({:+})", self.0)
    }
}

/// A walk: a start vertex (an element, or any member of a start coset)
/// plus a label sequence. Vertices are recomputed during verification, so
/// a stored walk stays small and self-checking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub start: Element,
    pub labels: Vec<Label>,
}

impl Walk {
    pub fn new(start: Element, labels: Vec<Label>) -> Walk {
        Walk { start, labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Common surface of the Cayley graph and the quotient multigraph: dense
/// vertex indices, label-indexed deterministic steps.
pub trait VertexGraph {
    fn vertex_count(&self) -> usize;
    /// The label alphabet `S ∪ S^{-1}` (collapsed when a generator is an
    /// involution).
    fn alphabet(&self) -> &[Label];
    /// One step along a label; `None` when the label is not in the
    /// alphabet.
    fn step(&self, v: usize, l: Label) -> Option<usize>;
    fn vertex_key(&self, v: usize) -> String;
    /// Vertex holding the given element (for quotients: its coset).
    fn locate(&self, e: &Element) -> Option<usize>;
    /// Element carried by a vertex (for quotients: the coset
    /// representative). Inverse of `locate` up to coset membership.
    fn vertex_element(&self, v: usize) -> Element;
}

/// Outcome of replaying a walk as a hamiltonian-cycle claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamVerdict {
    Ok,
    WrongLength { expected: usize, actual: usize },
    BadLabel { step: usize, label: Label },
    Revisit { step: usize },
    NotClosed,
    UnknownStart,
}

impl HamVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, HamVerdict::Ok)
    }
}

impl fmt::Display for HamVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HamVerdict::Ok => write!(f, "ok"),
            HamVerdict::WrongLength { expected, actual } => {
                write!(f, "wrong length: expected {expected}, got {actual}")
            }
            HamVerdict::BadLabel { step, label } => {
                write!(f, "bad label {:?} at step {step}", label)
            }
            HamVerdict::Revisit { step } => write!(f, "vertex revisited at step {step}"),
            HamVerdict::NotClosed => write!(f, "walk does not return to its start"),
            HamVerdict::UnknownStart => write!(f, "start vertex is not in the graph"),
        }
    }
}

/// Replays the walk and accepts exactly when it is closed, has length equal
/// to the vertex count, and visits every vertex once.
pub fn verify_hamiltonian<G: VertexGraph + ?Sized>(g: &G, walk: &Walk) -> HamVerdict {
    let n = g.vertex_count();
    if walk.labels.len() != n {
        return HamVerdict::WrongLength { expected: n, actual: walk.labels.len() };
    }
    let Some(start) = g.locate(&walk.start) else {
        return HamVerdict::UnknownStart;
    };
    let mut visited = vec![false; n];
    visited[start] = true;
    let mut cur = start;
    for (i, &l) in walk.labels.iter().enumerate() {
        let Some(next) = g.step(cur, l) else {
            return HamVerdict::BadLabel { step: i, label: l };
        };
        if i + 1 == n {
            if next != start {
                return HamVerdict::NotClosed;
            }
        } else {
            if visited[next] {
                return HamVerdict::Revisit { step: i };
            }
            visited[next] = true;
        }
        cur = next;
    }
    HamVerdict::Ok
}

/// Vertex sequence of a walk, starting vertex included; `None` on a bad
/// label or start.
pub fn trace<G: VertexGraph + ?Sized>(g: &G, walk: &Walk) -> Option<Vec<usize>> {
    let mut cur = g.locate(&walk.start)?;
    let mut out = Vec::with_capacity(walk.labels.len() + 1);
    out.push(cur);
    for &l in &walk.labels {
        cur = g.step(cur, l)?;
        out.push(cur);
    }
    Some(out)
}
