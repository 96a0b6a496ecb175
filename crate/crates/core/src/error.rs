use alloc::boxed::Box;

use crate::ops::OpKind;

/// Why an edge list failed to describe a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeViolation {
    Empty,
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    Cycle { u: usize, v: usize },
    Disconnected,
}

impl core::fmt::Display for TreeViolation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TreeViolation::Empty => write!(f, "a tree needs at least one vertex"),
            TreeViolation::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
            TreeViolation::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            TreeViolation::DuplicateEdge { u, v } => write!(f, "duplicate edge {u} {v}"),
            TreeViolation::Cycle { u, v } => write!(f, "edge {u} {v} closes a cycle"),
            TreeViolation::Disconnected => write!(f, "graph is disconnected"),
        }
    }
}

/// Which precondition of a tree operation did not hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    /// The attachment vertex must lie in some set that is both a minimum
    /// vertex cover and a minimum total dominating set.
    InSomeGttSet,
    /// The attachment vertex must not be quasi-isolated.
    NotQuasiIsolated,
    InSomeMinTds,
    InSomeMinVc,
}

impl core::fmt::Display for Precondition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Precondition::InSomeGttSet => "vertex is in no (gamma_t-tau)-set",
            Precondition::NotQuasiIsolated => "vertex is quasi-isolated",
            Precondition::InSomeMinTds => "vertex is in no minimum total dominating set",
            Precondition::InSomeMinVc => "vertex is in no minimum vertex cover",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(TreeViolation),
    #[error("vertex {vertex} out of range for a tree on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} is not in the set")]
    NotInSet { vertex: usize },
    #[error("a single vertex has no total dominating set")]
    NoTotalDominatingSet,
    #[error("tree has {n} vertices, the exhaustive oracle is capped at {cap}")]
    TooLargeForOracle { n: usize, cap: usize },
    #[error("set is not a minimum total dominating set")]
    NotAGammaTSet,
    #[error("tree is a star")]
    IsStar,
    #[error("tree has {n} vertices, at least {min} required")]
    TooSmall { n: usize, min: usize },
    #[error("{op} at vertex {vertex}: {failed}")]
    PreconditionViolated { op: OpKind, vertex: usize, failed: Precondition },
    #[error("operation {op} is not allowed in a construction certificate")]
    NotAConstructionOp { op: OpKind },
    #[error("certificate step {step}: {source}")]
    StepFailed { step: usize, source: Box<Error> },
    #[error("certificate step {step}: expected {expected} vertices after the step, got {actual}")]
    SizeMismatch { step: usize, expected: usize, actual: usize },
    #[error("certificate does not replay to the given tree")]
    CertificateMismatch,
    #[error("target size {target} needs oracle checks beyond the cap of {cap} vertices")]
    OracleCapExceeded { target: usize, cap: usize },
}
