use thiserror::Error;

use crate::graph::Edge;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("not a spanning tree: {0}")]
    NotSpanningTree(String),

    #[error("edge {0} is not an edge of the host graph")]
    EdgeNotInHost(Edge),

    #[error("edge {0} is already a tree edge")]
    EdgeAlreadyInTree(Edge),

    #[error("edge {0} does not lie on the fundamental cycle of {1}")]
    EdgeNotOnCycle(Edge, Edge),

    #[error("exchange of {0} for itself is the identity")]
    IdentityExchange(Edge),

    #[error("trees belong to different host graphs")]
    HostMismatch,

    #[error("search budget of {budget} exceeded during {operation}")]
    BudgetExceeded { operation: &'static str, budget: u64 },

    #[error("no spanning tree with {k} leaves: spectrum is [{min}, {max}]")]
    InfeasibleLeafCount { k: usize, min: usize, max: usize },

    #[error("invalid stem set: {0}")]
    InvalidStemSet(String),

    #[error("graph is not 6-regular (vertex {vertex} has degree {degree})")]
    NotSixRegular { vertex: usize, degree: usize },

    #[error("leaf count of start tree exceeds leaf count of target tree")]
    NotMonotoneEndpoints,

    #[error("generator parameter out of range: {0}")]
    BadGeneratorParameter(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("tree file is bound to host {found}, expected {expected}")]
    TreeHostHashMismatch { expected: String, found: String },

    #[error("tree file is missing the `# tree-of:` host binding header")]
    MissingTreeHostHash,

    #[error("trace replay diverged at step {step}: {message}")]
    ReplayMismatch { step: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
