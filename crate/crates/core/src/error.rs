//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong when building or querying a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Structural invariant violated while building a hypergraph
    /// (duplicate labels, strict-mode edge of size < 2, duplicate edge, ...).
    Validation(String),
    /// A vertex index or label that is not part of the hypergraph.
    UnknownVertex(String),
    /// A set-degree query with an empty vertex set.
    EmptyQuery,
    /// Operation requires at least one vertex.
    EmptyHypergraph,
    /// Operation requires at least one edge.
    NoEdges,
    /// Edge index out of range.
    BadIndex(usize),
    /// Invalid constructor parameters.
    BadParams(String),
    /// A power graph base must be 2-uniform.
    NotAGraph,
    /// Sum/product operands must be uniform.
    NotUniform,
    /// Sum/product operands must share the same uniformity.
    MismatchedUniformity(usize, usize),
    /// Result would exceed the configured size guard.
    SizeCapExceeded(u128),
    /// Random generator parameters admit no solution.
    InfeasibleParams(String),
    /// An edge division that is not a partition into two non-empty parts.
    MalformedSpec(String),
    /// The same edge index appears twice in a division list.
    DuplicateIndex(usize),
    /// Isolated-edge check called on an edge that meets another edge.
    NotIsolated(usize),
    /// Weak-cut energy check called on a triple that is not a weak cut.
    NotAWeakCut,
    /// Weak-cut enumeration aborted: candidate divisions exceed the budget.
    WeakCutBudgetExceeded,
    /// Weak-cut detection requires a connected input.
    DisconnectedInput,
    /// Exact arithmetic requested beyond the dimension cap.
    DimensionCapExceeded { n: usize, cap: usize },
    /// The iterative eigensolver failed to converge (indicates a bug).
    ConvergenceFailure,
    /// Bound applies only to regular uniform hypergraphs.
    NotRegularUniform,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Validation(msg) => write!(f, "validation error: {msg}"),
            Error::UnknownVertex(v) => write!(f, "unknown vertex: {v}"),
            Error::EmptyQuery => write!(f, "set-degree query must be non-empty"),
            Error::EmptyHypergraph => write!(f, "hypergraph has no vertices"),
            Error::NoEdges => write!(f, "hypergraph has no edges"),
            Error::BadIndex(i) => write!(f, "edge index {i} out of range"),
            Error::BadParams(msg) => write!(f, "bad parameters: {msg}"),
            Error::NotAGraph => write!(f, "base hypergraph is not 2-uniform"),
            Error::NotUniform => write!(f, "hypergraph is not uniform"),
            Error::MismatchedUniformity(a, b) => {
                write!(f, "uniformity mismatch: {a}-graph vs {b}-graph")
            }
            Error::SizeCapExceeded(n) => write!(f, "result size {n} exceeds cap"),
            Error::InfeasibleParams(msg) => write!(f, "infeasible parameters: {msg}"),
            Error::MalformedSpec(msg) => write!(f, "malformed division: {msg}"),
            Error::DuplicateIndex(i) => write!(f, "edge index {i} divided twice"),
            Error::NotIsolated(i) => write!(f, "edge {i} is not isolated"),
            Error::NotAWeakCut => write!(f, "division triple is not a weak cut"),
            Error::WeakCutBudgetExceeded => write!(f, "weak-cut search budget exceeded"),
            Error::DisconnectedInput => write!(f, "input hypergraph is disconnected"),
            Error::DimensionCapExceeded { n, cap } => {
                write!(f, "dimension {n} exceeds exact-arithmetic cap {cap}")
            }
            Error::ConvergenceFailure => write!(f, "eigensolver failed to converge"),
            Error::NotRegularUniform => write!(f, "hypergraph is not regular uniform"),
        }
    }
}

impl core::error::Error for Error {}
