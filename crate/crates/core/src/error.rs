use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("edge {edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: usize, vertex: usize },
    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("bounds at vertex {vertex} exceed its degree: f={f} g={g} d={degree}")]
    BoundsExceedDegree {
        vertex: usize,
        f: usize,
        g: usize,
        degree: usize,
    },
    #[error("instance is immediately infeasible at vertex {vertex}: f={f} g={g} d={degree}")]
    ImmediatelyInfeasible {
        vertex: usize,
        f: usize,
        g: usize,
        degree: usize,
    },
    #[error("not a permutation of the vertex set")]
    NotAPermutation,
    #[error("arc for edge {edge} does not match its endpoints")]
    ArcMismatch { edge: usize },
    #[error("orientation contains a directed cycle")]
    Cycle { cycle: Vec<usize> },
    #[error("terminals must be distinct")]
    SameTerminals,
    #[error("k and l must be positive")]
    NonPositiveDemand,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("input graph is disconnected (vertex {unreachable} unreachable)")]
    DisconnectedInput { unreachable: usize },
    #[error("instance has {vertex_count} vertices; oracle cap is {cap}")]
    TooLarge { vertex_count: usize, cap: usize },
    #[error("witness rejected: {0}")]
    InvalidWitness(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("edge between {u} and {v} has multiplicity {multiplicity} > 2")]
    MultiplicityTooHigh {
        u: usize,
        v: usize,
        multiplicity: usize,
    },
}

pub type Result<T, E = OrientError> = std::result::Result<T, E>;
