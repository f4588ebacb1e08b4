use thiserror::Error;

/// Hard cap on dense node count; the whole pipeline is O(N^3).
pub const MAX_NODES: usize = 4096;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("empty edge list")]
    EmptyInput,

    #[error("negative weight {weight} on edge {u} -- {v}")]
    NegativeWeight { u: String, v: String, weight: f64 },

    #[error("self-loop on node {0}")]
    SelfLoop(String),

    #[error("node {0} is isolated (zero weighted degree)")]
    IsolatedVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has {n} nodes, above the dense cap of {MAX_NODES}")]
    TooLarge { n: usize },

    #[error("{kind} needs at least {min} nodes per side, got {got}")]
    SizeBelowMinimum {
        kind: &'static str,
        min: usize,
        got: usize,
    },

    #[error("laziness beta[{node}] = {value} outside (0, 1]")]
    BadLaziness { node: usize, value: f64 },

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("matrix not symmetric (max |a - a^T| = {max_dev:e})")]
    NonSymmetric { max_dev: f64 },

    #[error("eigensolver did not converge (off-diagonal norm {off_norm:e})")]
    NoConvergence { off_norm: f64 },

    #[error("stationary entry pi[{node}] is not positive")]
    NonPositiveStationary { node: usize },

    #[error("node {node} out of range (graph has {n} nodes)")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("embedding dimension {k} out of range 1..={max}")]
    DimensionOutOfRange { k: usize, max: usize },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI exit code: 1 for usage problems, 2 for data problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
