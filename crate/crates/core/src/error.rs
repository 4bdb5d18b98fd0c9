//! Crate-wide error type.
//!
//! Errors are grouped by the failure class they signal; the CLI maps
//! these onto process exit codes (`parse` → 3, `resource` → 4,
//! everything else → 2).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed arguments to a library operation (bad vertex id, set
    /// not valid for the graph, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// Instance text could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Inconsistent or out-of-range configuration (flags, parameter
    /// combinations, solver/ratio mismatches).
    #[error("configuration error: {0}")]
    Config(String),

    /// A mathematical precondition does not hold (KL divergence domain,
    /// runtime query constraints, graph outside the problem's class).
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is not defined for this graph shape
    /// (e.g. vertex degrees on a non-2-uniform hypergraph).
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// A stated algorithm precondition was violated
    /// (e.g. a sampling step invoked on a graph already in Π).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Work would exceed a configured enumeration or size cap.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A broken internal invariant; never expected to surface.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI reports for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 3,
            Error::Resource(_) => 4,
            _ => 2,
        }
    }
}
