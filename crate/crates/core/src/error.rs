use thiserror::Error;

/// Errors raised anywhere in the toolkit.
///
/// The variants map one-to-one onto the process exit codes of the command
/// line front end (see [`Error::exit_code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (unknown variable, bad arity, ...).
    #[error("input error: {0}")]
    Input(String),

    /// Syntax error in a polynomial expression or problem file.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    /// A step or wall-clock budget ran out before the computation finished.
    #[error("computation limit exceeded: {0}")]
    ComputationLimit(String),

    /// A mathematical hypothesis failed (non-isolated singularity, prefix
    /// chain not ICIS, ...).
    #[error("hypothesis failure: {0}")]
    Hypothesis(String),

    /// Two independent computations disagreed. Always a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }

    /// Process exit code: 1 input, 2 computation limit, 3 hypothesis failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Syntax { .. } => 1,
            Error::ComputationLimit(_) => 2,
            Error::Hypothesis(_) => 3,
            Error::Internal(_) => 70,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
