use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    Input(String),

    /// The searched object provably does not exist within the given budget.
    #[error("no colouring with at most {budget} colours exists")]
    Infeasible { budget: usize },

    #[error("search limit of {nodes} nodes exceeded")]
    ResourceLimit { nodes: u64 },

    /// A guarantee the algorithm relies on was violated. Always a bug or a
    /// corrupted intermediate result.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The composition does not satisfy a structural requirement (e.g. it is
    /// not robust enough for the rounding bound).
    #[error("structural requirement failed: {0}")]
    Structural(String),

    #[error("invalid strip colouring spec: {0}")]
    Spec(String),

    #[error("decomposition required: {0}")]
    DecompositionRequired(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Contract(_) => 2,
            Error::ResourceLimit { .. } => 3,
            _ => 1,
        }
    }
}
