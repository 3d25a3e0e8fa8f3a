use koszul_core::Error as CoreError;
use thiserror::Error;

use crate::graph6::Graph6Error;

/// Process exit codes shared by every subcommand.
pub mod exit {
    pub const OK: u8 = 0;
    pub const OTHER: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const DISCONNECTED: u8 = 3;
    pub const CAP: u8 = 4;
}

#[derive(Debug, Error)]
pub enum LabError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{what}: n = {n} exceeds the cap of {max}")]
    Cap { what: &'static str, n: usize, max: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl LabError {
    pub fn exit_code(&self) -> u8 {
        match self {
            LabError::Parse(_) => exit::PARSE,
            LabError::Graph6(Graph6Error::TooLarge { .. }) => exit::CAP,
            LabError::Graph6(_) => exit::PARSE,
            LabError::Core(CoreError::Disconnected { .. }) => exit::DISCONNECTED,
            LabError::Core(CoreError::TooLarge { .. }) => exit::CAP,
            LabError::Core(
                CoreError::NoVertices
                | CoreError::VertexOutOfRange { .. }
                | CoreError::Loop { .. }
                | CoreError::DuplicateEdge(..)
                | CoreError::InvalidBasis(_)
                | CoreError::DimensionMismatch { .. }
                | CoreError::VeroneseRange { .. }
                | CoreError::NoEdges,
            ) => exit::PARSE,
            LabError::Cap { .. } => exit::CAP,
            LabError::Core(_) | LabError::Io(_) => exit::OTHER,
        }
    }
}
