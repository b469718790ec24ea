use thiserror::Error;

use crate::params::DesignParams;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Parameters that cannot describe a design (non-integral, out of range, failing a screen).
    #[error("inadmissible parameters: {0}")]
    InadmissibleParameters(String),

    /// An operation was called on input outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("complement of a design with block size {k} on {n} points is degenerate")]
    DegenerateComplement { n: usize, k: usize },

    /// No builder, catalog entry, or bounded search produced a design.
    #[error("no construction available for {0}")]
    ConstructionUnavailable(DesignParams),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    /// Malformed block list.
    #[error("invalid design: {0}")]
    InvalidDesign(String),

    /// Vertex indices of a pair with no connecting path.
    #[error("graph is disconnected: no path between vertices {u} and {v}")]
    Disconnected { u: usize, v: usize },

    #[error("catalog error: {0}")]
    Catalog(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
