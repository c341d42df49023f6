use std::path::PathBuf;

use thiserror::Error;

use crate::diagnostics::Report;
use crate::io::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A table has the wrong shape or references an element out of range.
    #[error("malformed table: {0}")]
    Malformed(String),

    /// The operation was called on inputs that violate its contract.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A structure failed verification; the report lists the violated laws.
    #[error("{what} failed verification:\n{report}")]
    Invalid { what: String, report: Report },

    /// A construction that should have produced a valid structure did not.
    /// Raised when a displayed law and the realization oracle disagree.
    #[error("structural inconsistency: {0}")]
    Structural(String),

    /// The up-front candidate estimate exceeds the configured budget.
    #[error("search budget exceeded: about {required} candidates needed, budget is {budget}")]
    Budget { required: u128, budget: u128 },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(what: impl Into<String>, report: Report) -> Self {
        Error::Invalid {
            what: what.into(),
            report,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
