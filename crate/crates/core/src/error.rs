use thiserror::Error;

use crate::constructive::Claim;
use crate::graph::{GraphError, VertexSet};

/// Failures of the exact searches and constructive routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{what}: graph of order {n} exceeds the search bound {bound}")]
    BoundExceeded { what: &'static str, n: usize, bound: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph has no barrier (it has a 2-factor)")]
    NoBarrier,
    /// A step of a constructive argument did not go through; `witness`
    /// points at the offending vertices when there are any.
    #[error("{claim} fails: {detail}")]
    Hypothesis { claim: Claim, detail: String, witness: Option<VertexSet> },
    #[error("internal verification failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_bound(what: &'static str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::BoundExceeded { what, n, bound })
    } else {
        Ok(())
    }
}
