//! Deciding, constructing and certifying 2-factors of simple graphs under
//! independent-set degree conditions.

pub mod barrier;
mod bits;
pub mod connectivity;
pub mod constructive;
pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;
pub mod independence;
pub mod io;
pub mod matching;
pub mod oracles;
pub mod two_factor;

pub use error::{Error, Result};
pub use graph::{Graph, GraphError, VertexMap, VertexSet};
