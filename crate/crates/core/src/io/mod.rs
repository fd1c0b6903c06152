//! Graph input formats and certificate documents.

mod certificate;
mod edge_list;
mod graph6;

use thiserror::Error;

pub use certificate::{emit_certificate, parse_certificate, CertificateDocument, GraphEcho, Payload, VERSION};
pub use edge_list::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("byte {byte:#04x} at offset {offset} is outside [63, 126]")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("truncated input: needed {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("unexpected bytes after offset {offset}")]
    TrailingBytes { offset: usize },
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("order {0} does not fit in memory")]
    TooLarge(u64),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("refusing to emit an unverifiable {0} certificate")]
    Unverifiable(&'static str),
    #[error("malformed certificate: {0}")]
    Certificate(String),
}
