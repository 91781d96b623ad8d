use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("line {line}: self-loop {id} -- {id}")]
    EdgeListSelfLoop { line: usize, id: u64 },

    #[error("line {line}: expected an integer vertex id, found {token:?}")]
    EdgeListToken { line: usize, token: String },

    #[error("line {line}: expected two endpoints per line, found {count} tokens")]
    EdgeListArity { line: usize, count: usize },

    #[error("graph6: empty input")]
    Graph6Empty,

    #[error("graph6: illegal byte 0x{byte:02x} at offset {offset}")]
    Graph6IllegalByte { offset: usize, byte: u8 },

    #[error("graph6: malformed size header at offset {offset}")]
    Graph6Header { offset: usize },

    #[error("graph6: adjacency bits truncated at offset {offset}: need {need} bytes, found {have}")]
    Graph6Truncated { offset: usize, need: usize, have: usize },

    #[error("graph6: trailing data at offset {offset}")]
    Graph6Trailing { offset: usize },

    #[error("graph6: nonzero padding bit at offset {offset}")]
    Graph6Padding { offset: usize },

    #[error("graph on {n} vertices exceeds the {what} cap of {cap}")]
    SizeCap {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("family {family}: {reason}")]
    FamilyParams {
        family: &'static str,
        reason: String,
    },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("labeled enumeration supports 1..=8 vertices, got {n}")]
    EnumerationSize { n: usize },

    #[error("graph is disconnected; radius is undefined")]
    NotConnected,

    #[error("graph has no edges; {what} divides by m")]
    EmptyGraph { what: &'static str },

    #[error("isolated vertex {vertex} leaves {what} undefined")]
    IsolatedVertex {
        vertex: usize,
        what: &'static str,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("eigensolver failed to converge: residual {residual:e}")]
    NonConvergence { residual: f64 },

    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
