use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop {{{0}, {0}}}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("operation requires at least one vertex")]
    EmptyGraph,
    #[error("operation requires at least one edge")]
    NoEdges,
    #[error("invalid arc {from} -> {to} with capacity {capacity} in network of {nodes} nodes")]
    InvalidArc {
        from: usize,
        to: usize,
        capacity: i64,
        nodes: usize,
    },
    #[error("source and sink are the same node ({0})")]
    SourceEqualsSink(usize),
    #[error("instance of size {size} exceeds limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("vertex order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("coloring has {found} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("header declares {expected} {what}, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("clause {clause} has {len} literals, expected 3")]
    NotThreeCnf { clause: usize, len: usize },
    #[error("variable {0} occurs in no clause")]
    UnusedVariable(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("no simple {k}-regular graph on {n} vertices")]
    InfeasibleDegree { n: usize, k: usize },
    #[error("pairing model failed to produce a simple graph after {0} attempts")]
    RetryExhausted(usize),
    #[error("bound check failed on trial {trial}: {detail}")]
    BoundViolation { trial: usize, detail: String },
}

impl Error {
    /// Errors caused by malformed input text, as opposed to inputs that
    /// parse but violate an operation's preconditions.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::CountMismatch { .. }
                | Error::SelfLoop(_)
                | Error::DuplicateEdge(..)
                | Error::VertexOutOfRange { .. }
                | Error::NotThreeCnf { .. }
        )
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
