use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("nodes {0} and {1} are adjacent; no node cut separates them")]
    AdjacentPair(usize, usize),
    #[error("source and target are the same node ({0})")]
    SameNode(usize),
    #[error("node {node} out of range for a graph with {node_count} nodes")]
    NodeOutOfRange { node: usize, node_count: usize },
    #[error("graph has {0} nodes; at least 2 are required")]
    TooSmall(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("color classes are not connected (q = {0})")]
    ClassesNotConnected(usize),
    #[error("{what} = {value} exceeds the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("stub counts differ: {n1} * {ns1} != {n2} * {ns2}")]
    StubMismatch {
        n1: usize,
        ns1: usize,
        n2: usize,
        ns2: usize,
    },
    #[error("empty set in hitting-set instance")]
    EmptySet,
    #[error("gave up after {0} attempts to sample a connected graph")]
    GiveUp(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
