use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("edge {{{0},{1}}} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("no edge with id {0}")]
    UnknownEdge(usize),
    #[error("edge {0} is a loop and cannot be contracted")]
    ContractLoop(usize),
    #[error("vertex {0} is not in the given set")]
    NotInSet(usize),
    #[error("vertex {0} is not a root of the function")]
    NotARoot(usize),
    #[error("function has {got} values but the graph has {expected} vertices")]
    DomainMismatch { expected: usize, got: usize },
    #[error("not a multiparking function: no vertex can be thrown out of {residual:?}")]
    NotMultiparking { residual: Vec<usize> },
    #[error("forest edge {0}-{1} is not an edge of the graph")]
    NotSubgraph(usize, usize),
    #[error("edge set contains a cycle through vertex {0}")]
    Cycle(usize),
    #[error("vertex {vertex} is a root but {least} is a smaller vertex of its tree")]
    RootNotLeast { vertex: usize, least: usize },
    #[error("vertex {0} has more than one outgoing forest arc")]
    DoubleParent(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not complete")]
    NotComplete,
    #[error("{what}: {size} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("choice function called with no candidates")]
    EmptyCandidates,
    #[error("{0:?} is not a classical parking function")]
    NotParkingFunction(Vec<u64>),
    #[error("invalid choice function '{0}'")]
    BadChoice(String),
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error("{0}")]
    Json(String),
}
