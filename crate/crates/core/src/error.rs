use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} colors, got {got}")]
    ColorCount { expected: usize, got: usize },
    #[error("color {color} out of range 0..{bound}")]
    ColorOutOfRange { color: u32, bound: usize },

    #[error("chord word has odd length {0}")]
    OddWord(usize),
    #[error("chord label {label} occurs {count} times, expected exactly twice")]
    LabelCount { label: u64, count: usize },
    #[error("empty word")]
    EmptyWord,
    #[error("a chord diagram needs at least one chord")]
    NoChords,

    #[error("graph is disconnected")]
    Disconnected,
    #[error("not a split of the node: {0}")]
    InvalidSplit(String),
    #[error("{0} is not a tree edge")]
    NotTreeEdge(usize),
    #[error("node with {0} vertices cannot be classified")]
    NodeTooSmall(usize),
    #[error("node graph has a split, so it is neither prime nor degenerate")]
    Decomposable,

    #[error("prime node {node} has no circle representation")]
    MissingRepresentation { node: usize },
    #[error("representation does not realize the node graph ({0})")]
    RepresentationMismatch(String),
    #[error("prime node with {size} vertices: no representation given and it is too large for exhaustive recognition (limit {limit})")]
    RecognitionTooLarge { size: usize, limit: usize },
    #[error("not a circle graph: prime node with {size} vertices has no circle representation")]
    NotCircle { size: usize },

    #[error("malformed encoding: {0}")]
    MalformedEncoding(String),

    #[error("{what} limited to {limit} vertices, got {got}")]
    OracleLimit { what: &'static str, limit: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
