use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {{{0}, {1}}} appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("walk is not a walk of the graph: {0}")]
    InvalidWalk(String),
    #[error("walk is empty")]
    EmptyWalk,
    #[error("graph is not nice (it must be connected, have at least 3 vertices)")]
    NotNice,
    #[error("graph is not connected")]
    NotConnected,
    #[error("unusable guiding walk: {0}")]
    BadGuide(String),
    #[error("vertex colouring is not proper: {0}")]
    ImproperColouring(String),
    #[error("edge labelling is not proper: {0}")]
    ImproperLabelling(String),
    #[error("no proper labelling with labels at most {0}")]
    NoLabellingWithinCap(usize),
    #[error("order {got} is too small (minimum {min})")]
    OrderTooSmall { got: usize, min: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("table dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not a complete, complete bipartite, path or cycle graph")]
    UnrecognisedClass,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
