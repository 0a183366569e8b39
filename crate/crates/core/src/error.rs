use thiserror::Error;

/// Errors raised by graph construction and the spectral routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph must have at least {0} vertices")]
    TooSmall(usize),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("k = {k} is outside 1..={max}")]
    IndexOutOfRange { k: usize, max: usize },
    #[error("diameter 1 graph: {0}")]
    DiameterOne(String),
    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("graph has {n} vertices, above the cap of {cap} for {what}")]
    SizeCap {
        n: usize,
        cap: usize,
        what: &'static str,
    },
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not AD-regular")]
    NotAdRegular,
    #[error("graph is not distance-regular")]
    NotDistanceRegular,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
