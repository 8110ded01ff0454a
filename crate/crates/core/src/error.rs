use thiserror::Error;

/// What was wrong with a line of edge-list input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    Malformed,
    OutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    EdgeCount { declared: usize, found: usize },
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseErrorKind::MissingHeader => write!(f, "missing \"n m\" header"),
            ParseErrorKind::Malformed => write!(f, "malformed line"),
            ParseErrorKind::OutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
            ParseErrorKind::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            ParseErrorKind::DuplicateEdge { u, v } => write!(f, "duplicate edge {u} {v}"),
            ParseErrorKind::EdgeCount { declared, found } => {
                write!(f, "header declares {declared} edges but {found} were given")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("graph is not connected")]
    Disconnected,

    #[error("more than {cap} maximal geodesics; instance too large for enumeration")]
    CapExceeded { cap: usize },

    #[error("instance too large: {what}")]
    TooLarge { what: String },

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not a spread cactus")]
    NotSpreadCactus,

    #[error("graph must contain exactly one cycle, found cyclomatic number {found}")]
    NotUnicyclic { found: usize },

    #[error("graph is acyclic")]
    Acyclic,

    #[error("smoothing vertex {vertex} would create a parallel edge or self-loop")]
    SmoothingCollision { vertex: usize },

    #[error("set family contains an empty set")]
    UnhittableSet,

    #[error("vertex {vertex} is not heavy")]
    NotHeavy { vertex: usize },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
