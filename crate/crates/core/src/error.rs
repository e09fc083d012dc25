use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Variants are grouped by the CLI exit code they map to (see [`Error::exit_code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge {{{u}, {v}}} for a graph of order {n}")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("graph order {0} is outside the supported range 1..=64")]
    InvalidOrder(usize),
    #[error("vertex {vertex} is out of range for a graph of order {n}")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not twin-free")]
    NotTwinFree,
    #[error("graph contains a 4-cycle")]
    HasC4,
    #[error("graph is not a tree")]
    NotATree,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("set is not a minimal dominating set")]
    NotMinimalDominating,
    #[error("set is not a distinguishing set")]
    NotDistinguishing,
    #[error("set is not a locating-dominating set")]
    NotLocatingDominating,
    #[error("the twin graph is isomorphic to K2 (lambda - Det <= 1 holds directly)")]
    StarIsK2,
    #[error("matching is not maximum")]
    NotMaximum,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unknown statement `{0}`")]
    UnknownStatement(String),
    #[error("corpus mixes graph orders {first} and {other}")]
    MixedOrders { first: usize, other: usize },

    #[error("graph of order {n} exceeds the solver cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("time budget exhausted")]
    Timeout,

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidEdge { .. }
            | Error::InvalidOrder(_)
            | Error::InvalidVertex { .. }
            | Error::Parse { .. }
            | Error::UnknownStatement(_)
            | Error::Io(_) => 2,
            Error::CapExceeded { .. } | Error::Timeout => 4,
            _ => 3,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
