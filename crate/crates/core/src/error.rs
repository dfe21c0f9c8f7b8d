use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph power must be at least 1, got {0}")]
    InvalidPower(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex set is empty")]
    EmptySet,

    #[error("duplicate anchor {0}")]
    DuplicateAnchor(usize),

    #[error("need at least {needed} vertices, graph has {found}")]
    TooFewVertices { needed: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search bound exceeded: n = {n} > {max}")]
    BoundExceeded { n: usize, max: usize },

    /// A construction step whose success the underlying proof guarantees
    /// did not go through. Always a bug, never a user error.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_invariant(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

macro_rules! invariant {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Invariant(format!($($arg)+)));
        }
    };
}
pub(crate) use invariant;
