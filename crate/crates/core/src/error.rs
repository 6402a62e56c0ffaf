use core::fmt;

/// Errors raised by graph constructors and queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph would exceed the configured vertex limit.
    TooManyVertices { n: usize, limit: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop(usize),
    /// `Γ(∅)` is deliberately undefined.
    EmptyQuerySet,
    /// The operation needs at least one vertex.
    EmptyGraph,
    /// A pair query was given the same vertex twice.
    SameVertex(usize),
    /// A blow-up class or ratio weighting has weight zero at this vertex.
    EmptyBlowUpClass(usize),
    ZeroTotalWeight,
    NegativeWeight(usize),
    LengthMismatch { expected: usize, found: usize },
    /// A constructor parameter is out of range.
    InvalidParameter(&'static str),
    UnknownGraph,
    /// The graph is not a member of the family it was checked against.
    NotInFamily,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooManyVertices { n, limit } => {
                write!(f, "graph on {n} vertices exceeds the vertex limit {limit}")
            }
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::EmptyQuerySet => f.write_str("empty query set"),
            Error::EmptyGraph => f.write_str("graph has no vertices"),
            Error::SameVertex(v) => write!(f, "pair query with identical vertices {v}"),
            Error::EmptyBlowUpClass(v) => write!(f, "empty blow-up class at vertex {v}"),
            Error::ZeroTotalWeight => f.write_str("total weight is zero"),
            Error::NegativeWeight(v) => write!(f, "negative weight at vertex {v}"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::UnknownGraph => f.write_str("unknown catalog graph"),
            Error::NotInFamily => f.write_str("graph is not in the family"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
