use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown element {0}")]
    UnknownElement(usize),

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("malformed model: {0}")]
    MalformedModel(String),

    #[error("model declares n={declared} but lists {listed} arcs")]
    ArcCountMismatch { declared: usize, listed: usize },

    #[error("arc {arc}: position {position} outside [0, {circle})")]
    PositionOutOfRange {
        arc: usize,
        position: i64,
        circle: usize,
    },

    #[error("arc {arc} is degenerate (start = end = {position})")]
    DegenerateArc { arc: usize, position: usize },

    #[error("duplicate endpoint {0}")]
    DuplicateEndpoint(usize),

    #[error("not a real circular-arc model")]
    NotRealCircularArc,

    #[error("vertices {0} and {1} are not connected")]
    Unreachable(usize, usize),

    #[error("vertices {0} and {1} are counter vertices; reach comparison is undefined")]
    CounterPair(usize, usize),

    #[error("vertex {vertex} is not a member of clique {clique}")]
    NotInClique { vertex: usize, clique: usize },

    #[error("malformed scheme: {0}")]
    MalformedScheme(String),

    #[error("route to {dst} stuck at {at}: no interval contains the destination")]
    RouteHole { at: usize, dst: usize },

    #[error("route to {dst} ambiguous at {at}: {count} intervals contain the destination")]
    RouteAmbiguous { at: usize, dst: usize, count: usize },

    #[error("route from {src} to {dst} exceeded {hops} hops")]
    RouteLoop { src: usize, dst: usize, hops: usize },

    #[error("graph has {n} vertices, oracle limit is {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("construction invariant violated at vertex {vertex}: {detail}")]
    Internal { vertex: usize, detail: String },
}

impl Error {
    pub(crate) fn internal(vertex: usize, detail: impl Into<String>) -> Self {
        Error::Internal {
            vertex,
            detail: detail.into(),
        }
    }
}
