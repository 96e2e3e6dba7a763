use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("facet {index} is empty")]
    EmptyFacet { index: usize },

    #[error("facets {first} and {second} are equal")]
    DuplicateFacet { first: usize, second: usize },

    #[error("facet {smaller} is contained in facet {larger}; a complex is given by its maximal faces (use --maximalize to reduce)")]
    ComparableFacets { smaller: usize, larger: usize },

    #[error("{n} facets exceed the limit of 64")]
    TooManyFacets { n: usize },

    #[error("input contains no facets")]
    NoFacets,

    #[error("order relation contains a cycle through `{element}`")]
    CycleDetected { element: String },

    #[error("unknown element `{token}` in order relation")]
    UnknownElement { token: String },

    #[error("missing `elements` line in poset input")]
    MissingElements,

    #[error("malformed line in poset input: `{line}`")]
    MalformedPosetLine { line: String },

    #[error("ground set size must be at least 3, got {m}")]
    GroundSetTooSmall { m: usize },

    #[error("partition blocks overlap on `{token}`")]
    OverlappingBlocks { token: String },

    #[error("partition blocks must be nonempty")]
    EmptyBlock,

    #[error("graph is not connected")]
    DisconnectedGraph,

    #[error("{m} edges exceed the limit of 16")]
    TooManyEdges { m: usize },

    #[error("graph edge is malformed: `{line}`")]
    MalformedEdge { line: String },

    #[error("row lengths must be weakly decreasing and positive")]
    InvalidBoardShape,

    #[error("board has {squares} squares, more than the limit of 64")]
    BoardTooLarge { squares: usize },

    #[error("invalid facet JSON: {0}")]
    FacetJson(String),

    #[error("oracle mismatch: {detail}")]
    OracleMismatch { detail: String },

    #[error("{0}")]
    OracleDomain(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
