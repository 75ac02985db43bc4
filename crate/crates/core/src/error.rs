use thiserror::Error;

/// Errors raised by matroid construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} is outside the ground set 1..={n}")]
    ElementOutOfRange { element: u32, n: usize },
    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundSetTooLarge(usize),
    #[error("rank {r} is not in 0..={n}")]
    RankOutOfRange { r: usize, n: usize },
    #[error("block {block} has size {size}, below the rank {r}")]
    BlockTooSmall {
        block: String,
        size: usize,
        r: usize,
    },
    #[error("blocks {first} and {second} share {shared} elements (at most {max} allowed)")]
    BlockOverlap {
        first: String,
        second: String,
        shared: usize,
        max: i64,
    },
    #[error("block {0} spans the whole ground set")]
    BlockSpansGround(String),
    #[error("rank-0 paving family cannot carry blocks")]
    BlocksAtRankZero,
    #[error("circuit list contains the empty set")]
    EmptyCircuit,
    #[error("circuit {inner} is contained in circuit {outer}")]
    NotAnAntichain { inner: String, outer: String },
    #[error("circuit elimination fails for {first}, {second} at element {element}")]
    AxiomViolation {
        first: String,
        second: String,
        element: u32,
    },
    #[error("declared rank {declared} differs from computed rank {computed}")]
    RankMismatch { declared: usize, computed: usize },
    #[error("element {0} is a loop and cannot be contracted")]
    LoopContraction(u32),
    #[error("{0} is not a circuit-hyperplane")]
    NotCircuitHyperplane(String),
    #[error("operation requires a paving-family representation")]
    NotPavingRep,
    #[error("matroid has rank 0, no hyperplanes are defined")]
    RankZero,
    #[error("{0} is not a hyperplane")]
    NotAHyperplane(String),
    #[error("subset has {got} elements, expected {expected}")]
    WrongSubsetSize { got: usize, expected: usize },
    #[error("matroid is not paving")]
    NotPaving,
    #[error("bound needs rank at least 3, got {0}")]
    BoundRankOutOfRange(usize),
    #[error("points have mismatched dimensions ({expected} vs {got})")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point configuration is empty")]
    NoPoints,
    #[error("unknown catalog entry '{0}'")]
    UnknownName(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("exhaustive generation is limited to n <= 8, got {0}")]
    ExhaustiveTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
