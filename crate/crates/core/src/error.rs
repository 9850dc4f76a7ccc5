use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands live in different evaluation contexts: {0} vs {1}")]
    ContextMismatch(String, String),

    #[error("exponent vector has length {got}, context expects {expected}")]
    BadExponentLength { expected: usize, got: usize },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("inner partition {inner} does not fit inside {outer}")]
    InvalidSkewShape { outer: String, inner: String },

    #[error("tableau entry {entry} exceeds the {m} available variables")]
    EntryOutOfRange { entry: i64, m: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("word has repeated entry {0}")]
    RepeatedEntry(i64),

    #[error("{0:?} is not a permutation of 1..n")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("letter {0} is not covered by the total order")]
    LetterOutOfRange(i64),

    #[error("{set:?} is not a subset of [{n}-1]")]
    InvalidDescentSet { n: usize, set: Vec<usize> },

    #[error("composition parts must be positive: {0:?}")]
    InvalidComposition(Vec<usize>),

    #[error("input is not quasisymmetric")]
    NotQuasisymmetric,

    #[error("input is not homogeneous of degree {0}")]
    NotHomogeneous(usize),

    #[error("degree-{n} expansion needs at least {n} variables, context has {m}")]
    Unfaithful { n: usize, m: usize },

    #[error("degree cap {cap} is below the required degree {needed}")]
    DegreeCapTooSmall { cap: usize, needed: usize },

    #[error("p_0 has no agreed convention and is not provided")]
    PowerSumZero,

    #[error("total order covers {order} letters per sign, context has {ctx}")]
    OrderSize { order: usize, ctx: usize },

    #[error("evaluation points must be pairwise distinct")]
    RepeatedPoint,

    #[error("wrong number of evaluation points: expected {expected}, got {got}")]
    PointCount { expected: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
