use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Overflow: integer arithmetic exceeded the scalar range")]
    Overflow,
    #[error("ZeroVector: edge vector must be nonzero")]
    ZeroVector,
    #[error("ClosureViolation: edge vectors sum to ({0}, {1}) instead of (0, 0)")]
    ClosureViolation(String, String),
    #[error("DuplicateDirection: primitive direction ({0}, {1}) occurs more than once")]
    DuplicateDirection(String, String),
    #[error(
        "PartitionSumMismatch: edge {edge} has length {length} but its partition sums to {sum}"
    )]
    PartitionSumMismatch {
        edge: usize,
        length: String,
        sum: String,
    },
    #[error("InvalidPartition: partition parts must be non-negative")]
    InvalidPartition,
    #[error("TooFewEdges: a ranked log datum needs at least two edges, got {0}")]
    TooFewEdges(usize),
    #[error("NotRankOne: operation requires exactly two edges")]
    NotRankOne,
    #[error("NotRankTwo: operation requires at least three edges")]
    NotRankTwo,
    #[error("NotPrimitive: direction vector is not primitive")]
    NotPrimitive,
    #[error("NotUnimodular: matrix determinant is {0}, expected 1")]
    NotUnimodular(String),
    #[error("BadMutationIndex: edge {edge}, part {part} does not address the datum")]
    BadMutationIndex { edge: usize, part: usize },
    #[error("IllegalMutation: height h = {height} is smaller than the part {part}")]
    IllegalMutation { height: String, part: String },
    #[error("ReplayFailed: step {step}: {source}")]
    ReplayFailed {
        step: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("SubordinationRequired: wall assignment is not subordinate")]
    SubordinationRequired,
    #[error("NoGenericAssignment: no generic factors constructed for edge {edge} with partition {partition}")]
    NoGenericAssignment { edge: usize, partition: String },
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// Short stable name of the variant, used in CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Overflow => "Overflow",
            Error::ZeroVector => "ZeroVector",
            Error::ClosureViolation(..) => "ClosureViolation",
            Error::DuplicateDirection(..) => "DuplicateDirection",
            Error::PartitionSumMismatch { .. } => "PartitionSumMismatch",
            Error::InvalidPartition => "InvalidPartition",
            Error::TooFewEdges(_) => "TooFewEdges",
            Error::NotRankOne => "NotRankOne",
            Error::NotRankTwo => "NotRankTwo",
            Error::NotPrimitive => "NotPrimitive",
            Error::NotUnimodular(_) => "NotUnimodular",
            Error::BadMutationIndex { .. } => "BadMutationIndex",
            Error::IllegalMutation { .. } => "IllegalMutation",
            Error::ReplayFailed { .. } => "ReplayFailed",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::SubordinationRequired => "SubordinationRequired",
            Error::NoGenericAssignment { .. } => "NoGenericAssignment",
            Error::Parse(_) => "Parse",
        }
    }
}
