use thiserror::Error;

use crate::chain_core::{AlternationWitness, IndexValue};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse grouping used by front ends to pick exit codes and diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed text, numbers or documents.
    Format,
    /// A precondition on the inputs of an operation does not hold.
    Input,
    /// A search came back empty.
    NotFound,
    /// The data contradicts a structural law (e.g. a strict limit triple).
    Inconsistency,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground size must be at least 1")]
    EmptyGround,

    #[error("ground element {n} is outside the ground set of size {size}")]
    ElementOutOfRange { n: usize, size: usize },

    #[error("ground size mismatch: expected {expected}, found {found}")]
    GroundMismatch { expected: usize, found: usize },

    #[error("duplicate index {0}")]
    DuplicateIndex(IndexValue),

    #[error("index {0} is not present in the family")]
    MissingIndex(IndexValue),

    #[error("index {x} must be strictly below {y}")]
    IndexOrder { x: IndexValue, y: IndexValue },

    #[error("invalid rational {0:?}")]
    ParseRational(String),

    #[error("invalid bit word {0:?}")]
    ParseBits(String),

    #[error("shared index {0} carries different sets in the two conditions")]
    ConflictingSharedIndex(IndexValue),

    #[error("insertion order is not a permutation of the family indices: {0}")]
    NotAPermutation(String),

    #[error("target count must be at least 2, got {0}")]
    TargetTooSmall(usize),

    #[error("index set #{0} is not strictly increasing")]
    UnsortedIndexSet(usize),

    #[error("no sunflower with {target} members exists among the inputs")]
    SunflowerNotFound { target: usize },

    #[error(
        "gap precondition violated: |U[{lower}] \\ V[{upper}]| = {size} exceeds budget {budget}"
    )]
    GapPrecondition {
        lower: usize,
        upper: usize,
        size: usize,
        budget: usize,
    },

    #[error("both towers are empty; the ground set is undetermined")]
    EmptyTowers,

    #[error("index {point} coincides with the position of ground element {n}")]
    AmbiguousPosition { point: IndexValue, n: usize },

    #[error("bit word of length {len} is shorter than depth {depth}")]
    BitWordTooShort { len: usize, depth: u32 },

    #[error("index {point} is a dyadic rational of depth at most {depth}")]
    DyadicIndex { point: IndexValue, depth: u32 },

    #[error("depth must be between 1 and {max}, got {depth}")]
    DepthOutOfRange { depth: u32, max: u32 },

    #[error("sign matrix has {rows} rows for {indices} indices")]
    MatrixRows { rows: usize, indices: usize },

    #[error("sign matrix row {row} has {len} entries, expected {expected}")]
    MatrixRowLength {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("family is not barely alternating: {0}")]
    NotBarelyAlternating(Box<AlternationWitness>),

    #[error("invalid line model: {0}")]
    InvalidModel(String),

    #[error("family indices do not match the dense set of the line model")]
    ModelMismatch,

    #[error("function is undefined at carrier point {0}")]
    FunctionUndefined(IndexValue),

    #[error("function is defined at {0}, which is not a carrier point")]
    FunctionOutsideCarrier(IndexValue),

    #[error("triple ({x0}, {x1}, {x2}) is not ordered")]
    UnorderedTriple {
        x0: IndexValue,
        x1: IndexValue,
        x2: IndexValue,
    },

    #[error("strict triple ({x0}, {x1}, {x2}) cannot be the limit of a convergent schedule")]
    InconsistentTriple {
        x0: IndexValue,
        x1: IndexValue,
        x2: IndexValue,
    },

    #[error("schedule is empty")]
    EmptySchedule,

    #[error("schedule is not monotone: {0}")]
    NonMonotoneSchedule(String),

    #[error("invalid generator config: {0}")]
    Config(String),

    #[error("malformed document: {0}")]
    Format(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::ParseRational(_) | Error::ParseBits(_) | Error::Format(_) | Error::Config(_) => {
                ErrorClass::Format
            }
            Error::SunflowerNotFound { .. } => ErrorClass::NotFound,
            Error::InconsistentTriple { .. } => ErrorClass::Inconsistency,
            _ => ErrorClass::Input,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Format(err.to_string())
    }
}
