use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix data has {found} entries, expected {rows}x{cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        found: usize,
    },

    #[error("zero vector has no primitive part")]
    ZeroVector,

    #[error("normals do not form a unimodular tuple (invariant factors {factors:?}, rank {rank} of {count})")]
    NotUnimodular {
        factors: Vec<BigInt>,
        rank: usize,
        count: usize,
    },

    #[error("normal {index} is not primitive")]
    NonPrimitive { index: usize },

    #[error("normal {index} is zero")]
    ZeroNormal { index: usize },

    #[error("normals {first} and {second} are positive multiples of each other")]
    DuplicateNormal { first: usize, second: usize },

    #[error("point lies outside the cone (pairing with normal {index} is negative)")]
    OutsideCone { index: usize },

    #[error("pairing with normal {index} is negative; point is outside the admissible region")]
    NegativePairing { index: usize },

    #[error("weights must form a basis of the lattice: {0}")]
    InvalidWeights(String),

    #[error("polytope is unbounded")]
    Unbounded,

    #[error("polytope is empty or not full-dimensional")]
    Degenerate,

    #[error("input exceeds enumeration limits: {0}")]
    TooLarge(String),

    #[error("vertex is not a vertex of the polytope")]
    VertexNotFound,

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),

    #[error("invalid inclusion: {0}")]
    InvalidInclusion(String),

    #[error("invalid cohomology representatives: {0}")]
    InvalidRepresentatives(String),

    #[error("missing model: {0}")]
    MissingModel(String),

    #[error("hypothesis check failed: {0}")]
    Validation(String),

    #[error("invalid number literal {0:?}")]
    InvalidNumber(String),

    #[error("invalid document: {0}")]
    Document(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
