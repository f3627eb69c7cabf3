use thiserror::Error;

use crate::polytope::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid weight system {weights:?}: {reason}")]
    InvalidWeights { weights: Vec<i64>, reason: String },

    #[error("vectors are linearly dependent; bases are not comparable")]
    DependentVectors,

    #[error("vector {vector:?} is not orthogonal to the weight vector {weights:?}")]
    NotInKernel { vector: [i64; 4], weights: [i64; 4] },

    #[error("the given vectors span a sublattice of index {index} in the kernel lattice")]
    NotAKernelBasis { index: i64 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("coordinate {value} exceeds the supported magnitude {limit}")]
    CoordinateTooLarge { value: i64, limit: i64 },

    #[error("points span an affine subspace of dimension {dimension}, expected 3")]
    Degenerate { dimension: usize },

    #[error("the origin is not in the interior of the polytope")]
    OriginNotInterior,

    #[error("vertex set {0:?} is not a proper face of the polytope")]
    NotAFace(Vec<Point>),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("duplicate monomial {0}")]
    DuplicateMonomial(String),

    #[error("monomial {monomial} has weighted degree {degree}, expected {expected}")]
    WrongDegree {
        monomial: String,
        degree: i64,
        expected: i64,
    },

    #[error("monomial {0} uses a variable outside the 4-variable setting")]
    WrongArity(String),

    #[error("vector {0:?} is not representable in the given basis")]
    NotRepresentable([i64; 4]),

    #[error("invalid sandwich: {0}")]
    InvalidSandwich(String),

    #[error("unknown case {0:?}; expected Q16 or S16")]
    UnknownCase(String),

    #[error("fixture mismatch for {what}: expected {expected}, computed {computed}")]
    FixtureMismatch {
        what: String,
        expected: String,
        computed: String,
    },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("malformed polytope file: {0}")]
    Format(String),
}
