use thiserror::Error;

/// Crate-wide error type. Variants carry enough data to point at the
/// offending cone, ray or matrix.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("index {index} out of range [0, {max}]")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("tolerance must be positive")]
    NonPositiveTolerance,

    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,

    #[error("ray {index} = {ray:?} is not primitive")]
    NonPrimitiveRay { index: usize, ray: Vec<String> },

    #[error("ray {index} duplicates ray {first}")]
    DuplicateRay { index: usize, first: usize },

    #[error("cone {cone:?} is not simplicial (rays are linearly dependent)")]
    NonSimplicialCone { cone: Vec<usize> },

    #[error("fan is not complete: facet {facet:?} of cone {cone:?} is shared by {count} max cones")]
    NotComplete {
        cone: Vec<usize>,
        facet: Vec<usize>,
        count: usize,
    },

    #[error("cone {cone:?} references ray {index} but the fan has only {rays} rays")]
    BadRayIndex {
        cone: Vec<usize>,
        index: usize,
        rays: usize,
    },

    #[error("cone {cone:?} has {got} rays, expected {expected} (rank)")]
    BadConeSize {
        cone: Vec<usize>,
        got: usize,
        expected: usize,
    },

    #[error("divisor has {got} coefficients but the fan has {expected} rays")]
    BadDivisorLength { expected: usize, got: usize },

    #[error("divisor polytope is unbounded (input is inconsistent or far from nef)")]
    UnboundedPolytope,

    #[error("divisor polytope is empty")]
    EmptyPolytope,

    #[error("divisor is not big: its polytope has dimension {dim} < rank {rank}")]
    NotBig { dim: usize, rank: usize },

    #[error("divisor is not nef: {reason}")]
    NotNef { reason: String },

    #[error("map matrix does not carry every cone of the source fan into a cone of the target fan")]
    IncompatibleMap,

    #[error("projection is not semi-conjugate: no integer matrix D with P*A = D*P")]
    IncompatibleFibration,

    #[error("fibration projection must have full row rank")]
    DegenerateProjection,

    #[error("no ample divisor with coefficients in [1, {bound}] on this fan")]
    NoAmpleReference { bound: i64 },

    #[error("norm data is degenerate: {reason}")]
    DegenerateNorm { reason: String },

    #[error("mixed volume expects {expected} bodies, got {got}")]
    WrongBodyCount { expected: usize, got: usize },

    #[error("polytope must be bounded for lattice point enumeration")]
    UnboundedInput,

    #[error("linear program is unbounded")]
    UnboundedProgram,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
