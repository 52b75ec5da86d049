use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has non-integral entries")]
    NotIntegral,

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("non-homogeneous relation: {0}")]
    NonHomogeneous(String),
    #[error("grading did not terminate within path length {0} (non-admissible or infinite-dimensional input)")]
    LengthCap(usize),
    #[error("vertex {0} out of range")]
    InvalidVertex(usize),
    #[error("operands live over different algebras")]
    AlgebraMismatch,

    #[error("non-split endomorphism ring: dim End/rad End = {quotient_dim} but no splitting endomorphism found (module dimension vector {dims:?})")]
    NonSplitEndomorphism { dims: Vec<usize>, quotient_dim: usize },
    #[error("vertex {0} is not a sink")]
    NotSink(usize),
    #[error("APR tilting needs a path algebra without relations")]
    NotHereditary,

    #[error("pair is not support tau-tilting")]
    NotSupportTauTilting,
    #[error("slot {0} is not present in the pair")]
    SlotNotPresent(String),
    #[error("slot falls in case (B); no left-approximation exchange sequence")]
    NotCaseA,
    #[error("support vertex for the surjective branch is ambiguous: candidates {0:?}")]
    AmbiguousSupportVertex(Vec<usize>),
    #[error("mutation failed: {0}")]
    Mutation(String),
    #[error("enumeration truncated at the node cap {0}")]
    Truncated(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("word {0:?} is not reduced")]
    NonReducedWord(Vec<usize>),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
