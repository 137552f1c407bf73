//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A group of this order cannot be constructed (0, or above the 1024 cap).
    #[error("invalid group order {0}")]
    InvalidOrder(usize),

    /// A multiplication table failed one of the group axioms.
    #[error("group axiom violated: {0}")]
    GroupAxiom(String),

    /// A matrix is not orthogonal (or otherwise malformed) within tolerance.
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// Generator closure did not terminate within the requested cap.
    #[error("matrix closure exceeded {cap} elements; group is not finite within cap")]
    NotFiniteWithinCap { cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The representation admits no full-dimensional orbit (e.g. rotations with r < 3).
    #[error("not full-dimensional: {0}")]
    NotFullDimensional(String),

    /// An operation requires the averaging projector to vanish.
    #[error("representation contains a trivial subrepresentation")]
    TrivialSubrepresentation,

    #[error("degenerate representation: {0}")]
    DegenerateRepresentation(String),

    #[error("{context} requires {expected} points, got {got}")]
    PointCount {
        context: String,
        expected: usize,
        got: usize,
    },

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("instance too large: {0}")]
    SizeGuard(String),

    /// The colorful selection does not correspond to a zero of the test map.
    #[error("selection is not a zero: {0}")]
    NotAZero(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("render unsupported: {0}")]
    RenderUnsupported(String),

    #[error("parse error in {path} at line {line}, column {column} (byte {offset}): {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        offset: usize,
        message: String,
    },

    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
