use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix rows are linearly dependent")]
    RankDeficient,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix shape {rows}x{cols} is not valid here: {reason}")]
    Shape { rows: usize, cols: usize, reason: &'static str },
    #[error("lattice dimension must be at least 1")]
    ZeroDimension,
    #[error("lattice is not a sublattice of the given parent")]
    NotASublattice,
    #[error("vector does not lie in the parent lattice")]
    NotInParent,
    #[error("map is not a coincidence isometry of the lattice")]
    NotCoincidence,
    #[error("map is not a colour coincidence of the colouring")]
    NotColourCoincidence,
    #[error("invalid coset representatives: {0}")]
    InvalidReps(String),
    #[error("cyclotomic element must be nonzero")]
    ZeroElement,
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
