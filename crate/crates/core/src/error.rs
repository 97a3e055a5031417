use thiserror::Error;

/// Which complementary pair failed to form a direct sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pair {
    V,
    W,
    Other,
}

impl std::fmt::Display for Pair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Pair::V => write!(f, "V1 + V2"),
            Pair::W => write!(f, "W1 + W2"),
            Pair::Other => write!(f, "supplied pair"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot parse scalar {literal:?}: {reason}")]
    Parse { literal: String, reason: String },
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("{0} is not a direct sum of the whole space")]
    NotComplementary(Pair),
    #[error("subspace is not contained in the given subspace")]
    NotContained,
    #[error("degenerate bilinear form")]
    DegenerateForm,
    #[error("gram matrix does not have the declared symmetry")]
    FormSymmetry,
    #[error("direct sum violated: {0}")]
    FourSumViolated(String),
    #[error("antisymmetry violated at ({i}, {j})")]
    AntisymmetryViolated { i: usize, j: usize },
    #[error("lattice closure was truncated")]
    TruncatedLattice,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("empty input: {0}")]
    Empty(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
