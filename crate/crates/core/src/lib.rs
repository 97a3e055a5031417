//! Exact linear algebra for pairs of supplementary subspaces.

#![allow(clippy::result_large_err, clippy::needless_range_loop)]

pub mod curvature;
pub mod error;
pub mod field;
pub mod form;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod sample;
pub mod representation;
pub mod subspace;
pub mod twosum;

pub use error::{Error, Pair, Result};
pub use field::{FieldSpec, Scalar};
pub use form::{BilinearForm, FormKind, Isotropy};
pub use lattice::{SubspaceLattice, FiveSumInvariant};
pub use matrix::Matrix;
pub use poly::Poly;
pub use representation::{MatrixLieAlgebra, OracleBounds, OracleVerdict};
pub use report::{Clause, Status, TheoremReport, Witness};
pub use subspace::Subspace;
pub use twosum::{CanonicalSplit, ChainReport, Projector, Sigma, TwoSumDecomposition};
