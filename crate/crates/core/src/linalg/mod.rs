//! Exact linear algebra over ℚ.

mod echelon;
mod eigen;
mod matrix;
mod subspace;

pub use echelon::{
    densify, kernel_of_columns, kernel_of_columns_with_free, sparse_kernel,
    sparse_kernel_with_free, sparsify, transpose_sparse, Echelon, SparseVec,
};
pub use eigen::{char_poly, eigenspace, rational_eigenvalues};
pub use matrix::{det_rat, kernel, rref, rref_with_pivots, solve, RatMatrix};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("shape mismatch: expected {expected} entries, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
}
