//! Linear vector fields ξ_A(f)(v) = ∇f(v)·(A·v) and finite-dimensional
//! Lie algebras spanned by them.

mod algebra;
mod field;

pub use algebra::{
    derived_subalgebra, isotropy_subalgebra, orbit_tangent_dim, Closure, LieAlgebraVF,
};
pub use field::{apply_derivation, vf_bracket, LinVectorField};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("basis element {index} is not square or has the wrong size")]
    BadMatrix { index: usize },
    #[error("basis matrices are linearly dependent (element {index} lies in the span of the previous ones)")]
    LinearlyDependent { index: usize },
    #[error("algebra is not closed under the bracket: [X{i}, X{j}] leaves the span")]
    NotClosed { i: usize, j: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
