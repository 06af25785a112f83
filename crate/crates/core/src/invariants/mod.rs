//! Relative invariants (joint eigenvectors of the derivation operators)
//! and additive relative invariants (solutions of the inhomogeneous
//! equation ξ_X h = λ′(X)·h + dΦ(X)·g).

mod additive;
mod blocks;
pub(crate) mod semi;
mod spectrum;
mod structure;

pub use additive::{
    additive_invariants, check_additive, dim_h, partial_fraction_split, verify_additive,
    AdditiveInvariant, AdditiveOptions, AdditiveResult, Split,
};
pub use blocks::{derivation_matrix, DegreeSpace};
pub use semi::{
    basic_relative_invariants, semiinvariants_of_degree, Anomaly, BasicInvariants, SemiInvariant,
    SemiSpace,
};
pub use spectrum::{rational_spectrum, SparseOp};
pub use structure::AlgebraData;

use serde::Serialize;
use thiserror::Error;

use crate::liealg::LieError;
use crate::linalg::LinalgError;
use crate::pvscore::PvsError;
use crate::ratpoly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Pvs(#[from] PvsError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("found invariants do not reconstruct the determinant: {0}")]
    Reconstruction(String),
    #[error("denominator split is not a partition of the denominator support: {0}")]
    BadSplit(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl From<LinalgError> for InvariantError {
    fn from(e: LinalgError) -> Self {
        InvariantError::Lie(e.into())
    }
}

/// Counts attached to a computed invariant theory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub dim_h: usize,
    pub dim_a1: usize,
    pub r: usize,
    pub k: usize,
    pub l: usize,
}

impl InvariantReport {
    /// `k = r`, `ℓ = dim 𝒜₁`, and the identity `r = dim H − dim 𝒜₁` is
    /// checked by the verifier, not assumed here.
    pub fn new(dim_h: usize, dim_a1: usize, r: usize) -> Self {
        InvariantReport {
            dim_h,
            dim_a1,
            r,
            k: r,
            l: dim_a1,
        }
    }
}
