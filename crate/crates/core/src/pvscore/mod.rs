//! Prehomogeneity, the Saito matrix, linear free divisors, and recovery of
//! the linear logarithmic vector fields of a hypersurface.

mod derlog;
mod generic;
mod reduced;
mod saito;

pub use derlog::linear_logarithmic_fields;
pub use generic::find_generic_point;
pub use reduced::{is_linear_free_divisor, is_reduced, LfdVerdict, ReducedVerdict};
pub use saito::{
    coefficient_matrix, exceptional_ideal_generators, poly_det, saito_determinant, saito_matrix,
    SaitoMatrix,
};

use thiserror::Error;

use crate::liealg::{orbit_tangent_dim, LieAlgebraVF, LieError};
use crate::ratpoly::{MultiPoly, PolyError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PvsError {
    #[error("no point with an open orbit found after {tries} tries")]
    NoGenericPoint { tries: usize },
    #[error("point is not generic: orbit dimension {orbit_dim} < {n}")]
    NotGeneric { orbit_dim: usize, n: usize },
    #[error("need dim g = n = {n}, got dim g = {dim}")]
    NotSquare { dim: usize, n: usize },
    #[error("need dim g >= n = {n}, got dim g = {dim}")]
    TooFewFields { dim: usize, n: usize },
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<crate::linalg::LinalgError> for PvsError {
    fn from(e: crate::linalg::LinalgError) -> Self {
        PvsError::Lie(e.into())
    }
}

/// A Lie algebra of linear vector fields together with a point whose
/// orbit is open.
#[derive(Debug, Clone)]
pub struct PVSpace {
    g: LieAlgebraVF,
    v0: Vec<Rational>,
    minor_columns: Vec<usize>,
    reference_minor: MultiPoly,
}

impl PVSpace {
    /// Certifies `v0` (orbit dimension must equal n).
    pub fn new(g: LieAlgebraVF, v0: Vec<Rational>) -> Result<Self, PvsError> {
        let n = g.n();
        let orbit_dim = orbit_tangent_dim(&g, &v0)?;
        if orbit_dim != n {
            return Err(PvsError::NotGeneric { orbit_dim, n });
        }
        let (_, pivots) = crate::linalg::rref_with_pivots(&g.tangent_matrix(&v0)?);
        debug_assert_eq!(pivots.len(), n);
        let cm = coefficient_matrix(&g);
        let sub: Vec<Vec<MultiPoly>> = cm
            .iter()
            .map(|row| pivots.iter().map(|&j| row[j].clone()).collect())
            .collect();
        let reference_minor = poly_det(&sub);
        Ok(PVSpace {
            g,
            v0,
            minor_columns: pivots,
            reference_minor,
        })
    }

    /// Samples a generic point and certifies it.
    pub fn discover(g: LieAlgebraVF, seed: u64, max_tries: usize) -> Result<Self, PvsError> {
        let v0 = find_generic_point(&g, seed, max_tries)?;
        Self::new(g, v0)
    }

    pub fn algebra(&self) -> &LieAlgebraVF {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn generic_point(&self) -> &[Rational] {
        &self.v0
    }

    /// The Saito determinant when dim 𝔤 = n.
    pub fn saito_determinant(&self) -> Option<&MultiPoly> {
        (self.g.dim() == self.g.n()).then_some(&self.reference_minor)
    }

    /// A maximal minor of the coefficient matrix that is nonzero at the
    /// generic point, with the basis indices of its columns. Every basic
    /// relative invariant divides it.
    pub fn reference_minor(&self) -> (&MultiPoly, &[usize]) {
        (&self.reference_minor, &self.minor_columns)
    }
}
