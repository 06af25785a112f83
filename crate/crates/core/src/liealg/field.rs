use num_bigint::BigInt;
use num_traits::Zero;

use super::LieError;
use crate::linalg::RatMatrix;
use crate::ratpoly::{Monomial, MultiPoly, Rational};

/// The derivation ξ_A of the polynomial ring given by a square matrix A:
/// ξ_A(f) = Σᵢ (A·x)ᵢ ∂f/∂xᵢ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinVectorField {
    a: RatMatrix,
}

impl LinVectorField {
    pub fn new(a: RatMatrix) -> Result<Self, LieError> {
        if !a.is_square() {
            return Err(LieError::SizeMismatch {
                expected: a.rows(),
                got: a.cols(),
            });
        }
        Ok(LinVectorField { a })
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.a
    }

    /// Coefficient vector (A·v) of the field at the point v.
    pub fn at(&self, v: &[Rational]) -> Result<Vec<Rational>, LieError> {
        self.a.mul_vec(v).map_err(Into::into)
    }

    /// ξ_A(f).
    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly, LieError> {
        apply_derivation(self, f)
    }
}

impl From<LinVectorField> for RatMatrix {
    fn from(v: LinVectorField) -> RatMatrix {
        v.a
    }
}

/// `C = b·a − a·b`, the matrix with ξ_C = ξ_a∘ξ_b − ξ_b∘ξ_a.
pub fn vf_bracket(a: &LinVectorField, b: &LinVectorField) -> Result<LinVectorField, LieError> {
    if a.n() != b.n() {
        return Err(LieError::SizeMismatch {
            expected: a.n(),
            got: b.n(),
        });
    }
    let ba = b.a.mul(&a.a)?;
    let ab = a.a.mul(&b.a)?;
    Ok(LinVectorField { a: ba.sub(&ab)? })
}

/// Σᵢ (A·x)ᵢ · ∂f/∂xᵢ.
pub fn apply_derivation(a: &LinVectorField, f: &MultiPoly) -> Result<MultiPoly, LieError> {
    let n = a.n();
    if f.nvars() != n {
        return Err(LieError::SizeMismatch {
            expected: n,
            got: f.nvars(),
        });
    }
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    for (m, c) in f.terms() {
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let ce = c * Rational::from_integer(BigInt::from(e));
            for j in 0..n {
                let aij = &a.a[(i, j)];
                if aij.is_zero() {
                    continue;
                }
                // x_j · ∂/∂x_i of the monomial
                terms.push((m.shifted(i, j), &ce * aij));
            }
        }
    }
    Ok(MultiPoly::from_terms(n, terms))
}
