use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::PvsError;
use crate::liealg::{LieAlgebraVF, LieError};
use crate::linalg::{densify, kernel_of_columns, RatMatrix, SparseVec, Subspace};
use crate::ratpoly::{Homogeneity, Monomial, MultiPoly, Rational};

/// All A with ξ_A(f) = c·f for some constant c. For homogeneous f this is
/// the linear part of the logarithmic vector fields of f = 0.
///
/// One linear system in the n² entries of A and c; the returned basis is
/// the reduced row-echelon basis of the solutions in ℚ^{n²}.
pub fn linear_logarithmic_fields(f: &MultiPoly) -> Result<LieAlgebraVF, PvsError> {
    match f.homogeneous_degree() {
        Homogeneity::Zero => return Err(PvsError::ZeroPolynomial),
        Homogeneity::Inhomogeneous => return Err(PvsError::NotHomogeneous),
        Homogeneity::Degree(_) => {}
    }
    let n = f.nvars();
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut cols: Vec<SparseVec> = Vec::with_capacity(n * n + 1);
    let intern = |m: Monomial, index: &mut BTreeMap<Monomial, usize>| {
        let k = index.len();
        *index.entry(m).or_insert(k)
    };
    for i in 0..n {
        for j in 0..n {
            // column for A_ij: coefficients of x_j ∂f/∂x_i
            let mut col: BTreeMap<usize, Rational> = BTreeMap::new();
            for (m, c) in f.terms() {
                let e = m.exponents()[i];
                if e == 0 {
                    continue;
                }
                let r = intern(m.shifted(i, j), &mut index);
                *col.entry(r).or_insert_with(Rational::zero) +=
                    c * Rational::from_integer(BigInt::from(e));
            }
            col.retain(|_, v| !v.is_zero());
            cols.push(col.into_iter().collect());
        }
    }
    let mut fc: Vec<(usize, Rational)> = f
        .terms()
        .map(|(m, c)| (intern(m.clone(), &mut index), -c.clone()))
        .collect();
    fc.sort_by_key(|e| e.0);
    cols.push(fc);
    let ker = kernel_of_columns(&cols, index.len());
    let vecs: Vec<Vec<Rational>> = ker
        .iter()
        .map(|v| {
            let mut d = densify(v, n * n + 1);
            d.truncate(n * n);
            d
        })
        .collect();
    // A = 0 forces c = 0, so the projection is injective
    let span = Subspace::from_vectors(n * n, vecs).map_err(LieError::from)?;
    let basis = span
        .basis_vectors()
        .into_iter()
        .map(|v| RatMatrix::new(n, n, v))
        .collect::<Result<Vec<_>, _>>()
        .map_err(LieError::from)?;
    Ok(LieAlgebraVF::new_closed(n, basis)?)
}
