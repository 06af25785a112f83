use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::{Echelon, SparseVec};
use crate::ratpoly::{Rational, UniPoly};

/// Square operator stored by sparse columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOp {
    dim: usize,
    cols: Vec<SparseVec>,
}

impl SparseOp {
    pub fn new(dim: usize, cols: Vec<SparseVec>) -> Self {
        assert_eq!(cols.len(), dim, "one column per coordinate");
        SparseOp { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn apply(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (k, a) in v {
            for (i, b) in &self.cols[*k] {
                *acc.entry(*i).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Columns of `self − λ·I`.
    pub fn shifted_columns(&self, lambda: &Rational) -> Vec<SparseVec> {
        self.cols
            .iter()
            .enumerate()
            .map(|(k, col)| {
                let mut acc: BTreeMap<usize, Rational> = col.iter().cloned().collect();
                *acc.entry(k).or_insert_with(Rational::zero) -= lambda;
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect()
    }

    /// Dense form, for small operators and tests.
    pub fn to_dense(&self) -> crate::linalg::RatMatrix {
        let mut m = crate::linalg::RatMatrix::zeros(self.dim, self.dim);
        for (k, col) in self.cols.iter().enumerate() {
            for (i, a) in col {
                m[(*i, k)] = a.clone();
            }
        }
        m
    }

    /// `p(self)·v` by Horner's rule.
    fn apply_poly(&self, p: &UniPoly, v: &[(usize, Rational)]) -> SparseVec {
        let mut w: SparseVec = Vec::new();
        for c in p.coeffs().iter().rev() {
            let mut acc: BTreeMap<usize, Rational> = self.apply(&w).into_iter().collect();
            if !c.is_zero() {
                for (i, a) in v {
                    *acc.entry(*i).or_insert_with(Rational::zero) += c * a;
                }
            }
            w = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        w
    }

    /// Minimal polynomial of the vector `v`: the monic p of least degree
    /// with p(self)·v = 0.
    fn local_minpoly(&self, v: &[(usize, Rational)]) -> UniPoly {
        // rows [u_i | e_i]; a row whose u-part reduces to zero is a relation
        let off = self.dim;
        let mut ech = Echelon::new();
        let mut u: SparseVec = v.to_vec();
        for i in 0..=self.dim {
            let mut row = u.clone();
            row.push((off + i, Rational::one()));
            let red = ech.reduce(&row);
            if red.first().is_some_and(|(j, _)| *j >= off) {
                let mut coeffs = vec![Rational::zero(); i + 1];
                for (j, a) in red {
                    coeffs[j - off] = a;
                }
                return UniPoly::new(coeffs).monic();
            }
            ech.insert(&row);
            u = self.apply(&u);
        }
        unreachable!("Krylov space dimension is bounded by the ambient dimension")
    }

    /// Minimal polynomial of the operator: lcm of the local minimal
    /// polynomials of the unit vectors.
    pub fn minimal_polynomial(&self) -> UniPoly {
        let mut mu = UniPoly::constant(Rational::one());
        for k in 0..self.dim {
            let e = vec![(k, Rational::one())];
            if self.apply_poly(&mu, &e).is_empty() {
                continue;
            }
            let p = self.local_minpoly(&e);
            let g = mu.gcd(&p).expect("nonzero");
            let (q, _) = p.div_rem(&g).expect("nonzero");
            mu = &mu * &q;
        }
        mu
    }
}

/// Distinct rational eigenvalues, increasing. Uses the minimal
/// polynomial, which has the same roots as the characteristic polynomial
/// but usually far smaller degree on spaces of forms.
pub fn rational_spectrum(op: &SparseOp) -> Vec<Rational> {
    if op.dim == 0 {
        return Vec::new();
    }
    op.minimal_polynomial()
        .rational_roots()
        .into_iter()
        .map(|(r, _)| r)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{char_poly, sparsify, RatMatrix};
    use crate::ratpoly::rat;

    fn op(m: &RatMatrix) -> SparseOp {
        SparseOp::new(
            m.cols(),
            (0..m.cols()).map(|j| sparsify(&m.column(j))).collect(),
        )
    }

    #[test]
    fn minimal_polynomial_examples() {
        let d = RatMatrix::diag(&[rat(2), rat(2), rat(3)]);
        assert_eq!(
            op(&d).minimal_polynomial(),
            UniPoly::new(vec![rat(6), rat(-5), rat(1)])
        );
        let nil = RatMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(
            op(&nil).minimal_polynomial(),
            UniPoly::new(vec![rat(0), rat(0), rat(0), rat(1)])
        );
    }

    #[test]
    fn spectrum_matches_characteristic_roots() {
        let m = RatMatrix::from_i64(&[&[2, 1, 0, 0], &[0, 2, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let roots: Vec<Rational> = char_poly(&m)
            .unwrap()
            .rational_roots()
            .into_iter()
            .map(|r| r.0)
            .collect();
        assert_eq!(rational_spectrum(&op(&m)), roots);
        assert_eq!(roots, vec![rat(2)]);
    }
}
