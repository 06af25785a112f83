use num_traits::Zero;

use super::matrix::rref_with_pivots;
use super::{kernel, LinalgError, RatMatrix};
use crate::ratpoly::Rational;

/// Subspace of ℚ^ambient stored by its reduced row-echelon basis, so two
/// equal subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: RatMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors(ambient: usize, vecs: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        for v in &vecs {
            if v.len() != ambient {
                return Err(LinalgError::AmbientMismatch {
                    left: ambient,
                    right: v.len(),
                });
            }
        }
        let m = RatMatrix::from_rows(vecs, ambient)?;
        Ok(Self::row_space(&m))
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &RatMatrix) -> Self {
        let (r, pivots) = rref_with_pivots(m);
        let rows = r.row_vectors().into_iter().take(pivots.len()).collect();
        Subspace {
            ambient: m.cols(),
            basis: RatMatrix::from_rows(rows, m.cols()).expect("rectangular"),
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RatMatrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RatMatrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, n: usize) -> Result<(), LinalgError> {
        if n != self.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: n,
            });
        }
        Ok(())
    }

    /// Normal form of `v` modulo this subspace: the unique representative
    /// vanishing on every pivot coordinate.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        self.check(v.len())?;
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (o, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *o -= &c * b;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Coefficients of `v` on the canonical basis, or `None` if `v` is
    /// outside the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other.ambient)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::from_vectors(self.ambient, rows)
    }

    /// Orthogonal complement under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other.ambient)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other.ambient)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    fn e(n: usize, i: usize) -> Vec<Rational> {
        (0..n).map(|j| rat((i == j) as i64)).collect()
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::from_vectors(3, vec![e(3, 0)]).unwrap();
        let b = Subspace::from_vectors(3, vec![e(3, 1)]).unwrap();
        assert_eq!(
            a.sum(&b).unwrap(),
            Subspace::from_vectors(3, vec![e(3, 0), e(3, 1)]).unwrap()
        );
        let a = Subspace::from_vectors(3, vec![e(3, 0), e(3, 1)]).unwrap();
        let b = Subspace::from_vectors(3, vec![e(3, 1), e(3, 2)]).unwrap();
        assert_eq!(
            a.intersect(&b).unwrap(),
            Subspace::from_vectors(3, vec![e(3, 1)]).unwrap()
        );
        assert!(a.sum(&Subspace::zero(4)).is_err());
    }

    #[test]
    fn canonical_form() {
        let a = Subspace::from_vectors(
            3,
            vec![vec![rat(1), rat(1), rat(0)], vec![rat(1), rat(-1), rat(0)]],
        )
        .unwrap();
        let b = Subspace::from_vectors(
            3,
            vec![vec![rat(2), rat(0), rat(0)], vec![rat(0), rat(3), rat(0)]],
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn coordinates_round_trip() {
        let s = Subspace::from_vectors(
            3,
            vec![vec![rat(1), rat(2), rat(3)], vec![rat(0), rat(1), rat(1)]],
        )
        .unwrap();
        let v = vec![rat(2), rat(5), rat(7)];
        let c = s.coordinates(&v).unwrap().unwrap();
        let back: Vec<Rational> = (0..3)
            .map(|j| {
                c.iter()
                    .zip(s.basis_vectors())
                    .map(|(ci, b)| ci * &b[j])
                    .sum()
            })
            .collect();
        assert_eq!(back, v);
        assert_eq!(s.coordinates(&e(3, 2)).unwrap(), None);
    }
}
