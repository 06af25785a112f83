use num_traits::{One, Zero};

use super::{kernel, LinalgError, RatMatrix, Subspace};
use crate::ratpoly::{Rational, UniPoly};

fn require_square(m: &RatMatrix) -> Result<(), LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(())
}

/// `det(tI − m)` by Berkowitz's division-free algorithm.
pub fn char_poly(m: &RatMatrix) -> Result<UniPoly, LinalgError> {
    require_square(m)?;
    let n = m.rows();
    // coefficients, highest degree first
    let mut v: Vec<Rational> = vec![Rational::one()];
    for r in 0..n {
        // leading (r+1)×(r+1) block split as [[S, C], [R, a]]
        let a = m[(r, r)].clone();
        let mut q = Vec::with_capacity(r + 2);
        q.push(Rational::one());
        q.push(-a);
        // s_k = S^k · C
        let mut s: Vec<Rational> = (0..r).map(|i| m[(i, r)].clone()).collect();
        for k in 0..r {
            let rc: Rational = (0..r).map(|j| &m[(r, j)] * &s[j]).sum();
            q.push(-rc);
            if k + 1 < r {
                s = (0..r)
                    .map(|i| (0..r).map(|j| &m[(i, j)] * &s[j]).sum())
                    .collect();
            }
        }
        let mut next = vec![Rational::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate().take(i + 1) {
                if !vj.is_zero() && !q[i - j].is_zero() {
                    *slot += &q[i - j] * vj;
                }
            }
        }
        v = next;
    }
    v.reverse();
    Ok(UniPoly::new(v))
}

/// Rational eigenvalues with algebraic multiplicity, increasing.
/// Irrational and complex eigenvalues are not reported.
pub fn rational_eigenvalues(m: &RatMatrix) -> Result<Vec<(Rational, usize)>, LinalgError> {
    Ok(char_poly(m)?.rational_roots())
}

/// `ker(m − λI)`.
pub fn eigenspace(m: &RatMatrix, lambda: &Rational) -> Result<Subspace, LinalgError> {
    require_square(m)?;
    let shifted = m.sub(&RatMatrix::identity(m.rows()).scale(lambda))?;
    Ok(kernel(&shifted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{rat, UniPoly};

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn char_poly_examples() {
        let d = RatMatrix::diag(&[rat(1), rat(2)]);
        assert_eq!(char_poly(&d).unwrap(), up(&[2, -3, 1]));
        let nil = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(char_poly(&nil).unwrap(), up(&[0, 0, 1]));
        assert_eq!(
            char_poly(&RatMatrix::identity(3)).unwrap(),
            up(&[-1, 3, -3, 1])
        );
        // companion matrix of t^3 - 2t + 5
        let c = RatMatrix::from_i64(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(char_poly(&c).unwrap(), up(&[5, -2, 0, 1]));
    }

    #[test]
    fn eigenvalue_examples() {
        let d = RatMatrix::diag(&[rat(1), rat(1), rat(2)]);
        assert_eq!(
            rational_eigenvalues(&d).unwrap(),
            vec![(rat(1), 2), (rat(2), 1)]
        );
        let rot = RatMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(rational_eigenvalues(&rot).unwrap().is_empty());
        let nil = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(rational_eigenvalues(&nil).unwrap(), vec![(rat(0), 2)]);
    }

    #[test]
    fn eigenspace_examples() {
        let d = RatMatrix::diag(&[rat(1), rat(2)]);
        let e1 = Subspace::from_vectors(2, vec![vec![rat(1), rat(0)]]).unwrap();
        assert_eq!(eigenspace(&d, &rat(1)).unwrap(), e1);
        assert_eq!(
            eigenspace(&RatMatrix::identity(3), &rat(1)).unwrap(),
            Subspace::full(3)
        );
        assert_eq!(eigenspace(&d, &rat(5)).unwrap().dim(), 0);
    }
}
