use std::fmt;

use num_traits::{One, Zero};

use super::{LinalgError, Subspace};
use crate::ratpoly::{rat, Rational};

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Matrix unit E_ij (1 at row i, column j).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Rational::one();
        m
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Builds from rows; all rows must share one length. An empty list
    /// gives a 0×`cols_if_empty` matrix.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols_if_empty: usize) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(cols_if_empty, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::ShapeMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Convenience constructor from small integers. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(v, 0).expect("rectangular input")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries in row-major order.
    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::AmbientMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::AmbientMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    fn zip_with(
        &self,
        other: &RatMatrix,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<RatMatrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch {
                expected: self.data.len(),
                got: other.data.len(),
            });
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `Σ cᵢ·Mᵢ` over matrices of equal shape.
    pub fn linear_combination(
        coeffs: &[Rational],
        mats: &[RatMatrix],
    ) -> Result<RatMatrix, LinalgError> {
        let first = mats.first().ok_or(LinalgError::ShapeMismatch {
            expected: 1,
            got: 0,
        })?;
        let mut acc = RatMatrix::zeros(first.rows, first.cols);
        for (c, m) in coeffs.iter().zip(mats) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c))?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    /// True iff every entry above the diagonal is zero.
    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| ((i + 1)..self.cols).all(|j| self[(i, j)].is_zero()))
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, a) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Reduced row-echelon form by Gauss-Jordan elimination. Returns the
/// reduced matrix, its rank, and the pivot columns.
pub fn rref_with_pivots(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            let v = &a[(r, j)] * &inv;
            a[(r, j)] = v;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let v = &f * &a[(r, j)];
                a[(i, j)] -= v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rref(m: &RatMatrix) -> (RatMatrix, usize) {
    let (a, p) = rref_with_pivots(m);
    (a, p.len())
}

/// Right null space `{v : m·v = 0}` as a canonical subspace of ℚ^cols.
pub fn kernel(m: &RatMatrix) -> Subspace {
    let (a, pivots) = rref_with_pivots(m);
    let cols = m.cols;
    let mut is_pivot = vec![None; cols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| is_pivot[c].is_none()) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -a[(r, free)].clone();
        }
        basis.push(v);
    }
    Subspace::from_vectors(cols, basis).expect("consistent lengths")
}

/// Solves `m·x = b`. Returns a particular solution (free variables set to
/// zero) or `None` when inconsistent.
pub fn solve(m: &RatMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if b.len() != m.rows {
        return Err(LinalgError::AmbientMismatch {
            left: m.rows,
            right: b.len(),
        });
    }
    let mut aug = RatMatrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols)] = b[i].clone();
    }
    let (a, pivots) = rref_with_pivots(&aug);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[(r, m.cols)].clone();
    }
    Ok(Some(x))
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det_rat(m: &RatMatrix) -> Result<Rational, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut a = m.clone();
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match ((k + 1)..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => {
                    for j in 0..n {
                        a.data.swap(p * n + j, k * n + j);
                    }
                    sign = -sign;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * a[(n - 1, n - 1)].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let id = RatMatrix::identity(3);
        assert_eq!(rref(&id), (id.clone(), 3));
        let z = RatMatrix::zeros(2, 3);
        assert_eq!(rref(&z), (z.clone(), 0));
        let m = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(rref(&m), (RatMatrix::from_i64(&[&[1, 2], &[0, 0]]), 1));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&RatMatrix::identity(3)).dim(), 0);
        assert_eq!(kernel(&RatMatrix::zeros(3, 3)), Subspace::full(3));
        let k = kernel(&RatMatrix::from_i64(&[&[1, 0, 0]]));
        let want = Subspace::from_vectors(
            3,
            vec![vec![rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]],
        )
        .unwrap();
        assert_eq!(k, want);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = RatMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_rat(&RatMatrix::identity(4)).unwrap(), rat(1));
        assert_eq!(
            det_rat(&RatMatrix::from_i64(&[&[1, 2], &[2, 4]])).unwrap(),
            rat(0)
        );
        assert_eq!(
            det_rat(&RatMatrix::from_i64(&[&[1, 2], &[3, 4]])).unwrap(),
            rat(-2)
        );
        // needs a row swap
        assert_eq!(
            det_rat(&RatMatrix::from_i64(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])).unwrap(),
            rat(-2)
        );
        assert!(det_rat(&RatMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn solve_particular() {
        let m = RatMatrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]]);
        let x = solve(&m, &[rat(2), rat(3)]).unwrap().unwrap();
        assert_eq!(x, vec![rat(2), rat(0), rat(3)]);
        let m = RatMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&m, &[rat(1), rat(2)]).unwrap(), None);
    }
}
