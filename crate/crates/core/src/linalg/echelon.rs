//! Sparse incremental row echelon form, used for the large but very
//! sparse operators on spaces of homogeneous polynomials.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::ratpoly::Rational;

/// Sparse vector as `(index, value)` pairs, strictly increasing indices,
/// no zero values.
pub type SparseVec = Vec<(usize, Rational)>;

/// Rows in echelon form keyed by pivot. Each row has value 1 at its pivot,
/// and its pivot is its smallest index.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }

    /// Eliminates every pivot coordinate of `v`.
    pub fn reduce(&self, v: &[(usize, Rational)]) -> SparseVec {
        if self.rows.is_empty() {
            return v.to_vec();
        }
        let mut acc: BTreeMap<usize, Rational> = v.iter().cloned().collect();
        let mut cursor = 0;
        while let Some((&k, c)) = acc.range(cursor..).next() {
            cursor = k + 1;
            let Some(row) = self.rows.get(&k) else {
                continue;
            };
            let c = c.clone();
            for (j, a) in row {
                let e = acc.entry(*j).or_insert_with(Rational::zero);
                *e -= &c * a;
                if e.is_zero() {
                    acc.remove(j);
                }
            }
        }
        acc.into_iter().collect()
    }

    /// Adds `v` to the span. Returns the new pivot, or `None` if `v` was
    /// already in the span.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> Option<usize> {
        let r = self.reduce(v);
        let (p, lead) = r.first()?.clone();
        let inv = lead.recip();
        let row = if inv.is_one() {
            r
        } else {
            r.into_iter().map(|(j, a)| (j, a * &inv)).collect()
        };
        self.rows.insert(p, row);
        Some(p)
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Fully reduced rows, sorted by pivot.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (p, row) in self.rows.into_iter().rev() {
            let tail = Echelon { rows: done };
            let reduced = tail.reduce(&row);
            done = tail.rows;
            done.insert(p, reduced);
        }
        done.into_values().collect()
    }
}

/// Basis of `{x : row·x = 0 for every row}` in ℚ^ncols. One vector per
/// free column `f`, equal to `e_f` minus pivot contributions, so the
/// basis is canonical for the row space.
pub fn sparse_kernel(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    sparse_kernel_with_free(rows, ncols)
        .into_iter()
        .map(|(_, v)| v)
        .collect()
}

/// Like [`sparse_kernel`], also returning the free column of each vector:
/// vector `v` has value 1 there and every other vector has value 0 there.
pub fn sparse_kernel_with_free(rows: &[SparseVec], ncols: usize) -> Vec<(usize, SparseVec)> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
        if ech.rank() == ncols {
            return Vec::new();
        }
    }
    let rref = ech.into_rref();
    // column f -> [(pivot, -coef)]
    let mut by_col: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    let mut pivot_set = vec![false; ncols];
    for row in &rref {
        let p = row[0].0;
        pivot_set[p] = true;
        for (j, a) in &row[1..] {
            by_col.entry(*j).or_default().push((p, -a.clone()));
        }
    }
    (0..ncols)
        .filter(|&f| !pivot_set[f])
        .map(|f| {
            let mut v = by_col.remove(&f).unwrap_or_default();
            v.push((f, Rational::one()));
            v.sort_by_key(|e| e.0);
            (f, v)
        })
        .collect()
}

/// Basis of the relations `Σ cₖ·colₖ = 0` among the given columns.
pub fn kernel_of_columns(cols: &[SparseVec], nrows: usize) -> Vec<SparseVec> {
    sparse_kernel(&transpose_sparse(cols, nrows), cols.len())
}

/// [`kernel_of_columns`] with free columns, see [`sparse_kernel_with_free`].
pub fn kernel_of_columns_with_free(cols: &[SparseVec], nrows: usize) -> Vec<(usize, SparseVec)> {
    sparse_kernel_with_free(&transpose_sparse(cols, nrows), cols.len())
}

/// Transposes a list of sparse columns into sparse rows.
pub fn transpose_sparse(cols: &[SparseVec], nrows: usize) -> Vec<SparseVec> {
    let mut rows: Vec<SparseVec> = vec![Vec::new(); nrows];
    for (k, col) in cols.iter().enumerate() {
        for (i, a) in col {
            rows[*i].push((k, a.clone()));
        }
    }
    rows.retain(|r| !r.is_empty());
    rows
}

/// Dense to sparse.
pub fn sparsify(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| (i, a.clone()))
        .collect()
}

/// Sparse to dense of length `n`.
pub fn densify(v: &[(usize, Rational)], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, a) in v {
        out[*i] = a.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kernel, RatMatrix, Subspace};
    use crate::ratpoly::rat;

    #[test]
    fn matches_dense_kernel() {
        let m = RatMatrix::from_i64(&[
            &[1, 2, 0, 3, 1],
            &[0, 0, 1, -1, 2],
            &[1, 2, 1, 2, 3],
            &[2, 4, 0, 6, 2],
        ]);
        let rows: Vec<SparseVec> = m.row_vectors().iter().map(|r| sparsify(r)).collect();
        let ks = sparse_kernel(&rows, 5);
        let sparse = Subspace::from_vectors(5, ks.iter().map(|v| densify(v, 5)).collect()).unwrap();
        assert_eq!(sparse, kernel(&m));
        let cols: Vec<SparseVec> = (0..5).map(|j| sparsify(&m.column(j))).collect();
        let kc = kernel_of_columns(&cols, 4);
        let sc = Subspace::from_vectors(5, kc.iter().map(|v| densify(v, 5)).collect()).unwrap();
        assert_eq!(sc, kernel(&m));
    }

    #[test]
    fn insert_detects_dependence() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(&[(1, rat(2)), (3, rat(4))]), Some(1));
        assert_eq!(e.insert(&[(1, rat(1)), (3, rat(2))]), None);
        assert_eq!(e.insert(&[(1, rat(1)), (2, rat(1))]), Some(2));
        assert!(e.contains(&[(2, rat(1)), (3, rat(-2))]));
        let r = e.into_rref();
        assert_eq!(r[0], vec![(1, rat(1)), (3, rat(2))]);
        assert_eq!(r[1], vec![(2, rat(1)), (3, rat(-2))]);
    }
}
