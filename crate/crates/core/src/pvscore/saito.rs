use std::collections::HashMap;

use super::{PVSpace, PvsError};
use crate::liealg::LieAlgebraVF;
use crate::ratpoly::{MultiPoly, Rational};

/// n×n matrix of linear forms whose column j is the coefficient vector
/// of ξ_{A_j}: entry (i, j) = (A_j·x)ᵢ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaitoMatrix {
    entries: Vec<Vec<MultiPoly>>,
}

impl SaitoMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<MultiPoly>] {
        &self.entries
    }
}

/// The n×dim 𝔤 matrix of linear forms (A_j·x)ᵢ.
pub fn coefficient_matrix(g: &LieAlgebraVF) -> Vec<Vec<MultiPoly>> {
    let n = g.n();
    (0..n)
        .map(|i| {
            g.basis()
                .iter()
                .map(|b| {
                    let row: Vec<Rational> = b.matrix().row(i).to_vec();
                    MultiPoly::linear_form(&row)
                })
                .collect()
        })
        .collect()
}

pub fn saito_matrix(g: &LieAlgebraVF) -> Result<SaitoMatrix, PvsError> {
    if g.dim() != g.n() {
        return Err(PvsError::NotSquare {
            dim: g.dim(),
            n: g.n(),
        });
    }
    Ok(SaitoMatrix {
        entries: coefficient_matrix(g),
    })
}

pub fn saito_determinant(s: &SaitoMatrix) -> MultiPoly {
    poly_det(&s.entries)
}

/// Determinant of a square matrix of polynomials by Laplace expansion
/// along rows, memoized on the set of remaining columns (2ⁿ subsets).
pub fn poly_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    assert!(n < 26, "matrix too large for subset memoization");
    assert!(m.iter().all(|r| r.len() == n), "square matrix required");
    if n == 0 {
        // ambient variable count is unknown for the empty matrix
        return MultiPoly::one(0);
    }
    let nvars = m[0][0].nvars();
    // memo for rows k..n: mask of used columns -> minor
    let mut prev: HashMap<u32, MultiPoly> = HashMap::new();
    prev.insert(0, MultiPoly::one(nvars));
    for k in (0..n).rev() {
        let size = (n - k) as u32;
        let mut cur: HashMap<u32, MultiPoly> = HashMap::new();
        for mask in 0u32..(1u32 << n) {
            if mask.count_ones() != size {
                continue;
            }
            let mut acc = MultiPoly::zero(nvars);
            let mut pos = 0;
            for (j, a) in m[k].iter().enumerate().take(n) {
                if mask & (1 << j) == 0 {
                    continue;
                }
                if !a.is_zero() {
                    if let Some(sub) = prev.get(&(mask & !(1 << j))) {
                        if !sub.is_zero() {
                            let term = a * sub;
                            if pos % 2 == 0 {
                                acc = &acc + &term;
                            } else {
                                acc = &acc - &term;
                            }
                        }
                    }
                }
                pos += 1;
            }
            cur.insert(mask, acc);
        }
        prev = cur;
    }
    prev.remove(&((1u32 << n) - 1)).expect("full mask present")
}

/// All maximal (n×n) minors of the coefficient matrix, in lexicographic
/// order of column subsets.
pub fn exceptional_ideal_generators(p: &PVSpace) -> Result<Vec<MultiPoly>, PvsError> {
    minors_of(p.algebra())
}

pub(crate) fn minors_of(g: &LieAlgebraVF) -> Result<Vec<MultiPoly>, PvsError> {
    let (n, m) = (g.n(), g.dim());
    if m < n {
        return Err(PvsError::TooFewFields { dim: m, n });
    }
    let cm = coefficient_matrix(g);
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let sub: Vec<Vec<MultiPoly>> = cm
            .iter()
            .map(|row| idx.iter().map(|&j| row[j].clone()).collect())
            .collect();
        out.push(poly_det(&sub));
        let Some(i) = (0..n).rev().find(|&i| idx[i] < m - n + i) else {
            return Ok(out);
        };
        idx[i] += 1;
        for k in (i + 1)..n {
            idx[k] = idx[k - 1] + 1;
        }
    }
}

/// Value of the n×n matrix `[A₁v | … | Aₙv]` determinant, used to
/// cross-check the polynomial determinant.
#[cfg(test)]
pub(crate) fn numeric_saito_det(g: &LieAlgebraVF, v: &[Rational]) -> Result<Rational, PvsError> {
    let t = g.tangent_matrix(v)?;
    Ok(crate::linalg::det_rat(&t).unwrap_or_else(|_| num_traits::Zero::zero()))
}
