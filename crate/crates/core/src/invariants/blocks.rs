use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::{AlgebraData, SparseOp};
use crate::liealg::LinVectorField;
use crate::linalg::{kernel_of_columns_with_free, RatMatrix, SparseVec};
use crate::ratpoly::{monomials_of_degree, Monomial, MultiPoly, Rational};

/// The monomial basis of forms of degree d in n variables, ascending.
#[derive(Debug, Clone)]
pub struct DegreeSpace {
    n: usize,
    d: u32,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeSpace {
    pub fn new(n: usize, d: u32) -> Self {
        let monos = monomials_of_degree(n, d);
        let index = monos
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        DegreeSpace { n, d, monos, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monos[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coefficient vector of a form of this degree; `None` if some term has
    /// another degree.
    pub fn to_sparse(&self, f: &MultiPoly) -> Option<SparseVec> {
        let mut v: SparseVec = Vec::with_capacity(f.num_terms());
        for (m, c) in f.terms() {
            v.push((self.index_of(m)?, c.clone()));
        }
        v.sort_by_key(|e| e.0);
        Some(v)
    }

    pub fn to_poly(&self, v: &[(usize, Rational)]) -> MultiPoly {
        MultiPoly::from_terms(
            self.n,
            v.iter().map(|(i, c)| (self.monos[*i].clone(), c.clone())),
        )
    }

    /// ξ_A applied to a linear combination of basis monomials, as a sparse
    /// vector in the same space.
    pub fn apply(&self, a: &RatMatrix, v: &[(usize, Rational)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (k, c) in v {
            for (m, b) in derive_monomial(a, &self.monos[*k]) {
                let i = self.index[&m];
                *acc.entry(i).or_insert_with(Rational::zero) += c * b;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

/// ξ_A(m) for a single monomial, as unmerged terms.
pub(crate) fn derive_monomial(a: &RatMatrix, m: &Monomial) -> Vec<(Monomial, Rational)> {
    let n = a.rows();
    let mut out = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let ei = Rational::from_integer(e.into());
        for j in 0..n {
            let aij = &a[(i, j)];
            if !aij.is_zero() {
                out.push((m.shifted(i, j), &ei * aij));
            }
        }
    }
    out
}

/// Matrix of ξ_a on the monomial basis of degree-d forms (column k is the
/// image of the k-th monomial in ascending order).
pub fn derivation_matrix(a: &LinVectorField, d: u32) -> RatMatrix {
    let space = DegreeSpace::new(a.n(), d);
    let mut m = RatMatrix::zeros(space.len(), space.len());
    for k in 0..space.len() {
        for (i, c) in space.apply(a.matrix(), &[(k, num_traits::One::one())]) {
            m[(i, k)] = c;
        }
    }
    m
}

/// One weight space of degree-d forms cut down to the joint kernel of the
/// derived algebra.
#[derive(Debug, Clone)]
pub(crate) struct KBlock {
    /// Kernel basis, sparse over the degree space.
    pub basis: Vec<SparseVec>,
    /// Per basis vector, the monomial where it is 1 and all others are 0.
    pub free: Vec<usize>,
}

impl KBlock {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a vector lying in the block.
    pub fn coords(&self, v: &[(usize, Rational)]) -> SparseVec {
        let map: HashMap<usize, &Rational> = v.iter().map(|(i, c)| (*i, c)).collect();
        self.free
            .iter()
            .enumerate()
            .filter_map(|(k, f)| map.get(f).map(|c| (k, (*c).clone())))
            .collect()
    }

    /// Block coordinates to a sparse vector in the degree space.
    pub fn expand(&self, coords: &[(usize, Rational)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (k, c) in coords {
            for (i, b) in &self.basis[*k] {
                *acc.entry(*i).or_insert_with(Rational::zero) += c * b;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// ξ_a restricted to the block; `a` must preserve it.
    pub fn op(&self, space: &DegreeSpace, a: &RatMatrix) -> SparseOp {
        let cols = self
            .basis
            .iter()
            .map(|b| self.coords(&space.apply(a, b)))
            .collect();
        SparseOp::new(self.dim(), cols)
    }
}

/// Weight blocks of the joint kernel of [𝔤,𝔤] on degree-d forms. With
/// `target`, only the block of that weight is computed. Blocks whose
/// weight is nonzero on 𝔥 ∩ [𝔤,𝔤] are skipped since their kernel is zero.
pub(crate) fn derived_kernel_blocks(
    data: &AlgebraData,
    space: &DegreeSpace,
    target: Option<&[Rational]>,
) -> Vec<KBlock> {
    let mut groups: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
    for i in 0..space.len() {
        let w = data.weight(space.monomial(i).exponents());
        if target.is_some_and(|t| t != w.as_slice()) {
            continue;
        }
        groups.entry(w).or_default().push(i);
    }
    let nrows = space.len();
    let mut out = Vec::new();
    for (_, members) in groups {
        if !data.derived_weight_zero(space.monomial(members[0]).exponents()) {
            continue;
        }
        if data.derived_mats.is_empty() {
            out.push(KBlock {
                basis: members
                    .iter()
                    .map(|&i| vec![(i, num_traits::One::one())])
                    .collect(),
                free: members,
            });
            continue;
        }
        let cols: Vec<SparseVec> = members
            .iter()
            .map(|&i| {
                let mut col = Vec::new();
                for (t, y) in data.derived_mats.iter().enumerate() {
                    for (j, c) in space.apply(y, &[(i, num_traits::One::one())]) {
                        col.push((t * nrows + j, c));
                    }
                }
                col
            })
            .collect();
        let ker = kernel_of_columns_with_free(&cols, data.derived_mats.len() * nrows);
        if ker.is_empty() {
            continue;
        }
        let mut basis = Vec::with_capacity(ker.len());
        let mut free = Vec::with_capacity(ker.len());
        for (f, v) in ker {
            free.push(members[f]);
            basis.push(v.into_iter().map(|(k, c)| (members[k], c)).collect());
        }
        out.push(KBlock { basis, free });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    #[test]
    fn euler_matrix_is_scalar() {
        let e = LinVectorField::new(RatMatrix::identity(3)).unwrap();
        let m = derivation_matrix(&e, 2);
        assert_eq!(m, RatMatrix::identity(6).scale(&rat(2)));
    }

    #[test]
    fn lower_shift_on_linear_forms() {
        let a = LinVectorField::new(RatMatrix::unit(3, 1, 0)).unwrap();
        let m = derivation_matrix(&a, 1);
        // ascending basis z, y, x: y -> x, others -> 0
        let space = DegreeSpace::new(3, 1);
        let y = space.index_of(&Monomial::var(3, 1)).unwrap();
        let x = space.index_of(&Monomial::var(3, 0)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if (i, j) == (x, y) { rat(1) } else { rat(0) };
                assert_eq!(m[(i, j)], want);
            }
        }
    }

    #[test]
    fn zero_field_gives_zero_matrix() {
        let z = LinVectorField::new(RatMatrix::zeros(2, 2)).unwrap();
        assert!(derivation_matrix(&z, 3).is_zero());
    }
}
