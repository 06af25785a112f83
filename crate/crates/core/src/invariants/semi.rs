use num_traits::Zero;
use serde::Serialize;

use super::blocks::{derived_kernel_blocks, KBlock};
use super::{AlgebraData, DegreeSpace, InvariantError, SparseOp};
use crate::liealg::{LieAlgebraVF, LieError};
use crate::linalg::{kernel_of_columns_with_free, Echelon, SparseVec};
use crate::pvscore::PVSpace;
use crate::ratpoly::{MultiPoly, Rational};

/// A form f with ξ_X f = λ(X)·f for every basis element X.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiInvariant {
    pub f: MultiPoly,
    /// λ on the basis of 𝔤.
    pub lambda: Vec<Rational>,
}

impl SemiInvariant {
    pub fn degree(&self) -> u32 {
        self.f.total_degree().unwrap_or(0)
    }

    /// Re-checks ξ_X f = λ(X)·f exactly on every basis element.
    pub fn verify(&self, g: &LieAlgebraVF) -> Result<bool, LieError> {
        if self.lambda.len() != g.dim() {
            return Ok(false);
        }
        for (x, l) in g.basis().iter().zip(&self.lambda) {
            if x.apply(&self.f)? != self.f.scale(l) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A joint eigenspace of degree-d forms with its eigenvalue covector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiSpace {
    pub degree: u32,
    /// Basis with leading coefficients 1 and distinct leading monomials.
    pub basis: Vec<MultiPoly>,
    pub lambda: Vec<Rational>,
}

impl SemiSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The eigenvalue covector of a joint eigenvector f, checked exactly.
pub(crate) fn covector(
    g: &LieAlgebraVF,
    f: &MultiPoly,
) -> Result<Option<Vec<Rational>>, InvariantError> {
    let Some((lm, lc)) = f.leading_term() else {
        return Ok(None);
    };
    let mut out = Vec::with_capacity(g.dim());
    for x in g.basis() {
        let r = x.apply(f)?;
        let l = r.coefficient(lm) / lc;
        if r != f.scale(&l) {
            return Ok(None);
        }
        out.push(l);
    }
    Ok(Some(out))
}

#[derive(Debug, Clone)]
struct Piece {
    /// Basis in block coordinates.
    basis: Vec<SparseVec>,
    /// Block coordinate where basis vector k is 1 and the others are 0.
    pos: Vec<usize>,
}

impl Piece {
    fn coords(&self, v: &[(usize, Rational)]) -> SparseVec {
        let map: std::collections::HashMap<usize, &Rational> =
            v.iter().map(|(i, c)| (*i, c)).collect();
        self.pos
            .iter()
            .enumerate()
            .filter_map(|(k, p)| map.get(p).map(|c| (k, (*c).clone())))
            .collect()
    }

    fn restrict(&self, op: &SparseOp) -> SparseOp {
        let cols = self
            .basis
            .iter()
            .map(|b| self.coords(&op.apply(b)))
            .collect();
        SparseOp::new(self.basis.len(), cols)
    }

    fn combine(&self, u: &[(usize, Rational)]) -> SparseVec {
        let mut acc: std::collections::BTreeMap<usize, Rational> = Default::default();
        for (j, c) in u {
            for (i, b) in &self.basis[*j] {
                *acc.entry(*i).or_insert_with(Rational::zero) += c * b;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

/// Splits a block into joint rational eigenspaces of the coset
/// representatives (which commute on the block).
fn split_block(block: &KBlock, space: &DegreeSpace, data: &AlgebraData) -> Vec<Vec<SparseVec>> {
    let s = block.dim();
    let mut pieces = vec![Piece {
        basis: (0..s).map(|k| vec![(k, num_traits::One::one())]).collect(),
        pos: (0..s).collect(),
    }];
    for rep in &data.rep_mats {
        let op = block.op(space, rep);
        let mut next = Vec::new();
        for piece in &pieces {
            let r = piece.restrict(&op);
            for lambda in super::rational_spectrum(&r) {
                let ker = kernel_of_columns_with_free(&r.shifted_columns(&lambda), r.dim());
                if ker.is_empty() {
                    continue;
                }
                let mut basis = Vec::with_capacity(ker.len());
                let mut pos = Vec::with_capacity(ker.len());
                for (f, u) in ker {
                    basis.push(piece.combine(&u));
                    pos.push(piece.pos[f]);
                }
                next.push(Piece { basis, pos });
            }
        }
        pieces = next;
    }
    pieces
        .into_iter()
        .map(|p| p.basis.iter().map(|v| block.expand(v)).collect())
        .collect()
}

/// Echelon basis with pivots at the largest monomials, each scaled to
/// leading coefficient 1.
fn canonical_forms(space: &DegreeSpace, vecs: &[SparseVec]) -> Vec<MultiPoly> {
    let top = space.len();
    let flip = |v: &SparseVec| -> SparseVec {
        let mut w: SparseVec = v.iter().map(|(i, c)| (top - 1 - i, c.clone())).collect();
        w.sort_by_key(|e| e.0);
        w
    };
    let mut ech = Echelon::new();
    for v in vecs {
        ech.insert(&flip(v));
    }
    let mut out: Vec<MultiPoly> = ech
        .into_rref()
        .iter()
        .map(|r| space.to_poly(&flip(r)))
        .collect();
    out.sort_by(|a, b| b.cmp_canonical(a));
    out
}

pub(crate) fn semi_with(
    data: &AlgebraData,
    g: &LieAlgebraVF,
    d: u32,
) -> Result<Vec<SemiSpace>, InvariantError> {
    let space = DegreeSpace::new(g.n(), d);
    let mut out = Vec::new();
    for block in derived_kernel_blocks(data, &space, None) {
        for vecs in split_block(&block, &space, data) {
            let basis = canonical_forms(&space, &vecs);
            let lambda = covector(g, &basis[0])?.ok_or_else(|| {
                InvariantError::Internal(format!("{} is not a joint eigenvector", basis[0]))
            })?;
            for f in &basis[1..] {
                if covector(g, f)?.as_ref() != Some(&lambda) {
                    return Err(InvariantError::Internal(
                        "eigenspace basis disagrees on λ".into(),
                    ));
                }
            }
            out.push(SemiSpace {
                degree: d,
                basis,
                lambda,
            });
        }
    }
    out.sort_by(|a, b| a.basis[0].cmp_canonical(&b.basis[0]));
    Ok(out)
}

/// All joint eigenspaces of 𝔤 on forms of degree d with rational
/// eigenvalue covector.
///
/// Only rational eigenvalues are searched: λ is the differential of a
/// character of an algebraic group defined over ℚ evaluated on rational
/// matrices, so it is rational; irrational eigenvalues of an individual
/// operator belong to no semi-invariant.
pub fn semiinvariants_of_degree(
    g: &LieAlgebraVF,
    d: u32,
) -> Result<Vec<SemiSpace>, InvariantError> {
    if !g.is_closed() {
        return Err(LieError::NotClosed { i: 0, j: 0 }.into());
    }
    let data = AlgebraData::new(g)?;
    semi_with(&data, g, d)
}

/// The basic relative invariants found by a degree scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicInvariants {
    pub basics: Vec<SemiInvariant>,
    /// Multiplicity of each basic invariant in the reference minor.
    pub multiplicities: Vec<u32>,
    /// Reference minor divided by Π fᵢ^{mᵢ}.
    pub cofactor: MultiPoly,
    /// True when the cofactor is constant, which proves no basic
    /// invariant is missing.
    pub complete: bool,
    pub max_degree_scanned: u32,
    /// Joint eigenspaces of dimension > 1 (never expected for a PVS).
    pub anomalies: Vec<Anomaly>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Anomaly {
    pub degree: u32,
    pub dim: usize,
    pub lambda: Vec<String>,
}

/// Degree scan for basic relative invariants.
///
/// Each basic invariant vanishes on a component of the complement of the
/// open orbit, where every maximal minor of the coefficient matrix
/// vanishes, so each divides the reference minor. Dividing the found ones
/// out (with multiplicity) leaves a cofactor that every missing basic
/// invariant must divide; the scan stops once the degree exceeds the
/// cofactor's degree. For a PVS a joint eigenspace has dimension at most
/// one (a quotient of two eigenvectors with equal λ is constant on the open
/// orbit), so a larger one is reported as an anomaly and not used.
pub fn basic_relative_invariants(
    p: &PVSpace,
    max_degree: u32,
) -> Result<BasicInvariants, InvariantError> {
    let g = p.algebra();
    let data = AlgebraData::new(g)?;
    let (minor, _) = p.reference_minor();
    let mut cofactor = minor.monic();
    let mut found: Vec<SemiInvariant> = Vec::new();
    let mut mult: Vec<u32> = Vec::new();
    let mut anomalies = Vec::new();
    let mut scanned = 0;
    for d in 1..=max_degree {
        if cofactor.total_degree().unwrap_or(0) < d {
            break;
        }
        scanned = d;
        for s in semi_with(&data, g, d)? {
            if s.dim() > 1 {
                anomalies.push(Anomaly {
                    degree: d,
                    dim: s.dim(),
                    lambda: s.lambda.iter().map(ToString::to_string).collect(),
                });
                continue;
            }
            let f = s.basis[0].clone();
            let mut reducible = false;
            for b in &found {
                if f.exact_divide(&b.f)?.is_some() {
                    reducible = true;
                    break;
                }
            }
            if reducible {
                continue;
            }
            let mut m = 0;
            while let Some(q) = cofactor.exact_divide(&f)? {
                cofactor = q;
                m += 1;
            }
            if m == 0 {
                return Err(InvariantError::Reconstruction(format!(
                    "relative invariant {f} does not divide the reference minor"
                )));
            }
            found.push(SemiInvariant {
                f,
                lambda: s.lambda,
            });
            mult.push(m);
        }
    }
    let complete = cofactor.is_constant();
    Ok(BasicInvariants {
        basics: found,
        multiplicities: mult,
        cofactor,
        complete,
        max_degree_scanned: scanned,
        anomalies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::RatMatrix;
    use crate::ratpoly::{parse_poly, rat};

    fn aac() -> LieAlgebraVF {
        LieAlgebraVF::new(
            3,
            vec![
                RatMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]),
                RatMatrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 2, 0]]),
                RatMatrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]]),
            ],
        )
        .unwrap()
    }

    fn xyz(s: &str) -> MultiPoly {
        parse_poly(s, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn two_additive_degree_one() {
        let g = LieAlgebraVF::new(
            3,
            vec![
                RatMatrix::identity(3),
                RatMatrix::unit(3, 1, 0),
                RatMatrix::unit(3, 2, 0),
            ],
        )
        .unwrap();
        let s = semiinvariants_of_degree(&g, 1).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].basis, vec![xyz("x")]);
        assert_eq!(s[0].lambda, vec![rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn aac_degree_two() {
        let s = semiinvariants_of_degree(&aac(), 2).unwrap();
        let q = s
            .iter()
            .find(|s| s.basis[0] == xyz("x*z - y^2"))
            .expect("xz - y^2 present");
        assert_eq!(q.dim(), 1);
        assert_eq!(q.lambda, vec![rat(0), rat(0), rat(2)]);
    }

    #[test]
    fn torus_linear_forms() {
        let g = LieAlgebraVF::new(3, (0..3).map(|i| RatMatrix::unit(3, i, i)).collect()).unwrap();
        let s = semiinvariants_of_degree(&g, 1).unwrap();
        assert_eq!(s.len(), 3);
        for sp in &s {
            let i = (0..3)
                .find(|&i| sp.basis[0] == MultiPoly::var(3, i))
                .unwrap();
            let want: Vec<Rational> = (0..3).map(|j| rat((i == j) as i64)).collect();
            assert_eq!(sp.lambda, want);
        }
    }

    #[test]
    fn aac_basics() {
        let p = PVSpace::new(aac(), vec![rat(1), rat(0), rat(1)]).unwrap();
        let b = basic_relative_invariants(&p, 3).unwrap();
        let fs: Vec<MultiPoly> = b.basics.iter().map(|s| s.f.clone()).collect();
        assert_eq!(fs, vec![xyz("x"), xyz("x*z - y^2")]);
        assert_eq!(b.multiplicities, vec![1, 1]);
        assert!(b.complete);
        assert!(b.anomalies.is_empty());
    }
}
