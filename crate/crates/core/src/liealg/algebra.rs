use super::{vf_bracket, LieError, LinVectorField};
use crate::linalg::{kernel, rref, solve, RatMatrix, Subspace};
use crate::ratpoly::Rational;

/// Outcome of a closure check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Closure {
    Closed,
    /// `[X_i, X_j]` is outside the span; `residual` is its normal form
    /// modulo the span (as an n×n matrix).
    NotClosed {
        i: usize,
        j: usize,
        residual: RatMatrix,
    },
}

/// A Lie algebra 𝔤 ⊆ 𝔤𝔩(V) given by linearly independent matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraVF {
    n: usize,
    basis: Vec<LinVectorField>,
    closed: bool,
}

fn flatten(m: &RatMatrix) -> Vec<Rational> {
    m.as_slice().to_vec()
}

impl LieAlgebraVF {
    /// Validates sizes and linear independence and runs the closure
    /// check, recording the result in [`LieAlgebraVF::is_closed`].
    pub fn new(n: usize, basis: Vec<RatMatrix>) -> Result<Self, LieError> {
        let mut fields = Vec::with_capacity(basis.len());
        let mut span = Subspace::zero(n * n);
        for (index, m) in basis.into_iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(LieError::BadMatrix { index });
            }
            let v = flatten(&m);
            if span.contains(&v)? {
                return Err(LieError::LinearlyDependent { index });
            }
            span = span.sum(&Subspace::from_vectors(n * n, vec![v])?)?;
            fields.push(LinVectorField::new(m)?);
        }
        let mut g = LieAlgebraVF {
            n,
            basis: fields,
            closed: false,
        };
        g.closed = g.verify_closure()? == Closure::Closed;
        Ok(g)
    }

    /// Like [`LieAlgebraVF::new`] but fails on a non-closed span.
    pub fn new_closed(n: usize, basis: Vec<RatMatrix>) -> Result<Self, LieError> {
        let g = Self::new(n, basis)?;
        match g.verify_closure()? {
            Closure::Closed => Ok(g),
            Closure::NotClosed { i, j, .. } => Err(LieError::NotClosed { i, j }),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LinVectorField] {
        &self.basis
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// The span of the basis inside ℚ^{n²}.
    pub fn span(&self) -> Subspace {
        Subspace::from_vectors(
            self.n * self.n,
            self.basis.iter().map(|b| flatten(b.matrix())).collect(),
        )
        .expect("consistent sizes")
    }

    /// n²×dim matrix whose columns are the flattened basis matrices.
    fn coordinate_matrix(&self) -> RatMatrix {
        let rows = self.basis.iter().map(|b| flatten(b.matrix())).collect();
        RatMatrix::from_rows(rows, self.n * self.n)
            .expect("rectangular")
            .transpose()
    }

    /// Coefficients of `m` on the basis, or `None` if `m` ∉ 𝔤.
    pub fn coordinates(&self, m: &RatMatrix) -> Result<Option<Vec<Rational>>, LieError> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(LieError::SizeMismatch {
                expected: self.n,
                got: m.rows(),
            });
        }
        Ok(solve(&self.coordinate_matrix(), m.as_slice())?)
    }

    /// The matrix `Σ cⱼ Xⱼ`.
    pub fn element(&self, coeffs: &[Rational]) -> Result<RatMatrix, LieError> {
        if coeffs.len() != self.dim() {
            return Err(LieError::SizeMismatch {
                expected: self.dim(),
                got: coeffs.len(),
            });
        }
        if self.basis.is_empty() {
            return Ok(RatMatrix::zeros(self.n, self.n));
        }
        let mats: Vec<RatMatrix> = self.basis.iter().map(|b| b.matrix().clone()).collect();
        Ok(RatMatrix::linear_combination(coeffs, &mats)?)
    }

    pub fn verify_closure(&self) -> Result<Closure, LieError> {
        let span = self.span();
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                let c = vf_bracket(&self.basis[i], &self.basis[j])?;
                let r = span.reduce(c.matrix().as_slice())?;
                if r.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                    let residual = RatMatrix::new(self.n, self.n, r)?;
                    return Ok(Closure::NotClosed { i, j, residual });
                }
            }
        }
        Ok(Closure::Closed)
    }

    /// n×dim matrix `[X₁v | … | X_m v]`.
    pub fn tangent_matrix(&self, v: &[Rational]) -> Result<RatMatrix, LieError> {
        if v.len() != self.n {
            return Err(LieError::SizeMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        let cols: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|b| b.at(v))
            .collect::<Result<_, _>>()?;
        Ok(RatMatrix::from_rows(cols, self.n)?.transpose())
    }

    /// [𝔤,𝔤] in coordinates on the basis of 𝔤 (a subspace of ℚ^dim).
    pub fn derived_coordinates(&self) -> Result<Subspace, LieError> {
        let d = derived_subalgebra(self)?;
        let mut vecs = Vec::with_capacity(d.dim());
        for v in d.basis_vectors() {
            let m = RatMatrix::new(self.n, self.n, v)?;
            let c = self
                .coordinates(&m)?
                .expect("brackets of a closed algebra lie in the span");
            vecs.push(c);
        }
        Ok(Subspace::from_vectors(self.dim(), vecs)?)
    }
}

/// [𝔤,𝔤] as a subspace of ℚ^{n²}: the span of all pairwise brackets.
pub fn derived_subalgebra(g: &LieAlgebraVF) -> Result<Subspace, LieError> {
    if !g.closed {
        return match g.verify_closure()? {
            Closure::NotClosed { i, j, .. } => Err(LieError::NotClosed { i, j }),
            Closure::Closed => unreachable!("closed flag set at construction"),
        };
    }
    let mut vecs = Vec::new();
    for i in 0..g.dim() {
        for j in (i + 1)..g.dim() {
            let c = vf_bracket(&g.basis[i], &g.basis[j])?;
            vecs.push(flatten(c.matrix()));
        }
    }
    Ok(Subspace::from_vectors(g.n * g.n, vecs)?)
}

/// 𝔤_v = {X : X·v = 0} in coordinates on the basis of 𝔤.
pub fn isotropy_subalgebra(g: &LieAlgebraVF, v: &[Rational]) -> Result<Subspace, LieError> {
    Ok(kernel(&g.tangent_matrix(v)?))
}

/// Rank of `[X₁v | … | X_m v]`, the dimension of the orbit through v.
pub fn orbit_tangent_dim(g: &LieAlgebraVF, v: &[Rational]) -> Result<usize, LieError> {
    Ok(rref(&g.tangent_matrix(v)?).1)
}
