use super::InvariantError;
use crate::liealg::{derived_subalgebra, vf_bracket, LieAlgebraVF, LieError, LinVectorField};
use crate::linalg::{kernel, RatMatrix, Subspace};
use crate::ratpoly::Rational;

/// Linear-algebra data of 𝔤 reused by every degree: the derived algebra,
/// the diagonal part 𝔥 = 𝔤 ∩ diag, and coset representatives of
/// 𝔤/[𝔤,𝔤] taken from the centralizer of 𝔥.
///
/// 𝔤 splits into ad 𝔥 weight spaces and every nonzero weight space lies in
/// [𝔤,𝔤], so the centralizer 𝔤₀ already spans 𝔤 modulo [𝔤,𝔤]. Elements of 𝔤₀
/// commute with 𝔥 and therefore preserve each monomial weight space.
#[derive(Debug, Clone)]
pub struct AlgebraData {
    pub n: usize,
    pub dim: usize,
    /// [𝔤,𝔤] in 𝔤-coordinates.
    pub derived: Subspace,
    /// Basis matrices of [𝔤,𝔤].
    pub derived_mats: Vec<RatMatrix>,
    /// Diagonals of a basis of 𝔥.
    pub torus: Vec<Vec<Rational>>,
    /// Diagonals of a basis of 𝔥 ∩ [𝔤,𝔤].
    pub derived_torus: Vec<Vec<Rational>>,
    /// Coset representatives in 𝔤-coordinates and as matrices.
    pub reps: Vec<Vec<Rational>>,
    pub rep_mats: Vec<RatMatrix>,
}

fn diagonal_subspace(n: usize) -> Subspace {
    let vecs = (0..n)
        .map(|i| RatMatrix::unit(n, i, i).as_slice().to_vec())
        .collect();
    Subspace::from_vectors(n * n, vecs).expect("sizes agree")
}

fn diag_of(v: &[Rational], n: usize) -> Vec<Rational> {
    (0..n).map(|i| v[i * n + i].clone()).collect()
}

impl AlgebraData {
    pub fn new(g: &LieAlgebraVF) -> Result<Self, InvariantError> {
        let n = g.n();
        let m = g.dim();
        let derived_flat = derived_subalgebra(g)?;
        let derived_mats: Vec<RatMatrix> = derived_flat
            .basis_vectors()
            .into_iter()
            .map(|v| RatMatrix::new(n, n, v))
            .collect::<Result<_, _>>()?;
        let derived = g.derived_coordinates()?;
        let diag = diagonal_subspace(n);
        let torus_flat = g.span().intersect(&diag)?;
        let torus: Vec<Vec<Rational>> = torus_flat
            .basis_vectors()
            .iter()
            .map(|v| diag_of(v, n))
            .collect();
        let derived_torus = derived_flat
            .intersect(&diag)?
            .basis_vectors()
            .iter()
            .map(|v| diag_of(v, n))
            .collect();

        // centralizer of 𝔥 in 𝔤-coordinates
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for h in &torus {
            let hv = LinVectorField::new(RatMatrix::diag(h))?;
            let cols: Vec<Vec<Rational>> = g
                .basis()
                .iter()
                .map(|x| vf_bracket(&hv, x).map(|c| c.matrix().as_slice().to_vec()))
                .collect::<Result<_, LieError>>()?;
            for r in 0..n * n {
                rows.push(cols.iter().map(|c| c[r].clone()).collect());
            }
        }
        let centralizer = if rows.is_empty() {
            Subspace::full(m)
        } else {
            kernel(&RatMatrix::from_rows(rows, m)?)
        };

        let mut span = derived.clone();
        let mut reps = Vec::new();
        for z in centralizer.basis_vectors() {
            if !span.contains(&z)? {
                span = span.sum(&Subspace::from_vectors(m, vec![z.clone()])?)?;
                reps.push(z);
            }
        }
        if span.dim() != m {
            return Err(InvariantError::Internal(
                "centralizer of the diagonal part does not span g modulo [g,g]".into(),
            ));
        }
        let rep_mats = reps
            .iter()
            .map(|c| g.element(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AlgebraData {
            n,
            dim: m,
            derived,
            derived_mats,
            torus,
            derived_torus,
            reps,
            rep_mats,
        })
    }

    /// Weight of an exponent vector under the basis of 𝔥.
    pub fn weight(&self, exps: &[u32]) -> Vec<Rational> {
        self.torus.iter().map(|h| dot_exps(h, exps)).collect()
    }

    /// True when the exponent vector has weight zero on 𝔥 ∩ [𝔤,𝔤].
    pub fn derived_weight_zero(&self, exps: &[u32]) -> bool {
        self.derived_torus
            .iter()
            .all(|h| num_traits::Zero::is_zero(&dot_exps(h, exps)))
    }
}

fn dot_exps(h: &[Rational], exps: &[u32]) -> Rational {
    h.iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(a, &e)| a * Rational::from_integer(e.into()))
        .sum()
}
