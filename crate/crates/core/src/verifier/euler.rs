use num_traits::{One, Zero};
use serde::Serialize;

use super::VerifyError;
use crate::invariants::SemiInvariant;
use crate::linalg::{solve, RatMatrix};
use crate::pvscore::PVSpace;
use crate::ratpoly::{serialize_rational_rows, serialize_rationals, Rational};

/// Elements Xⱼ of 𝔤 with ξ_{Xⱼ} fᵢ = δᵢⱼ fᵢ, and the identity written as
/// Σ deg(fⱼ) Xⱼ plus a residual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerDecomposition {
    /// Coordinates of each Xⱼ on the basis of 𝔤.
    #[serde(serialize_with = "serialize_rational_rows")]
    pub xs: Vec<Vec<Rational>>,
    /// Coordinates of the identity on the basis of 𝔤.
    #[serde(serialize_with = "serialize_rationals")]
    pub identity: Vec<Rational>,
    /// λᵢ(I) for each basic invariant.
    #[serde(serialize_with = "serialize_rationals")]
    pub lambda_at_identity: Vec<Rational>,
    /// Coordinates of I − Σ deg(fⱼ)·Xⱼ.
    #[serde(serialize_with = "serialize_rationals")]
    pub residual: Vec<Rational>,
    pub residual_in_derived: bool,
}

impl EulerDecomposition {
    /// True when every identity the decomposition asserts holds.
    pub fn holds(&self, degrees: &[u32]) -> bool {
        self.residual_in_derived
            && self.lambda_at_identity.len() == degrees.len()
            && self
                .lambda_at_identity
                .iter()
                .zip(degrees)
                .all(|(l, &d)| *l == Rational::from_integer(d.into()))
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves λᵢ(Xⱼ) = δᵢⱼ for each j (free coordinates set to 0, which
/// picks the solution supported on the pivot columns of the reduced
/// system) and writes the identity in these terms.
pub fn euler_decomposition(
    p: &PVSpace,
    basics: &[SemiInvariant],
) -> Result<EulerDecomposition, VerifyError> {
    let g = p.algebra();
    let n = g.n();
    let r = basics.len();
    let lam = RatMatrix::from_rows(basics.iter().map(|b| b.lambda.clone()).collect(), g.dim())?;
    let mut xs = Vec::with_capacity(r);
    for j in 0..r {
        let e: Vec<Rational> = (0..r)
            .map(|i| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let c = solve(&lam, &e)?.ok_or_else(|| {
            VerifyError::Inconsistent(format!(
                "no element with λ = e_{j}: characters are dependent"
            ))
        })?;
        let x = crate::liealg::LinVectorField::new(g.element(&c)?)?;
        for (i, b) in basics.iter().enumerate() {
            let want = if i == j {
                b.f.clone()
            } else {
                b.f.scale(&Rational::zero())
            };
            if x.apply(&b.f)? != want {
                return Err(VerifyError::Inconsistent(format!("ξ_X{j} f{i} != δ f{i}")));
            }
        }
        xs.push(c);
    }
    let identity = g
        .coordinates(&RatMatrix::identity(n))?
        .ok_or_else(|| VerifyError::Inconsistent("the identity is not in the algebra".into()))?;
    let lambda_at_identity: Vec<Rational> =
        basics.iter().map(|b| dot(&b.lambda, &identity)).collect();
    let mut residual = identity.clone();
    for (x, b) in xs.iter().zip(basics) {
        let d = Rational::from_integer(b.degree().into());
        for (o, c) in residual.iter_mut().zip(x) {
            *o -= &d * c;
        }
    }
    let residual_in_derived = g.derived_coordinates()?.contains(&residual)?;
    Ok(EulerDecomposition {
        xs,
        identity,
        lambda_at_identity,
        residual,
        residual_in_derived,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::basic_relative_invariants;
    use crate::liealg::LieAlgebraVF;
    use crate::ratpoly::{rat, ratio};

    #[test]
    fn aac() {
        let g = LieAlgebraVF::new(
            3,
            vec![
                RatMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]),
                RatMatrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 2, 0]]),
                RatMatrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]]),
            ],
        )
        .unwrap();
        let p = PVSpace::new(g, vec![rat(1), rat(0), rat(1)]).unwrap();
        let b = basic_relative_invariants(&p, 3).unwrap();
        let e = euler_decomposition(&p, &b.basics).unwrap();
        assert_eq!(
            e.xs,
            vec![
                vec![rat(1), rat(0), rat(0)],
                vec![rat(0), rat(0), ratio(1, 2)]
            ]
        );
        assert!(e.residual.iter().all(Zero::is_zero));
        assert_eq!(e.lambda_at_identity, vec![rat(1), rat(2)]);
        assert!(e.holds(&[1, 2]));
    }

    #[test]
    fn torus() {
        let g = LieAlgebraVF::new(3, (0..3).map(|i| RatMatrix::unit(3, i, i)).collect()).unwrap();
        let p = PVSpace::new(g, vec![rat(1); 3]).unwrap();
        let b = basic_relative_invariants(&p, 3).unwrap();
        let e = euler_decomposition(&p, &b.basics).unwrap();
        assert_eq!(e.identity, vec![rat(1); 3]);
        assert!(e.holds(&[1, 1, 1]));
    }
}
