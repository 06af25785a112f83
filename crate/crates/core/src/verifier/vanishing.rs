use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::VerifyError;
use crate::invariants::SemiInvariant;
use crate::liealg::{isotropy_subalgebra, orbit_tangent_dim, LieAlgebraVF};
use crate::ratpoly::{rat, MultiPoly, Rational};

/// Why a point is not usable for a component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointProblem {
    NoComponent,
    SeveralComponents(Vec<usize>),
    OrbitDimension(usize),
}

impl std::fmt::Display for PointProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PointProblem::NoComponent => write!(f, "no basic invariant vanishes there"),
            PointProblem::SeveralComponents(c) => {
                write!(f, "several basic invariants vanish there: {c:?}")
            }
            PointProblem::OrbitDimension(d) => write!(f, "orbit dimension {d}, expected n - 1"),
        }
    }
}

/// The component index of a point generic on exactly one component:
/// exactly one fᵢ vanishes there and the orbit has dimension n − 1.
pub fn classify_point(
    g: &LieAlgebraVF,
    basics: &[SemiInvariant],
    v: &[Rational],
) -> Result<Result<usize, PointProblem>, VerifyError> {
    let mut zeros = Vec::new();
    for (i, b) in basics.iter().enumerate() {
        if b.f.evaluate(v)?.is_zero() {
            zeros.push(i);
        }
    }
    let i = match zeros.len() {
        0 => return Ok(Err(PointProblem::NoComponent)),
        1 => zeros[0],
        _ => return Ok(Err(PointProblem::SeveralComponents(zeros))),
    };
    let d = orbit_tangent_dim(g, v)?;
    if d + 1 != g.n() {
        return Ok(Err(PointProblem::OrbitDimension(d)));
    }
    Ok(Ok(i))
}

/// A variable in which `f` has degree exactly one, with f = a·xₜ + b.
fn linear_variable(f: &MultiPoly) -> Result<Option<(usize, MultiPoly, MultiPoly)>, VerifyError> {
    for t in 0..f.nvars() {
        let a = f.partial_derivative(t)?;
        if a.is_zero() || !a.partial_derivative(t)?.is_zero() {
            continue;
        }
        let b = f - &(&MultiPoly::var(f.nvars(), t) * &a);
        return Ok(Some((t, a, b)));
    }
    Ok(None)
}

/// Searches for a rational point generic on component `i`. Solves for a
/// variable in which fᵢ is linear when there is one, otherwise takes
/// rational roots of fᵢ on random lines. Every candidate is validated
/// with [`classify_point`].
pub fn search_component_point(
    g: &LieAlgebraVF,
    basics: &[SemiInvariant],
    i: usize,
    seed: u64,
    tries: usize,
) -> Result<Option<Vec<Rational>>, VerifyError> {
    let n = g.n();
    let f = &basics[i].f;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9e37_79b9));
    let lin = linear_variable(f)?;
    for t in 0..tries {
        let b: i64 = 3 + (t as i64 / 8);
        let rnd = |rng: &mut ChaCha8Rng| -> Vec<Rational> {
            (0..n).map(|_| rat(rng.gen_range(-b..=b))).collect()
        };
        let candidates: Vec<Vec<Rational>> = match &lin {
            Some((var, a, c)) => {
                let mut v = rnd(&mut rng);
                v[*var] = Rational::zero();
                let av = a.evaluate(&v)?;
                if av.is_zero() {
                    continue;
                }
                v[*var] = -c.evaluate(&v)? / av;
                vec![v]
            }
            None => {
                let p = rnd(&mut rng);
                let q = rnd(&mut rng);
                let line = f.restrict_to_line(&p, &q)?;
                if line.is_zero() {
                    continue;
                }
                line.rational_roots()
                    .into_iter()
                    .map(|(s, _)| p.iter().zip(&q).map(|(a, d)| a + &s * d).collect())
                    .collect()
            }
        };
        for v in candidates {
            if classify_point(g, basics, &v)? == Ok(i) {
                return Ok(Some(v));
            }
        }
    }
    Ok(None)
}

/// Isotropy data at a generic point of one component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentIsotropy {
    pub component: usize,
    pub point: Vec<String>,
    pub isotropy_dim: usize,
    /// Basis of 𝔤_{vᵢ} in coordinates on 𝔤.
    pub isotropy: Vec<Vec<String>>,
    /// λⱼ vanishes on 𝔤_{vᵢ} for all j ≠ i.
    pub others_vanish: bool,
    /// λᵢ is nonzero on 𝔤_{vᵢ}.
    pub own_nonzero: bool,
}

pub fn component_isotropy(
    g: &LieAlgebraVF,
    basics: &[SemiInvariant],
    i: usize,
    v: &[Rational],
) -> Result<ComponentIsotropy, VerifyError> {
    let iso = isotropy_subalgebra(g, v)?;
    let vecs = iso.basis_vectors();
    let on = |j: usize| -> Vec<Rational> {
        vecs.iter()
            .map(|z| z.iter().zip(&basics[j].lambda).map(|(a, b)| a * b).sum())
            .collect()
    };
    let others_vanish = (0..basics.len())
        .filter(|&j| j != i)
        .all(|j| on(j).iter().all(Zero::is_zero));
    let own_nonzero = on(i).iter().any(|x| !x.is_zero());
    Ok(ComponentIsotropy {
        component: i,
        point: v.iter().map(ToString::to_string).collect(),
        isotropy_dim: iso.dim(),
        isotropy: vecs
            .iter()
            .map(|z| z.iter().map(ToString::to_string).collect())
            .collect(),
        others_vanish,
        own_nonzero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::basic_relative_invariants;
    use crate::linalg::RatMatrix;
    use crate::pvscore::PVSpace;

    fn aac() -> (PVSpace, Vec<SemiInvariant>) {
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
        let b = basic_relative_invariants(&p, 3).unwrap().basics;
        (p, b)
    }

    #[test]
    fn aac_points() {
        let (p, b) = aac();
        let g = p.algebra();
        let v1 = vec![rat(0), rat(1), rat(0)];
        let v2 = vec![rat(1), rat(0), rat(0)];
        assert_eq!(classify_point(g, &b, &v1).unwrap(), Ok(0));
        assert_eq!(classify_point(g, &b, &v2).unwrap(), Ok(1));
        assert_eq!(
            classify_point(g, &b, &[rat(0), rat(0), rat(1)]).unwrap(),
            Err(PointProblem::SeveralComponents(vec![0, 1]))
        );
        for (i, v) in [(0, v1), (1, v2)] {
            let c = component_isotropy(g, &b, i, &v).unwrap();
            assert_eq!(c.isotropy_dim, 1);
            assert!(c.others_vanish && c.own_nonzero);
        }
    }

    #[test]
    fn search_finds_validated_points() {
        let (p, b) = aac();
        for i in 0..2 {
            let v = search_component_point(p.algebra(), &b, i, 5, 64)
                .unwrap()
                .expect("found");
            assert_eq!(classify_point(p.algebra(), &b, &v).unwrap(), Ok(i));
        }
    }
}
