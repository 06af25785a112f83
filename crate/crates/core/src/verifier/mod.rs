//! Structural checks on a computed invariant theory. Each check returns
//! a [`Verdict`]; a pass is backed by exact identities, a failure carries
//! a witness.

mod euler;
mod vanishing;

pub use euler::{euler_decomposition, EulerDecomposition};
pub use vanishing::{
    classify_point, component_isotropy, search_component_point, ComponentIsotropy, PointProblem,
};

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::invariants::{AdditiveResult, BasicInvariants, InvariantError};
use crate::liealg::{isotropy_subalgebra, LieError};
use crate::linalg::{rref, LinalgError, RatMatrix};
use crate::pvscore::PVSpace;
use crate::ratpoly::{PolyError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

impl From<LinalgError> for VerifyError {
    fn from(e: LinalgError) -> Self {
        VerifyError::Lie(e.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass { detail: String },
    Fail { witness: String },
    Skipped { reason: String },
}

impl Verdict {
    pub fn pass(d: impl Into<String>) -> Self {
        Verdict::Pass { detail: d.into() }
    }
    pub fn fail(w: impl Into<String>) -> Self {
        Verdict::Fail { witness: w.into() }
    }
    pub fn skipped(r: impl Into<String>) -> Self {
        Verdict::Skipped { reason: r.into() }
    }
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    fn check(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> Self {
        if ok {
            Verdict::pass(pass)
        } else {
            Verdict::fail(fail)
        }
    }

    fn from_result(r: Result<Verdict, VerifyError>) -> Self {
        r.unwrap_or_else(|e| Verdict::fail(format!("error: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdicts {
    /// The degree scan ended with a constant cofactor.
    pub basics_certificate: Verdict,
    /// r = dim 𝔤 − dim [𝔤,𝔤] for an LFD.
    pub component_count: Verdict,
    /// r = dim H − dim 𝒜₁.
    pub component_identity: Verdict,
    /// No additive invariants for an LFD, up to the bound.
    pub no_additive: Verdict,
    pub euler: Verdict,
    pub vanishing: Verdict,
    pub abelian: Verdict,
    pub solvable: Verdict,
    pub small_quotient: Verdict,
    pub dphi_vanishing: Verdict,
    pub jacobian_rank: Verdict,
    pub euler_decomposition: Option<EulerDecomposition>,
    pub component_isotropy: Vec<ComponentIsotropy>,
}

impl TheoremVerdicts {
    pub fn all(&self) -> [(&'static str, &Verdict); 11] {
        [
            ("basics_certificate", &self.basics_certificate),
            ("component_count", &self.component_count),
            ("component_identity", &self.component_identity),
            ("no_additive", &self.no_additive),
            ("euler", &self.euler),
            ("vanishing", &self.vanishing),
            ("abelian", &self.abelian),
            ("solvable", &self.solvable),
            ("small_quotient", &self.small_quotient),
            ("dphi_vanishing", &self.dphi_vanishing),
            ("jacobian_rank", &self.jacobian_rank),
        ]
    }

    pub fn any_fail(&self) -> bool {
        self.all().iter().any(|(_, v)| v.is_fail())
    }
}

/// Everything the checks look at.
#[derive(Debug, Clone, Copy)]
pub struct CheckInput<'a> {
    pub p: &'a PVSpace,
    pub lfd: bool,
    pub basics: &'a BasicInvariants,
    pub additive: &'a AdditiveResult,
    pub dim_h: usize,
    /// Points on components, in any order; each is matched to the basic
    /// invariant vanishing there.
    pub component_points: &'a [Vec<Rational>],
    pub seed: u64,
}

const NOT_LFD: &str = "not a linear free divisor";

pub fn check_component_count(inp: &CheckInput) -> Verdict {
    if !inp.lfd {
        return Verdict::skipped(NOT_LFD);
    }
    let g = inp.p.algebra();
    let derived = match g.derived_coordinates() {
        Ok(d) => d.dim(),
        Err(e) => return Verdict::fail(e.to_string()),
    };
    let r = inp.basics.basics.len();
    let q = g.dim() - derived;
    Verdict::check(
        r == q,
        format!("r = {r} = {} - {derived}", g.dim()),
        format!("r = {r} but dim g - dim [g,g] = {q}"),
    )
}

pub fn check_component_identity(inp: &CheckInput) -> Verdict {
    let r = inp.basics.basics.len();
    let a = inp.additive.dim_a1;
    Verdict::check(
        r + a == inp.dim_h,
        format!(
            "r = {r} = {} - {a} (additive bound {})",
            inp.dim_h, inp.additive.bound
        ),
        format!(
            "r = {r}, dim H = {}, dim A1 = {a} (additive bound {})",
            inp.dim_h, inp.additive.bound
        ),
    )
}

pub fn check_no_additive(inp: &CheckInput) -> Verdict {
    if !inp.lfd {
        return Verdict::skipped(NOT_LFD);
    }
    let b = inp.additive.bound;
    match inp.additive.basis.first() {
        None => Verdict::pass(format!(
            "no additive invariant with denominator degree <= {b}"
        )),
        Some(a) => Verdict::fail(format!("{} over exponents {:?}", a.h1, a.k)),
    }
}

fn check_euler(inp: &CheckInput) -> (Verdict, Option<EulerDecomposition>) {
    if !inp.lfd {
        return (Verdict::skipped(NOT_LFD), None);
    }
    if !inp.basics.complete {
        return (
            Verdict::skipped("basic invariants not certified complete"),
            None,
        );
    }
    match euler_decomposition(inp.p, &inp.basics.basics) {
        Err(e) => (Verdict::fail(e.to_string()), None),
        Ok(e) => {
            let degrees: Vec<u32> = inp.basics.basics.iter().map(|b| b.degree()).collect();
            let v = Verdict::check(
                e.holds(&degrees),
                format!("lambda(I) = degrees {degrees:?}, residual in [g,g]"),
                format!(
                    "lambda(I) = {:?}, degrees {degrees:?}, residual in [g,g]: {}",
                    e.lambda_at_identity
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>(),
                    e.residual_in_derived
                ),
            );
            (v, Some(e))
        }
    }
}

fn check_vanishing(inp: &CheckInput) -> Result<(Verdict, Vec<ComponentIsotropy>), VerifyError> {
    let g = inp.p.algebra();
    let basics = &inp.basics.basics;
    let r = basics.len();
    if r == 0 {
        return Ok((Verdict::skipped("no hypersurface components"), Vec::new()));
    }
    let mut points: Vec<Option<Vec<Rational>>> = vec![None; r];
    for v in inp.component_points {
        match classify_point(g, basics, v)? {
            Ok(i) => points[i] = Some(v.clone()),
            Err(why) => {
                let s: Vec<String> = v.iter().map(ToString::to_string).collect();
                return Ok((
                    Verdict::fail(format!("point ({}) rejected: {why}", s.join(", "))),
                    Vec::new(),
                ));
            }
        }
    }
    let mut out = Vec::new();
    let mut missing = Vec::new();
    let mut failures = Vec::new();
    for (i, slot) in points.iter_mut().enumerate().take(r) {
        let v = match slot.take() {
            Some(v) => v,
            None => match search_component_point(g, basics, i, inp.seed, 256)? {
                Some(v) => v,
                None => {
                    missing.push(i);
                    continue;
                }
            },
        };
        let c = component_isotropy(g, basics, i, &v)?;
        let mut ok = c.others_vanish;
        if inp.lfd {
            ok &= c.isotropy_dim == 1 && c.own_nonzero;
        }
        if !ok {
            failures.push(format!(
                "component {i} at ({}): dim {}, others vanish {}, own nonzero {}",
                c.point.join(", "),
                c.isotropy_dim,
                c.others_vanish,
                c.own_nonzero
            ));
        }
        out.push(c);
    }
    let v = if !failures.is_empty() {
        Verdict::fail(failures.join("; "))
    } else if !missing.is_empty() {
        Verdict::skipped(format!(
            "no validated point found on components {missing:?}"
        ))
    } else if inp.lfd {
        Verdict::pass(
            "isotropy of each component is 1-dimensional, own character nonzero, others vanish",
        )
    } else {
        Verdict::pass("other characters vanish on each component isotropy")
    };
    Ok((v, out))
}

fn derived_dim(inp: &CheckInput) -> Result<usize, VerifyError> {
    Ok(inp.p.algebra().derived_coordinates()?.dim())
}

pub fn check_abelian(inp: &CheckInput) -> Result<Verdict, VerifyError> {
    if derived_dim(inp)? != 0 {
        return Ok(Verdict::skipped("algebra is not abelian"));
    }
    if !inp.lfd {
        return Ok(Verdict::skipped(NOT_LFD));
    }
    let n = inp.p.n();
    let r = inp.basics.basics.len();
    let degs: Vec<u32> = inp.basics.basics.iter().map(|b| b.degree()).collect();
    Ok(Verdict::check(
        r == n && degs.iter().all(|&d| d == 1),
        format!("r = n = {n}, all basic invariants linear"),
        format!("r = {r}, n = {n}, degrees {degs:?}"),
    ))
}

pub fn check_solvable(inp: &CheckInput) -> Result<Verdict, VerifyError> {
    let g = inp.p.algebra();
    if !g.basis().iter().all(|x| x.matrix().is_lower_triangular()) {
        return Ok(Verdict::skipped("basis is not lower triangular as given"));
    }
    if !inp.lfd {
        return Ok(Verdict::skipped(NOT_LFD));
    }
    let n = g.n();
    let diags: Vec<Vec<Rational>> = g
        .basis()
        .iter()
        .map(|x| (0..n).map(|i| x.matrix()[(i, i)].clone()).collect())
        .collect();
    let rank = rref(&RatMatrix::from_rows(diags, n)?).1;
    let r = inp.basics.basics.len();
    Ok(Verdict::check(
        r == rank,
        format!("r = {r} = rank of the diagonal projection"),
        format!("r = {r}, diagonal projection rank {rank}"),
    ))
}

/// No components forces dim H = 0 and no additive invariants; dim H ≤ 1
/// forces no additive invariants and r = dim H.
pub fn check_small_quotient(inp: &CheckInput) -> Verdict {
    let r = inp.basics.basics.len();
    let a = inp.additive.dim_a1;
    let h = inp.dim_h;
    if r == 0 {
        Verdict::check(
            h == 0 && a == 0,
            "no components, dim H = 0, no additive invariants",
            format!("no components found up to the bound but dim H = {h}, dim A1 = {a}; inspect"),
        )
    } else if h <= 1 {
        Verdict::check(
            a == 0 && r == h,
            format!("dim H = {h} = r, no additive invariants"),
            format!("dim H = {h}, r = {r}, dim A1 = {a}"),
        )
    } else {
        Verdict::skipped(format!("dim H = {h} > 1 and r > 0"))
    }
}

pub fn check_dphi_vanishing(inp: &CheckInput) -> Result<Verdict, VerifyError> {
    if inp.additive.basis.is_empty() {
        return Ok(Verdict::skipped("no additive invariants"));
    }
    let g = inp.p.algebra();
    let iso = isotropy_subalgebra(g, inp.p.generic_point())?;
    let kill = g.derived_coordinates()?.sum(&iso)?;
    for (t, a) in inp.additive.basis.iter().enumerate() {
        for z in kill.basis_vectors() {
            let s: Rational = z.iter().zip(&a.dphi).map(|(x, y)| x * y).sum();
            if !s.is_zero() {
                return Ok(Verdict::fail(format!(
                    "additive invariant {t}: dphi nonzero on [g,g] + g_v0"
                )));
            }
        }
    }
    Ok(Verdict::pass(format!(
        "all dphi vanish on [g,g] + g_v0 (dim {})",
        kill.dim()
    )))
}

/// Rank of the Jacobian of (f₁, …, f_r, h⁽¹⁾, …, h⁽ˢ⁾) at the generic point.
pub fn jacobian_rank(inp: &CheckInput) -> Result<(usize, usize), VerifyError> {
    let v = inp.p.generic_point();
    let n = inp.p.n();
    let basics = &inp.basics.basics;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for b in basics {
        rows.push(
            (0..n)
                .map(|i| b.f.partial_derivative(i)?.evaluate(v))
                .collect::<Result<_, _>>()?,
        );
    }
    for a in &inp.additive.basis {
        let g = a.denominator(basics);
        let gv = g.evaluate(v)?;
        let hv = a.h1.evaluate(v)?;
        let mut row = Vec::with_capacity(n);
        for i in 0..n {
            let dh = a.h1.partial_derivative(i)?.evaluate(v)?;
            let dg = g.partial_derivative(i)?.evaluate(v)?;
            row.push((&gv * dh - &hv * dg) / (&gv * &gv));
        }
        rows.push(row);
    }
    let want = rows.len();
    if want == 0 {
        return Ok((0, 0));
    }
    Ok((rref(&RatMatrix::from_rows(rows, n)?).1, want))
}

pub fn check_jacobian(inp: &CheckInput) -> Result<Verdict, VerifyError> {
    let (rank, want) = jacobian_rank(inp)?;
    if want == 0 {
        return Ok(Verdict::skipped("no invariants"));
    }
    Ok(Verdict::check(
        rank == want,
        format!("rank {rank} = r + s at the generic point"),
        format!("rank {rank} < r + s = {want} at the generic point"),
    ))
}

pub fn run_checks(inp: &CheckInput) -> TheoremVerdicts {
    let b = inp.basics;
    let basics_certificate = if !b.anomalies.is_empty() {
        Verdict::fail(format!(
            "{} joint eigenspaces of dimension > 1",
            b.anomalies.len()
        ))
    } else if b.complete {
        Verdict::pass(format!(
            "reference minor = c * product of basics, scanned to degree {}",
            b.max_degree_scanned
        ))
    } else {
        Verdict::fail(format!(
            "cofactor {} left after degree {}",
            b.cofactor, b.max_degree_scanned
        ))
    };
    let (euler, euler_decomposition) = check_euler(inp);
    let (vanishing, component_isotropy) = match check_vanishing(inp) {
        Ok(x) => x,
        Err(e) => (Verdict::fail(format!("error: {e}")), Vec::new()),
    };
    TheoremVerdicts {
        basics_certificate,
        component_count: check_component_count(inp),
        component_identity: check_component_identity(inp),
        no_additive: check_no_additive(inp),
        euler,
        vanishing,
        abelian: Verdict::from_result(check_abelian(inp)),
        solvable: Verdict::from_result(check_solvable(inp)),
        small_quotient: check_small_quotient(inp),
        dphi_vanishing: Verdict::from_result(check_dphi_vanishing(inp)),
        jacobian_rank: Verdict::from_result(check_jacobian(inp)),
        euler_decomposition,
        component_isotropy,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{
        additive_invariants, basic_relative_invariants, dim_h, AdditiveOptions,
    };
    use crate::liealg::LieAlgebraVF;
    use crate::ratpoly::rat;

    fn run(p: &PVSpace, lfd: bool, points: &[Vec<Rational>]) -> TheoremVerdicts {
        let b = basic_relative_invariants(p, p.n() as u32).unwrap();
        let a = additive_invariants(p, &b.basics, &AdditiveOptions::default()).unwrap();
        let h = dim_h(p).unwrap();
        run_checks(&CheckInput {
            p,
            lfd,
            basics: &b,
            additive: &a,
            dim_h: h,
            component_points: points,
            seed: 1,
        })
    }

    #[test]
    fn aac_all_pass() {
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
        let pts = vec![vec![rat(0), rat(1), rat(0)], vec![rat(1), rat(0), rat(0)]];
        let v = run(&p, true, &pts);
        for (name, verdict) in v.all() {
            assert!(!verdict.is_fail(), "{name}: {verdict:?}");
        }
        assert!(v.component_count.is_pass() && v.euler.is_pass() && v.vanishing.is_pass());
        assert!(v.solvable.is_pass());
        assert_eq!(v.abelian, Verdict::skipped("algebra is not abelian"));
    }

    #[test]
    fn torus_abelian() {
        let g = LieAlgebraVF::new(3, (0..3).map(|i| RatMatrix::unit(3, i, i)).collect()).unwrap();
        let p = PVSpace::new(g, vec![rat(1); 3]).unwrap();
        let v = run(&p, true, &[]);
        assert!(v.abelian.is_pass());
        assert!(v.vanishing.is_pass());
        assert!(!v.any_fail());
    }

    #[test]
    fn two_additive_not_lfd() {
        let g = LieAlgebraVF::new(
            3,
            vec![
                RatMatrix::identity(3),
                RatMatrix::unit(3, 1, 0),
                RatMatrix::unit(3, 2, 0),
            ],
        )
        .unwrap();
        let p = PVSpace::discover(g, 3, 64).unwrap();
        let v = run(&p, false, &[]);
        assert_eq!(v.no_additive, Verdict::skipped(NOT_LFD));
        assert!(v.component_identity.is_pass());
        assert!(v.dphi_vanishing.is_pass());
        assert!(v.jacobian_rank.is_pass());
        assert!(!v.any_fail());
    }
}
