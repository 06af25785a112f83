use num_traits::{One, Zero};
use rayon::prelude::*;

use super::blocks::derived_kernel_blocks;
use super::{AlgebraData, DegreeSpace, InvariantError, SemiInvariant};
use crate::liealg::LieAlgebraVF;
use crate::linalg::{densify, kernel_of_columns, solve, sparsify, Echelon, RatMatrix, SparseVec};
use crate::pvscore::PVSpace;
use crate::ratpoly::{Homogeneity, MultiPoly, Rational};

/// An additive relative invariant h₁ / Π fᵢ^{kᵢ}, with dΦ on the basis of 𝔤.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveInvariant {
    pub h1: MultiPoly,
    pub k: Vec<u32>,
    pub dphi: Vec<Rational>,
}

fn product(n: usize, basics: &[SemiInvariant], k: &[u32]) -> MultiPoly {
    let mut g = MultiPoly::one(n);
    for (b, &e) in basics.iter().zip(k) {
        if e > 0 {
            g = &g * &b.f.pow(e);
        }
    }
    g
}

fn combined_lambda(dim: usize, basics: &[SemiInvariant], k: &[u32]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (b, &e) in basics.iter().zip(k) {
        let e = Rational::from_integer(e.into());
        for (o, l) in out.iter_mut().zip(&b.lambda) {
            *o += &e * l;
        }
    }
    out
}

/// Divides out basic invariants common to numerator and denominator.
fn lowest_terms(
    mut h: MultiPoly,
    mut k: Vec<u32>,
    basics: &[SemiInvariant],
) -> Result<(MultiPoly, Vec<u32>), InvariantError> {
    if h.is_zero() {
        return Ok((h, vec![0; k.len()]));
    }
    for (i, b) in basics.iter().enumerate() {
        while k[i] > 0 {
            match h.exact_divide(&b.f)? {
                Some(q) => {
                    h = q;
                    k[i] -= 1;
                }
                None => break,
            }
        }
    }
    Ok((h, k))
}

impl AdditiveInvariant {
    pub fn denominator(&self, basics: &[SemiInvariant]) -> MultiPoly {
        product(self.h1.nvars(), basics, &self.k)
    }

    /// Builds the invariant from a fraction, reading dΦ off the identity
    /// ξ_X h₁ − λ′(X)·h₁ = dΦ(X)·g. `None` if no such covector exists.
    pub fn from_fraction(
        g: &LieAlgebraVF,
        basics: &[SemiInvariant],
        h1: MultiPoly,
        k: Vec<u32>,
    ) -> Result<Option<Self>, InvariantError> {
        if k.len() != basics.len() {
            return Ok(None);
        }
        let den = product(g.n(), basics, &k);
        let lam = combined_lambda(g.dim(), basics, &k);
        let (lm, lc) = den.leading_term().expect("product of nonzero forms");
        let mut dphi = Vec::with_capacity(g.dim());
        for (x, l) in g.basis().iter().zip(&lam) {
            let mut r = x.apply(&h1)?;
            r.add_scaled(&h1, &-l);
            let c = r.coefficient(lm) / lc;
            if r != den.scale(&c) {
                return Ok(None);
            }
            dphi.push(c);
        }
        let (h1, k) = lowest_terms(h1, k, basics)?;
        Ok(Some(AdditiveInvariant { h1, k, dphi }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AdditiveOptions {
    /// Largest Σ kᵢ·deg fᵢ searched; `None` means n.
    pub max_denominator_degree: Option<u32>,
    /// Stop once dim 𝒜₁ reaches dim H − r.
    pub early_stop: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveResult {
    /// Invariants whose dΦ covectors form a basis of the span found.
    pub basis: Vec<AdditiveInvariant>,
    /// Denominator degree bound actually used.
    pub bound: u32,
    pub dim_a1: usize,
}

/// All exponent vectors with 0 < Σ kᵢ dᵢ ≤ bound, ordered by Σ kᵢ dᵢ then
/// lexicographically.
fn exponent_vectors(degrees: &[u32], bound: u32) -> Vec<Vec<u32>> {
    fn rec(degrees: &[u32], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == degrees.len() {
            out.push(cur.clone());
            return;
        }
        let d = degrees[cur.len()].max(1);
        for e in 0..=left / d {
            cur.push(e);
            rec(degrees, left - e * d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(degrees, bound, &mut Vec::new(), &mut out);
    let deg = |k: &Vec<u32>| -> u32 { k.iter().zip(degrees).map(|(a, b)| a * b).sum() };
    out.retain(|k| deg(k) > 0);
    out.sort_by(|a, b| deg(a).cmp(&deg(b)).then_with(|| a.cmp(b)));
    out
}

struct Candidate {
    k: Vec<u32>,
    g: MultiPoly,
    /// Basis of the solution space as (h, dΦ).
    sols: Vec<(MultiPoly, Vec<Rational>)>,
}

/// Matrix taking dΦ on the coset representatives to dΦ on the basis.
fn rep_to_basis(data: &AlgebraData) -> Result<RatMatrix, InvariantError> {
    let m = data.dim;
    let mut cols: Vec<Vec<Rational>> = data.reps.clone();
    cols.extend(data.derived.basis_vectors());
    let a = RatMatrix::from_rows(cols, m)?.transpose();
    let q = data.reps.len();
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let e: Vec<Rational> = (0..m)
            .map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let x = solve(&a, &e)?
            .ok_or_else(|| InvariantError::Internal("reps and [g,g] do not span g".into()))?;
        rows.push(x[..q].to_vec());
    }
    Ok(RatMatrix::from_rows(rows, q)?)
}

fn solve_k(
    data: &AlgebraData,
    basics: &[SemiInvariant],
    tmap: &RatMatrix,
    k: &[u32],
) -> Result<Candidate, InvariantError> {
    let n = data.n;
    let g = product(n, basics, k);
    let lam = combined_lambda(data.dim, basics, k);
    let degree = g.total_degree().unwrap_or(0);
    let space = DegreeSpace::new(n, degree);
    let (lm, _) = g.leading_term().expect("nonzero");
    let target = data.weight(lm.exponents());
    let blocks = derived_kernel_blocks(data, &space, Some(&target));
    let err = || InvariantError::Internal(format!("denominator {g} outside its own block"));
    let block = blocks.first().ok_or_else(err)?;
    let gs = space.to_sparse(&g).ok_or_else(err)?;
    let gc = block.coords(&gs);
    if block.expand(&gc) != gs {
        return Err(err());
    }
    let s = block.dim();
    let q = data.reps.len();
    let ops: Vec<_> = data.rep_mats.iter().map(|m| block.op(&space, m)).collect();
    let lam_rep: Vec<Rational> = data
        .reps
        .iter()
        .map(|r| r.iter().zip(&lam).map(|(a, b)| a * b).sum())
        .collect();
    let mut cols: Vec<SparseVec> = Vec::with_capacity(s + q);
    for kk in 0..s {
        let mut col = Vec::new();
        for (j, op) in ops.iter().enumerate() {
            let mut v: std::collections::BTreeMap<usize, Rational> =
                op.columns()[kk].iter().cloned().collect();
            *v.entry(kk).or_insert_with(Rational::zero) -= &lam_rep[j];
            col.extend(
                v.into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (j * s + i, c)),
            );
        }
        cols.push(col);
    }
    for j in 0..q {
        cols.push(gc.iter().map(|(i, c)| (j * s + i, -c)).collect());
    }
    let mut sols = Vec::new();
    for v in kernel_of_columns(&cols, q * s) {
        let hc: SparseVec = v.iter().filter(|(i, _)| *i < s).cloned().collect();
        let mut c = vec![Rational::zero(); q];
        for (i, x) in v.iter().filter(|(i, _)| *i >= s) {
            c[i - s] = x.clone();
        }
        let h = space.to_poly(&block.expand(&hc));
        let dphi = tmap.mul_vec(&c)?;
        sols.push((h, dphi));
    }
    Ok(Candidate {
        k: k.to_vec(),
        g,
        sols,
    })
}

/// dim H = dim 𝔤 − dim([𝔤,𝔤] + 𝔤_{v₀}).
pub fn dim_h(p: &PVSpace) -> Result<usize, InvariantError> {
    let g = p.algebra();
    let iso = crate::liealg::isotropy_subalgebra(g, p.generic_point())?;
    let derived = g.derived_coordinates()?;
    Ok(g.dim() - iso.sum(&derived)?.dim())
}

/// Additive relative invariants with denominators Π fᵢ^{kᵢ} of degree at
/// most the bound.
///
/// A numerator h of degree D solves ξ_X h = λ′(X)·h + dΦ(X)·g. On [𝔤,𝔤]
/// both λ′ and dΦ vanish, so h lies in the joint kernel of [𝔤,𝔤]; on the
/// diagonal part h must be a weight vector of the weight of g (and dΦ
/// vanishes there). The remaining equations are imposed for the coset
/// representatives only. Solutions with dΦ = 0 are multiples of g, so the
/// dΦ values of the solution space span a space of dimension dim W − 1.
pub fn additive_invariants(
    p: &PVSpace,
    basics: &[SemiInvariant],
    options: &AdditiveOptions,
) -> Result<AdditiveResult, InvariantError> {
    let g = p.algebra();
    let n = g.n();
    let bound = options.max_denominator_degree.unwrap_or(n as u32);
    let data = AlgebraData::new(g)?;
    let tmap = rep_to_basis(&data)?;
    let degrees: Vec<u32> = basics.iter().map(SemiInvariant::degree).collect();
    let ks = exponent_vectors(&degrees, bound);
    let target = if options.early_stop {
        Some(dim_h(p)?.saturating_sub(basics.len()))
    } else {
        None
    };

    let mut acc = Echelon::new();
    let mut basis = Vec::new();
    let mut take = |cand: Candidate| -> Result<bool, InvariantError> {
        let mut local = Echelon::new();
        for (_, d) in &cand.sols {
            local.insert(&sparsify(d));
        }
        for row in local.into_rref() {
            if acc.insert(&row).is_none() {
                continue;
            }
            let dphi = densify(&row, g.dim());
            let cols: Vec<Vec<Rational>> = cand.sols.iter().map(|(_, d)| d.clone()).collect();
            let m = RatMatrix::from_rows(cols, g.dim())?.transpose();
            let t = solve(&m, &dphi)?
                .ok_or_else(|| InvariantError::Internal("dΦ row not in span".into()))?;
            let mut h = MultiPoly::zero(n);
            for (ti, (hi, _)) in t.iter().zip(&cand.sols) {
                h.add_scaled(hi, ti);
            }
            let (lm, lc) = cand.g.leading_term().expect("nonzero");
            let shift = h.coefficient(lm) / lc;
            h.add_scaled(&cand.g, &-shift);
            let (h1, k) = lowest_terms(h, cand.k.clone(), basics)?;
            let a = AdditiveInvariant { h1, k, dphi };
            if let Err(why) = check_additive(g, basics, &a) {
                return Err(InvariantError::Internal(format!(
                    "solver output fails verification: {why}"
                )));
            }
            basis.push(a);
        }
        Ok(target.is_some_and(|t| acc.rank() >= t))
    };

    if options.early_stop {
        for k in &ks {
            if take(solve_k(&data, basics, &tmap, k)?)? {
                break;
            }
        }
    } else {
        let cands: Vec<Candidate> = ks
            .par_iter()
            .map(|k| solve_k(&data, basics, &tmap, k))
            .collect::<Result<_, _>>()?;
        for c in cands {
            take(c)?;
        }
    }
    let dim_a1 = basis.len();
    Ok(AdditiveResult {
        basis,
        bound,
        dim_a1,
    })
}

/// Checks the defining identity for every basis element, homogeneity of
/// degree 0 and lowest terms. A constant (h₁ a multiple of the
/// denominator, dΦ = 0) is accepted as the trivial invariant.
pub fn check_additive(
    g: &LieAlgebraVF,
    basics: &[SemiInvariant],
    a: &AdditiveInvariant,
) -> Result<(), String> {
    if a.k.len() != basics.len() {
        return Err(format!(
            "{} exponents for {} basic invariants",
            a.k.len(),
            basics.len()
        ));
    }
    if a.dphi.len() != g.dim() || a.h1.nvars() != g.n() {
        return Err("size mismatch".into());
    }
    let den = a.denominator(basics);
    let d = den.total_degree().unwrap_or(0);
    match a.h1.homogeneous_degree() {
        Homogeneity::Zero => {}
        Homogeneity::Degree(e) if e == d => {}
        Homogeneity::Degree(e) => {
            return Err(format!("numerator degree {e} != denominator degree {d}"))
        }
        Homogeneity::Inhomogeneous => return Err("numerator is not homogeneous".into()),
    }
    let lam = combined_lambda(g.dim(), basics, &a.k);
    for (j, x) in g.basis().iter().enumerate() {
        let mut r = x.apply(&a.h1).map_err(|e| e.to_string())?;
        r.add_scaled(&a.h1, &-&lam[j]);
        r.add_scaled(&den, &-&a.dphi[j]);
        if !r.is_zero() {
            return Err(format!("identity fails on basis element {j}"));
        }
    }
    let trivial = a.h1.is_zero()
        || a.h1
            .exact_divide(&den)
            .ok()
            .flatten()
            .is_some_and(|q| q.is_constant());
    if !trivial {
        for (i, b) in basics.iter().enumerate() {
            if a.k[i] > 0 && a.h1.exact_divide(&b.f).ok().flatten().is_some() {
                return Err(format!(
                    "not in lowest terms: basic invariant {i} divides the numerator"
                ));
            }
        }
    }
    Ok(())
}

pub fn verify_additive(p: &PVSpace, basics: &[SemiInvariant], a: &AdditiveInvariant) -> bool {
    check_additive(p.algebra(), basics, a).is_ok()
}

/// Outcome of [`partial_fraction_split`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Split {
    /// One side of the split carries no denominator factor.
    Vacuous,
    Parts(AdditiveInvariant, AdditiveInvariant),
    /// h₁ is not of the form α·g₂ + β·g₁.
    NoSplit,
}

/// Tries h₁/(g₁g₂) = α/g₁ + β/g₂ where g₁ collects the basic invariants
/// in `first` and g₂ those in `second`.
pub fn partial_fraction_split(
    g: &LieAlgebraVF,
    basics: &[SemiInvariant],
    a: &AdditiveInvariant,
    first: &[usize],
    second: &[usize],
) -> Result<Split, InvariantError> {
    let n = g.n();
    let support: Vec<usize> = (0..a.k.len()).filter(|&i| a.k[i] > 0).collect();
    let mut both: Vec<usize> = first.iter().chain(second).copied().collect();
    both.sort_unstable();
    let len = both.len();
    both.dedup();
    if both.len() != len {
        return Err(InvariantError::BadSplit(
            "the two parts share a basic invariant".into(),
        ));
    }
    if both != support {
        return Err(InvariantError::BadSplit(format!(
            "parts {both:?} do not match the denominator support {support:?}"
        )));
    }
    if first.is_empty() || second.is_empty() {
        return Ok(Split::Vacuous);
    }
    let part = |idx: &[usize]| -> Vec<u32> {
        (0..a.k.len())
            .map(|i| if idx.contains(&i) { a.k[i] } else { 0 })
            .collect()
    };
    let (k1, k2) = (part(first), part(second));
    let (g1, g2) = (product(n, basics, &k1), product(n, basics, &k2));
    let d1 = g1.total_degree().unwrap_or(0);
    let d2 = g2.total_degree().unwrap_or(0);
    let space = DegreeSpace::new(n, d1 + d2);
    let s1 = DegreeSpace::new(n, d1);
    let s2 = DegreeSpace::new(n, d2);
    let Some(target) = space.to_sparse(&a.h1) else {
        return Ok(Split::NoSplit);
    };
    let mono =
        |s: &DegreeSpace, i: usize| MultiPoly::monomial(n, s.monomial(i).clone(), Rational::one());
    let mut cols: Vec<SparseVec> = Vec::with_capacity(s1.len() + s2.len() + 1);
    for i in 0..s1.len() {
        cols.push(space.to_sparse(&(&mono(&s1, i) * &g2)).expect("degree"));
    }
    for i in 0..s2.len() {
        cols.push(space.to_sparse(&(&mono(&s2, i) * &g1)).expect("degree"));
    }
    cols.push(target.iter().map(|(i, c)| (*i, -c)).collect());
    let last = cols.len() - 1;
    let Some(v) = kernel_of_columns(&cols, space.len())
        .into_iter()
        .find(|v| v.iter().any(|(i, _)| *i == last))
    else {
        return Ok(Split::NoSplit);
    };
    let scale = v.iter().find(|(i, _)| *i == last).expect("found").1.recip();
    let mut alpha = MultiPoly::zero(n);
    let mut beta = MultiPoly::zero(n);
    for (i, c) in &v {
        let c = c * &scale;
        if *i < s1.len() {
            alpha.add_scaled(&mono(&s1, *i), &c);
        } else if *i < last {
            beta.add_scaled(&mono(&s2, i - s1.len()), &c);
        }
    }
    // α is determined up to adding t·g₁ (with β − t·g₂)
    let (lm, lc) = g1.leading_term().expect("nonzero");
    let t = alpha.coefficient(lm) / lc;
    alpha.add_scaled(&g1, &-&t);
    beta.add_scaled(&g2, &t);
    let mk = |h: MultiPoly, k: Vec<u32>| -> Result<AdditiveInvariant, InvariantError> {
        let inv = AdditiveInvariant::from_fraction(g, basics, h, k)?
            .ok_or_else(|| InvariantError::Internal("split part is not additive".into()))?;
        check_additive(g, basics, &inv).map_err(InvariantError::Internal)?;
        Ok(inv)
    };
    Ok(Split::Parts(mk(alpha, k1)?, mk(beta, k2)?))
}
