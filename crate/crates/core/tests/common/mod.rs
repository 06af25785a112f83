//! Random instances and independent oracles shared by the property suite
//! and the acceptance run.
#![allow(dead_code)]

use std::collections::BTreeSet;

use pvsinv::invariants::semiinvariants_of_degree;
use pvsinv::liealg::{vf_bracket, LieAlgebraVF, LinVectorField};
use pvsinv::linalg::{det_rat, kernel, rational_eigenvalues, RatMatrix, Subspace};
use pvsinv::pvscore::{is_reduced, ReducedVerdict};
use pvsinv::ratpoly::{monomials_of_degree, rat, MultiPoly, Rational};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(r: &mut impl Rng, n: usize, bound: i64) -> RatMatrix {
    let data = (0..n * n)
        .map(|_| rat(r.gen_range(-bound..=bound)))
        .collect();
    RatMatrix::new(n, n, data).unwrap()
}

/// A homogeneous form of degree d with a few random integer terms.
pub fn random_form(r: &mut impl Rng, n: usize, d: u32) -> MultiPoly {
    let mons = monomials_of_degree(n, d);
    let k = r.gen_range(1..=mons.len().min(5));
    let picked: Vec<_> = mons.choose_multiple(r, k).cloned().collect();
    let f = MultiPoly::from_terms(n, picked.into_iter().map(|m| (m, rat(r.gen_range(-5..=5)))));
    if f.is_zero() {
        MultiPoly::monomial(n, mons[0].clone(), rat(1))
    } else {
        f
    }
}

/// ξ_C f against ξ_A ξ_B f − ξ_B ξ_A f for C the bracket of A and B.
pub fn bracket_case(r: &mut impl Rng) -> Result<(), String> {
    let n = r.gen_range(1..=4);
    let a = LinVectorField::new(random_matrix(r, n, 3)).unwrap();
    let b = LinVectorField::new(random_matrix(r, n, 3)).unwrap();
    let d = r.gen_range(0..=3);
    let f = random_form(r, n, d);
    let c = vf_bracket(&a, &b).unwrap();
    let lhs = c.apply(&f).unwrap();
    let rhs = &a.apply(&b.apply(&f).unwrap()).unwrap() - &b.apply(&a.apply(&f).unwrap()).unwrap();
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!(
            "A = {:?}, B = {:?}, f = {f}",
            a.matrix(),
            b.matrix()
        ))
    }
}

/// ξ_I f = deg(f)·f.
pub fn euler_case(r: &mut impl Rng) -> Result<(), String> {
    let n = r.gen_range(1..=4);
    let d = r.gen_range(0..=5);
    let f = random_form(r, n, d);
    let e = LinVectorField::new(RatMatrix::identity(n)).unwrap();
    if e.apply(&f).unwrap() == f.scale(&rat(d.into())) {
        Ok(())
    } else {
        Err(format!("f = {f}"))
    }
}

fn random_vectors(r: &mut impl Rng, ambient: usize, count: usize) -> Vec<Vec<Rational>> {
    (0..count)
        .map(|_| (0..ambient).map(|_| rat(r.gen_range(-2..=2))).collect())
        .collect()
}

/// dim(U + W) + dim(U ∩ W) = dim U + dim W, with shared vectors mixed in
/// so that intersections are often nontrivial.
pub fn subspace_case(r: &mut impl Rng) -> Result<(), String> {
    let ambient = r.gen_range(1..=6);
    let counts = [r.gen_range(0..=2), r.gen_range(0..=3), r.gen_range(0..=3)];
    let shared = random_vectors(r, ambient, counts[0]);
    let mut a = random_vectors(r, ambient, counts[1]);
    let mut b = random_vectors(r, ambient, counts[2]);
    a.extend(shared.iter().cloned());
    b.extend(shared);
    let u = Subspace::from_vectors(ambient, a).unwrap();
    let w = Subspace::from_vectors(ambient, b).unwrap();
    let s = u.sum(&w).unwrap();
    let i = u.intersect(&w).unwrap();
    let ok = s.dim() + i.dim() == u.dim() + w.dim()
        && i.is_subspace_of(&u).unwrap()
        && i.is_subspace_of(&w).unwrap()
        && u.is_subspace_of(&s).unwrap()
        && w.is_subspace_of(&s).unwrap();
    if ok {
        Ok(())
    } else {
        Err(format!(
            "dims U {} W {} sum {} meet {}",
            u.dim(),
            w.dim(),
            s.dim(),
            i.dim()
        ))
    }
}

/// Diagonal matrices plus elementary matrices on a set of strictly lower
/// positions closed under composition, or gl2 on the first two
/// coordinates; then conjugated by a random invertible matrix.
pub fn random_closed_algebra(r: &mut impl Rng) -> LieAlgebraVF {
    let n = r.gen_range(2..=3);
    let mut gens = Vec::new();
    if n >= 2 && r.gen_bool(0.25) {
        for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            gens.push(RatMatrix::unit(n, i, j));
        }
        if n == 3 && r.gen_bool(0.5) {
            gens.push(RatMatrix::unit(n, 2, 2));
        }
    } else {
        if r.gen_bool(0.5) {
            gens.push(RatMatrix::identity(n));
        }
        for _ in 0..r.gen_range(0..=n) {
            let d: Vec<Rational> = (0..n).map(|_| rat(r.gen_range(-2..=2))).collect();
            gens.push(RatMatrix::diag(&d));
        }
        let mut pos: BTreeSet<(usize, usize)> = BTreeSet::new();
        for a in 0..n {
            for b in 0..a {
                if r.gen_bool(0.5) {
                    pos.insert((a, b));
                }
            }
        }
        loop {
            let extra: Vec<(usize, usize)> = pos
                .iter()
                .flat_map(|&(a, b)| {
                    pos.iter()
                        .filter(move |&&(c, _)| c == b)
                        .map(move |&(_, e)| (a, e))
                })
                .filter(|p| !pos.contains(p))
                .collect();
            if extra.is_empty() {
                break;
            }
            pos.extend(extra);
        }
        gens.extend(pos.into_iter().map(|(a, b)| RatMatrix::unit(n, a, b)));
    }
    let p = loop {
        let p = random_matrix(r, n, 2);
        if !num_traits::Zero::is_zero(&det_rat(&p).unwrap()) {
            break p;
        }
    };
    let pinv = inverse(&p);
    let mut basis: Vec<RatMatrix> = Vec::new();
    let mut span = Subspace::zero(n * n);
    for m in gens {
        let c = p.mul(&m).unwrap().mul(&pinv).unwrap();
        let v = c.as_slice().to_vec();
        if v.iter().all(num_traits::Zero::is_zero) || span.contains(&v).unwrap() {
            continue;
        }
        span = span
            .sum(&Subspace::from_vectors(n * n, vec![v]).unwrap())
            .unwrap();
        basis.push(c);
    }
    if basis.is_empty() {
        basis.push(RatMatrix::identity(n));
    }
    LieAlgebraVF::new_closed(n, basis).expect("constructed algebra is closed")
}

fn inverse(p: &RatMatrix) -> RatMatrix {
    let n = p.rows();
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let e: Vec<Rational> = (0..n).map(|i| rat((i == j) as i64)).collect();
            pvsinv::linalg::solve(p, &e).unwrap().unwrap()
        })
        .collect();
    RatMatrix::from_rows(cols, n).unwrap().transpose()
}

/// Matrix of ξ_A on degree-d forms in the `monomials_of_degree` order,
/// built by applying the field to each monomial.
fn action_matrix(a: &LinVectorField, n: usize, d: u32) -> RatMatrix {
    let mons = monomials_of_degree(n, d);
    let k = mons.len();
    let mut m = vec![rat(0); k * k];
    for (c, mon) in mons.iter().enumerate() {
        let img = a
            .apply(&MultiPoly::monomial(n, mon.clone(), rat(1)))
            .unwrap();
        for (row, target) in mons.iter().enumerate() {
            m[row * k + c] = img.coefficient(target);
        }
    }
    RatMatrix::new(k, k, m).unwrap()
}

fn coeff_vector(f: &MultiPoly, n: usize, d: u32) -> Vec<Rational> {
    monomials_of_degree(n, d)
        .iter()
        .map(|m| f.coefficient(m))
        .collect()
}

/// Joint eigenspaces by enumerating eigenvalue tuples of dense action
/// matrices and intersecting the eigenspaces.
pub fn brute_force_semiinvariants(g: &LieAlgebraVF, d: u32) -> Vec<(Vec<Rational>, Subspace)> {
    let n = g.n();
    let mats: Vec<RatMatrix> = g.basis().iter().map(|a| action_matrix(a, n, d)).collect();
    let k = monomials_of_degree(n, d).len();
    let mut out = Vec::new();
    fn go(
        j: usize,
        mats: &[RatMatrix],
        space: Subspace,
        lambda: &mut Vec<Rational>,
        out: &mut Vec<(Vec<Rational>, Subspace)>,
    ) {
        if space.dim() == 0 {
            return;
        }
        if j == mats.len() {
            out.push((lambda.clone(), space));
            return;
        }
        let k = mats[j].rows();
        for (l, _) in rational_eigenvalues(&mats[j]).unwrap() {
            let shifted = mats[j].sub(&RatMatrix::identity(k).scale(&l)).unwrap();
            let s = space.intersect(&kernel(&shifted)).unwrap();
            lambda.push(l);
            go(j + 1, mats, s, lambda, out);
            lambda.pop();
        }
    }
    go(0, &mats, Subspace::full(k), &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// The fast method and the brute force agree on every degree up to 3.
pub fn semi_oracle_case(r: &mut impl Rng) -> Result<(), String> {
    let g = random_closed_algebra(r);
    let n = g.n();
    for d in 1..=3 {
        let want = brute_force_semiinvariants(&g, d);
        let mut got: Vec<(Vec<Rational>, Subspace)> = semiinvariants_of_degree(&g, d)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|s| {
                let vecs = s.basis.iter().map(|f| coeff_vector(f, n, d)).collect();
                (
                    s.lambda,
                    Subspace::from_vectors(monomials_of_degree(n, d).len(), vecs).unwrap(),
                )
            })
            .collect();
        got.sort_by(|a, b| a.0.cmp(&b.0));
        let same = want.len() == got.len()
            && want.iter().zip(&got).all(|((l1, s1), (l2, s2))| {
                l1 == l2 && s1.dim() == s2.dim() && s1.is_subspace_of(s2).unwrap()
            });
        if !same {
            let show = |v: &[(Vec<Rational>, Subspace)]| {
                v.iter()
                    .map(|(l, s)| {
                        format!(
                            "{:?}:{}",
                            l.iter().map(ToString::to_string).collect::<Vec<_>>(),
                            s.dim()
                        )
                    })
                    .collect::<Vec<_>>()
            };
            return Err(format!(
                "algebra {:?}, degree {d}: brute force {:?}, fast {:?}",
                g.basis()
                    .iter()
                    .map(|x| x.matrix().row_vectors())
                    .collect::<Vec<_>>(),
                show(&want),
                show(&got)
            ));
        }
    }
    Ok(())
}

fn random_linear(r: &mut impl Rng, n: usize) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..n).map(|_| rat(r.gen_range(-4..=4))).collect();
        if v.iter().any(|x| !num_traits::Zero::is_zero(x)) {
            return v;
        }
    }
}

/// A product of distinct irreducible factors (linear forms and sums of
/// squares of independent linear forms), with one factor squared when
/// `repeated`. Returns the product and whether it is reduced.
pub fn synthetic_product(r: &mut impl Rng, repeated: bool) -> (MultiPoly, bool) {
    let n = 3;
    let mut factors: Vec<MultiPoly> = Vec::new();
    let push_distinct = |factors: &mut Vec<MultiPoly>, f: MultiPoly| {
        let m = f.monic();
        if factors.iter().all(|g| g.monic() != m) {
            factors.push(f);
        }
    };
    for _ in 0..r.gen_range(1..=3) {
        push_distinct(&mut factors, MultiPoly::linear_form(&random_linear(r, n)));
    }
    for _ in 0..r.gen_range(0..=2) {
        let k = r.gen_range(2..=3);
        let ls = loop {
            let ls: Vec<Vec<Rational>> = (0..k).map(|_| random_linear(r, n)).collect();
            if Subspace::from_vectors(n, ls.clone()).unwrap().dim() == k {
                break ls;
            }
        };
        let q = ls
            .iter()
            .map(|l| MultiPoly::linear_form(l).pow(2))
            .fold(MultiPoly::zero(n), |acc, s| &acc + &s);
        push_distinct(&mut factors, q);
    }
    let mut f = factors.iter().fold(MultiPoly::one(n), |acc, g| &acc * g);
    if repeated {
        let i = r.gen_range(0..factors.len());
        f = &f * &factors[i];
    }
    (f, !repeated)
}

/// Verdict matches the construction; "reduced" is only accepted with a
/// certificate, "not reduced" must not come back as reduced.
pub fn reducedness_case(seed: u64, trials: usize) -> Result<(), String> {
    let mut r = rng(seed);
    let (f, truth) = synthetic_product(&mut r, seed.is_multiple_of(2));
    let v = is_reduced(&f, trials, seed).map_err(|e| e.to_string())?;
    let ok = matches!(
        (&v, truth),
        (ReducedVerdict::Reduced { .. }, true) | (ReducedVerdict::NotReduced { .. }, false)
    );
    if ok {
        Ok(())
    } else {
        Err(format!(
            "f = {f}: verdict {v:?}, reduced by construction: {truth}"
        ))
    }
}
