//! Built-in examples with expected results, and a runner that compares
//! analysis reports against them.

pub mod families;

use rayon::prelude::*;
use serde::Serialize;

use crate::input::{AnalysisInput, InputOptions, Points, Task};
use crate::invariants::{check_additive, AdditiveInvariant, SemiInvariant};
use crate::liealg::LieAlgebraVF;
use crate::linalg::Subspace;
use crate::ratpoly::{default_variables, parse_poly, rat, MultiPoly, Rational};
use crate::report::{analyze, Analysis, AnalysisOptions};

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Stated in the literature the example comes from.
    Published,
    /// Worked out by hand or by an independent computation.
    Derived,
    /// Immediate from the construction.
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expect<T> {
    pub value: T,
    pub origin: Origin,
}

fn pub_<T>(value: T) -> Option<Expect<T>> {
    Some(Expect {
        value,
        origin: Origin::Published,
    })
}

fn der<T>(value: T) -> Option<Expect<T>> {
    Some(Expect {
        value,
        origin: Origin::Derived,
    })
}

fn triv<T>(value: T) -> Option<Expect<T>> {
    Some(Expect {
        value,
        origin: Origin::Trivial,
    })
}

/// Expected results; unset fields are not compared.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub lfd: Option<Expect<bool>>,
    pub dim_g: Option<Expect<usize>>,
    pub dim_derived: Option<Expect<usize>>,
    pub r: Option<Expect<usize>>,
    pub dim_h: Option<Expect<usize>>,
    pub dim_a1: Option<Expect<usize>>,
    /// Degree multiset, sorted.
    pub degrees: Option<Expect<Vec<u32>>>,
    /// Basic invariants up to scalars.
    pub basics: Option<Expect<Vec<String>>>,
    /// Fractions (numerator, denominator) whose dΦ must lie in the span of
    /// the computed ones.
    pub additive: Option<Expect<Vec<(String, String)>>>,
}

/// Checks beyond the report comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Extra {
    None,
    /// Toeplitz additive functions: homomorphism identity and matching
    /// solver representatives.
    Toeplitz {
        n: usize,
    },
    /// Closed-form additive invariants of the LU action.
    Lu {
        n: usize,
        m: usize,
    },
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub family: &'static str,
    pub summary: String,
    pub input: AnalysisInput,
    pub expected: Expected,
    pub extra: Extra,
}

fn entry(
    name: impl Into<String>,
    family: &'static str,
    summary: impl Into<String>,
    input: AnalysisInput,
) -> CorpusEntry {
    CorpusEntry {
        name: name.into(),
        family,
        summary: summary.into(),
        input,
        expected: Expected::default(),
        extra: Extra::None,
    }
}

fn algebra_input(g: LieAlgebraVF, variables: Vec<String>) -> AnalysisInput {
    let mut i = AnalysisInput::from_algebra(g);
    i.variables = variables;
    i
}

fn poly_input(text: &str, variables: Vec<String>) -> AnalysisInput {
    let poly = parse_poly(text, &variables).expect("built-in polynomial parses");
    let mut i = AnalysisInput::from_poly(poly, variables);
    if let Task::Poly { text: t, .. } = &mut i.task {
        *t = text.to_string();
    }
    i
}

fn xyz() -> Vec<String> {
    ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
}

fn pts(v: &[&[i64]]) -> Vec<Vec<Rational>> {
    v.iter()
        .map(|p| p.iter().map(|&x| rat(x)).collect())
        .collect()
}

fn with_bound(mut i: AnalysisInput, b: u32) -> AnalysisInput {
    i.options = InputOptions {
        max_denominator_degree: Some(b),
        ..i.options
    };
    i
}

fn aac_expected() -> Expected {
    Expected {
        lfd: pub_(true),
        dim_g: pub_(3),
        dim_derived: der(1),
        r: pub_(2),
        dim_h: der(2),
        dim_a1: pub_(0),
        degrees: pub_(vec![1, 2]),
        basics: pub_(vec!["x".into(), "x*z - y^2".into()]),
        additive: None,
    }
}

fn aac_points() -> Points {
    Points {
        generic: Some(pts(&[&[1, 0, 1]]).remove(0)),
        components: pts(&[&[0, 1, 0], &[1, 0, 0]]),
    }
}

/// The two linear free divisors in five variables with the same abstract
/// Lie algebra but different component degrees.
pub const D1_POLY: &str = "(x3*x5 - x4^2)*(2*x1*x2*x4 - x1^2*x5 - x2^2*x3)";
pub const D2_POLY: &str = "(x2^2*x3^2 - 4*x1*x3^3 - 4*x2^3*x4 + 18*x1*x2*x3*x4 - 27*x4^2*x1^2)*x5";

/// Every built-in entry, in listing order.
pub fn corpus_entries() -> Vec<CorpusEntry> {
    let mut out = Vec::new();

    let mut e = entry(
        "aac",
        "aac",
        "x(xz - y^2) from its solvable 3-dimensional group",
        algebra_input(families::aac(), xyz()),
    );
    e.input.points = aac_points();
    e.input = with_bound(e.input, 6);
    e.expected = aac_expected();
    out.push(e);

    let mut e = entry(
        "aac-poly",
        "aac",
        "x(xz - y^2) given as a polynomial",
        poly_input("x*(x*z - y^2)", xyz()),
    );
    e.input.points = aac_points();
    e.input = with_bound(e.input, 6);
    e.expected = aac_expected();
    out.push(e);

    for n in 3..=5 {
        let mut e = entry(
            format!("2addinvs-{n}"),
            "2addinvs",
            format!("scalars plus x1 added to the other coordinates, n = {n}"),
            algebra_input(families::two_additive(n), default_variables(n)),
        );
        e.expected = Expected {
            lfd: pub_(false),
            dim_g: triv(n),
            dim_derived: der(0),
            r: pub_(1),
            dim_h: der(n),
            dim_a1: pub_(n - 1),
            degrees: pub_(vec![1]),
            basics: pub_(vec!["x1".into()]),
            additive: pub_(
                (2..=n)
                    .map(|i| (format!("x{i}"), "x1".to_string()))
                    .collect(),
            ),
        };
        out.push(e);
    }

    let mut e = entry(
        "ex-A",
        "ex-A",
        "abelian group with an additive invariant y/x",
        algebra_input(families::example_a(), xyz()),
    );
    e.expected = Expected {
        lfd: der(false),
        dim_derived: der(0),
        r: pub_(2),
        dim_h: pub_(3),
        dim_a1: pub_(1),
        degrees: der(vec![1, 1]),
        basics: pub_(vec!["x".into(), "z".into()]),
        additive: pub_(vec![("y".into(), "x".into())]),
        ..Default::default()
    };
    out.push(e);

    let mut e = entry(
        "ex-A-contrast",
        "ex-A",
        "same orbits as ex-A but no additive invariants",
        algebra_input(families::example_a_contrast(), xyz()),
    );
    e.expected = Expected {
        lfd: der(false),
        dim_derived: pub_(1),
        r: pub_(2),
        dim_h: pub_(2),
        dim_a1: pub_(0),
        degrees: der(vec![1, 1]),
        basics: pub_(vec!["x".into(), "z".into()]),
        ..Default::default()
    };
    out.push(e);

    for n in 3..=6 {
        let mut input = algebra_input(families::nilpotent_powers(n), default_variables(n));
        if n == 4 {
            input = with_bound(input, 3);
        }
        let mut e = entry(
            format!("denompowers-{n}"),
            "denompowers",
            format!("invertible lower triangular Toeplitz matrices, n = {n}"),
            input,
        );
        let fractions = (1..n)
            .map(|i| {
                let a: Vec<MultiPoly> = (0..n).map(|k| MultiPoly::var(n, k)).collect();
                (
                    families::toeplitz_numerator(&a, i).to_string(),
                    format!("x1^{i}"),
                )
            })
            .collect();
        e.expected = Expected {
            lfd: der(false),
            dim_g: triv(n),
            dim_derived: der(0),
            r: pub_(1),
            dim_h: der(n),
            dim_a1: pub_(n - 1),
            degrees: pub_(vec![1]),
            basics: pub_(vec!["x1".into()]),
            additive: pub_(fractions),
        };
        e.extra = Extra::Toeplitz { n };
        out.push(e);
    }

    for (n, m) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        let mut input = algebra_input(families::lu(n, m), families::lu_variables(n, m));
        let mut v0 = vec![rat(0); n * m];
        for i in 0..n {
            v0[i * m + i] = rat(1);
        }
        input.points.generic = Some(v0);
        input = with_bound(input, n as u32);
        let mut e = entry(
            format!("lu-{n}x{m}"),
            "lu",
            format!("lower times unipotent upper triangular acting on {n}x{m} matrices"),
            input,
        );
        e.expected = Expected {
            r: pub_(n),
            dim_h: pub_(n + m - 1),
            dim_a1: pub_(m - 1),
            degrees: pub_((1..=n as u32).collect()),
            dim_g: triv(n * m),
            ..Default::default()
        };
        e.extra = Extra::Lu { n, m };
        out.push(e);
    }

    let mut input = algebra_input(families::symmetric_block(), families::sym_variables());
    input.points = Points {
        generic: Some(families::sym_point([
            [0, 1, 0, 0],
            [1, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ])),
        components: vec![
            families::sym_point([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
            families::sym_point([[0, 0, 1, 1], [0, 0, 1, 0], [1, 1, 0, 0], [1, 0, 0, 0]]),
            families::sym_point([[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]]),
        ],
    };
    input = with_bound(input, 9);
    let mut e = entry(
        "complicated",
        "complicated",
        "block group acting on symmetric 4x4 matrices with x11 = 0",
        input,
    );
    let vars = families::sym_variables();
    e.expected = Expected {
        lfd: pub_(true),
        dim_g: pub_(9),
        dim_derived: der(6),
        r: pub_(3),
        dim_h: der(3),
        dim_a1: pub_(0),
        degrees: pub_(vec![2, 3, 4]),
        basics: pub_(
            families::symmetric_block_minors()
                .iter()
                .map(|f| f.display_with(&vars))
                .collect(),
        ),
        additive: None,
    };
    out.push(e);

    for n in 2..=5 {
        let mut input = algebra_input(families::normal_crossings(n), default_variables(n));
        input.points.components = (0..n)
            .map(|i| (0..n).map(|j| rat((i != j) as i64)).collect())
            .collect();
        let mut e = entry(
            format!("normal-crossings-{n}"),
            "normal-crossings",
            format!("diagonal torus, n = {n}"),
            input,
        );
        e.expected = Expected {
            lfd: triv(true),
            dim_g: triv(n),
            dim_derived: triv(0),
            r: triv(n),
            dim_h: triv(n),
            dim_a1: triv(0),
            degrees: triv(vec![1; n]),
            basics: triv((1..=n).map(|i| format!("x{i}")).collect()),
            additive: None,
        };
        out.push(e);
    }

    for (name, poly, degs) in [("d1", D1_POLY, vec![2, 3]), ("d2", D2_POLY, vec![1, 4])] {
        let mut e = entry(
            name,
            "d1-vs-d2",
            format!("linear free divisor {poly}"),
            poly_input(poly, default_variables(5)),
        );
        e.expected = Expected {
            lfd: pub_(true),
            dim_g: pub_(5),
            dim_derived: pub_(3),
            r: pub_(2),
            dim_a1: der(0),
            degrees: pub_(degs),
            ..Default::default()
        };
        out.push(e);
    }
    out
}

/// Names accepted by [`corpus_run`]: entries, family names and the
/// composite `d1-vs-d2`.
pub fn corpus_list() -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> = corpus_entries()
        .into_iter()
        .map(|e| (e.name, e.summary))
        .collect();
    v.push((
        "d1-vs-d2".into(),
        "d1 and d2: same dimensions, different degrees".into(),
    ));
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryOutcome {
    pub name: String,
    pub passed: bool,
    pub comparisons: Vec<Comparison>,
    pub seconds: f64,
    #[serde(skip)]
    pub analysis: Option<Analysis>,
}

fn cmp<T: PartialEq + std::fmt::Debug>(
    out: &mut Vec<Comparison>,
    name: &str,
    want: &Option<Expect<T>>,
    got: Option<T>,
) {
    if let Some(w) = want {
        let passed = got.as_ref() == Some(&w.value);
        out.push(Comparison {
            check: name.into(),
            passed,
            detail: format!("expected {:?} ({:?}), got {:?}", w.value, w.origin, got),
        });
    }
}

/// The additive invariant h/d with d written as c·Π fᵢ^{kᵢ}.
pub fn fraction_to_additive(
    g: &LieAlgebraVF,
    basics: &[SemiInvariant],
    num: &MultiPoly,
    den: &MultiPoly,
) -> Option<AdditiveInvariant> {
    let mut rest = den.clone();
    let mut k = vec![0u32; basics.len()];
    for (i, b) in basics.iter().enumerate() {
        while let Ok(Some(q)) = rest.exact_divide(&b.f) {
            rest = q;
            k[i] += 1;
        }
    }
    let c = rest.as_constant()?;
    AdditiveInvariant::from_fraction(g, basics, num.scale(&c.recip()), k)
        .ok()
        .flatten()
}

fn additive_comparison(a: &Analysis, vars: &[String], fr: &[(String, String)]) -> Comparison {
    let fail = |d: String| Comparison {
        check: "additive".into(),
        passed: false,
        detail: d,
    };
    let (Some(p), Some(b), Some(add)) = (&a.pvs, &a.basics, &a.additive) else {
        return fail("analysis incomplete".into());
    };
    let g = p.algebra();
    let span = Subspace::from_vectors(g.dim(), add.basis.iter().map(|x| x.dphi.clone()).collect())
        .expect("sizes");
    for (num, den) in fr {
        let (Ok(n), Ok(d)) = (parse_poly(num, vars), parse_poly(den, vars)) else {
            return fail(format!("cannot parse {num}/{den}"));
        };
        let Some(inv) = fraction_to_additive(g, &b.basics, &n, &d) else {
            return fail(format!("({num})/({den}) is not an additive invariant"));
        };
        if !span.contains(&inv.dphi).unwrap_or(false) {
            return fail(format!(
                "dphi of ({num})/({den}) is outside the computed span"
            ));
        }
    }
    Comparison {
        check: "additive".into(),
        passed: true,
        detail: format!("{} expected fractions lie in the computed span", fr.len()),
    }
}

fn toeplitz_checks(a: &Analysis, n: usize, out: &mut Vec<Comparison>) {
    for i in 1..n {
        let zero = families::toeplitz_homomorphism_defect(n, i).is_zero();
        out.push(Comparison {
            check: format!("homomorphism-{i}"),
            passed: zero,
            detail: format!("Phi_{i}(AB) - Phi_{i}(A) - Phi_{i}(B) expands to zero: {zero}"),
        });
    }
    let Some(add) = &a.additive else { return };
    let xs: Vec<MultiPoly> = (0..n).map(|k| MultiPoly::var(n, k)).collect();
    for i in 1..n {
        let want = families::toeplitz_numerator(&xs, i);
        let found = add.basis.iter().find(|x| x.k == vec![i as u32]);
        let ok = found.is_some_and(|x| {
            same_up_to_denominator(&x.h1, &want, &MultiPoly::var(n, 0).pow(i as u32))
        });
        if add.bound as usize >= i {
            out.push(Comparison {
                check: format!("representative-{i}"),
                passed: ok,
                detail: format!("numerator over x1^{i} equals c*({want}) + t*x1^{i}: {ok}"),
            });
        }
    }
}

/// h = s·want + t·den for rationals s ≠ 0, t; `den` must be a monomial
/// times a constant.
fn same_up_to_denominator(h: &MultiPoly, want: &MultiPoly, den: &MultiPoly) -> bool {
    let Some((dm, _)) = den.leading_term() else {
        return false;
    };
    let Some((m, c)) = want.terms().rev().find(|(m, _)| *m != dm) else {
        return false;
    };
    let s = h.coefficient(m) / c;
    if num_traits::Zero::is_zero(&s) {
        return false;
    }
    let r = h - &want.scale(&s);
    let ok = r.terms().all(|(m, _)| m == dm);
    ok
}

fn lu_checks(a: &Analysis, n: usize, m: usize, out: &mut Vec<Comparison>) {
    let (Some(p), Some(b)) = (&a.pvs, &a.basics) else {
        return;
    };
    for i in 1..m {
        if i > n {
            break;
        }
        let num = families::lu_deleted_minor(n, m, i);
        let den = families::lu_leading_minor(n, m, i);
        let ok = fraction_to_additive(p.algebra(), &b.basics, &num, &den)
            .is_some_and(|x| check_additive(p.algebra(), &b.basics, &x).is_ok());
        out.push(Comparison {
            check: format!("closed-form-{i}"),
            passed: ok,
            detail: format!("({num})/({den}) verifies as additive: {ok}"),
        });
    }
}

fn monic_set(v: impl IntoIterator<Item = MultiPoly>) -> Vec<MultiPoly> {
    let mut s: Vec<MultiPoly> = v.into_iter().map(|f| f.monic()).collect();
    s.sort_by(|a, b| a.cmp_canonical(b));
    s
}

pub fn run_entry(e: &CorpusEntry) -> EntryOutcome {
    let start = std::time::Instant::now();
    let opts = AnalysisOptions::default().overridden_by(&e.input.options);
    let a = analyze(&e.input, &opts);
    let r = &a.report;
    let x = &e.expected;
    let mut out = Vec::new();
    out.push(Comparison {
        check: "stages".into(),
        passed: r.errors.is_empty(),
        detail: format!("{:?}", r.errors),
    });
    cmp(&mut out, "lfd", &x.lfd, r.lfd.as_ref().map(|l| l.is_lfd));
    cmp(
        &mut out,
        "dim_g",
        &x.dim_g,
        r.algebra.as_ref().map(|s| s.dim),
    );
    cmp(
        &mut out,
        "dim_derived",
        &x.dim_derived,
        r.algebra.as_ref().map(|s| s.dim_derived),
    );
    cmp(&mut out, "r", &x.r, r.dims.as_ref().map(|d| d.counts.r));
    cmp(
        &mut out,
        "dim_h",
        &x.dim_h,
        r.dims.as_ref().map(|d| d.counts.dim_h),
    );
    cmp(
        &mut out,
        "dim_a1",
        &x.dim_a1,
        r.dims.as_ref().map(|d| d.counts.dim_a1),
    );
    cmp(
        &mut out,
        "degrees",
        &x.degrees,
        a.basics.as_ref().map(|b| {
            let mut d: Vec<u32> = b.basics.iter().map(|s| s.degree()).collect();
            d.sort_unstable();
            d
        }),
    );
    if let Some(w) = &x.basics {
        let vars = &e.input.variables;
        let want = monic_set(
            w.value
                .iter()
                .map(|s| parse_poly(s, vars).expect("expected polynomial parses")),
        );
        let got = a
            .basics
            .as_ref()
            .map(|b| monic_set(b.basics.iter().map(|s| s.f.clone())));
        let passed = got.as_ref() == Some(&want);
        let show = |v: &[MultiPoly]| v.iter().map(|f| f.display_with(vars)).collect::<Vec<_>>();
        out.push(Comparison {
            check: "basics".into(),
            passed,
            detail: format!(
                "expected {:?} ({:?}), got {:?}",
                show(&want),
                w.origin,
                got.as_deref().map(show)
            ),
        });
    }
    if let Some(w) = &x.additive {
        out.push(additive_comparison(&a, &e.input.variables, &w.value));
    }
    if let Some(v) = &r.verdicts {
        for (name, verdict) in v.all() {
            if verdict.is_fail() {
                out.push(Comparison {
                    check: format!("verdict:{name}"),
                    passed: false,
                    detail: format!("{verdict:?}"),
                });
            }
        }
        out.push(Comparison {
            check: "verdicts".into(),
            passed: !v.any_fail(),
            detail: "no theorem check failed".into(),
        });
    }
    match e.extra {
        Extra::None => {}
        Extra::Toeplitz { n } => toeplitz_checks(&a, n, &mut out),
        Extra::Lu { n, m } => lu_checks(&a, n, m, &mut out),
    }
    EntryOutcome {
        name: e.name.clone(),
        passed: out.iter().all(|c| c.passed),
        comparisons: out,
        seconds: start.elapsed().as_secs_f64(),
        analysis: Some(a),
    }
}

fn pair_outcome(d1: &EntryOutcome, d2: &EntryOutcome) -> EntryOutcome {
    let dims = |o: &EntryOutcome| {
        o.analysis
            .as_ref()
            .and_then(|a| a.report.dims.clone())
            .map(|d| (d.dim_g, d.dim_derived, d.counts.r))
    };
    let degs = |o: &EntryOutcome| {
        o.analysis
            .as_ref()
            .and_then(|a| a.basics.as_ref())
            .map(|b| {
                let mut d: Vec<u32> = b.basics.iter().map(|s| s.degree()).collect();
                d.sort_unstable();
                d
            })
    };
    let (a, b) = (dims(d1), dims(d2));
    let (da, db) = (degs(d1), degs(d2));
    let comparisons = vec![
        Comparison {
            check: "same-dimensions".into(),
            passed: a.is_some() && a == b && a.is_some_and(|x| x.2 == 2),
            detail: format!("(dim g, dim [g,g], r): {a:?} vs {b:?}"),
        },
        Comparison {
            check: "different-degrees".into(),
            passed: da.is_some() && db.is_some() && da != db,
            detail: format!("degrees {da:?} vs {db:?}"),
        },
    ];
    EntryOutcome {
        name: "d1-vs-d2".into(),
        passed: d1.passed && d2.passed && comparisons.iter().all(|c| c.passed),
        comparisons,
        seconds: d1.seconds + d2.seconds,
        analysis: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown corpus entry {0:?}; see `corpus list`")]
pub struct UnknownEntry(pub String);

/// Runs an entry, a family, or `d1-vs-d2`.
pub fn corpus_run(name: &str) -> Result<Vec<EntryOutcome>, UnknownEntry> {
    let all = corpus_entries();
    if name == "d1-vs-d2" {
        let picked: Vec<&CorpusEntry> = all.iter().filter(|e| e.family == "d1-vs-d2").collect();
        let outs: Vec<EntryOutcome> = picked.par_iter().map(|e| run_entry(e)).collect();
        let pair = pair_outcome(&outs[0], &outs[1]);
        let mut v = outs;
        v.push(pair);
        return Ok(v);
    }
    let picked: Vec<&CorpusEntry> = all
        .iter()
        .filter(|e| e.name == name || e.family == name)
        .collect();
    if picked.is_empty() {
        return Err(UnknownEntry(name.into()));
    }
    Ok(picked.par_iter().map(|e| run_entry(e)).collect())
}

/// Runs every entry (in parallel) plus the `d1-vs-d2` comparison.
pub fn corpus_run_all() -> Vec<EntryOutcome> {
    let all = corpus_entries();
    let mut outs: Vec<EntryOutcome> = all.par_iter().map(run_entry).collect();
    let i1 = outs.iter().position(|o| o.name == "d1");
    let i2 = outs.iter().position(|o| o.name == "d2");
    if let (Some(i1), Some(i2)) = (i1, i2) {
        let pair = pair_outcome(&outs[i1], &outs[i2]);
        outs.push(pair);
    }
    outs
}
