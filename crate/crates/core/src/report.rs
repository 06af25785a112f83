//! The analysis pipeline and its JSON report.

use serde::Serialize;

use crate::input::{AnalysisInput, InputOptions, Task};
use crate::invariants::{
    additive_invariants, basic_relative_invariants, dim_h, AdditiveOptions, AdditiveResult,
    Anomaly, BasicInvariants, InvariantReport,
};
use crate::liealg::{isotropy_subalgebra, LieAlgebraVF};
use crate::pvscore::{is_linear_free_divisor, linear_logarithmic_fields, PVSpace, ReducedVerdict};
use crate::ratpoly::{MultiPoly, Rational};
use crate::verifier::{run_checks, CheckInput, TheoremVerdicts};

/// Bumped whenever a field changes meaning or disappears.
pub const REPORT_VERSION: &str = "1.0";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisOptions {
    pub seed: u64,
    /// Largest degree scanned for basic invariants; `None` means n for a
    /// linear free divisor and 2n otherwise.
    pub max_degree: Option<u32>,
    /// Largest denominator degree for additive invariants; `None` means n.
    pub max_denominator_degree: Option<u32>,
    pub generic_tries: usize,
    pub reducedness_trials: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            seed: 1,
            max_degree: None,
            max_denominator_degree: None,
            generic_tries: 256,
            reducedness_trials: 3,
        }
    }
}

impl AnalysisOptions {
    /// These options with any value set in `o` taking precedence.
    pub fn overridden_by(&self, o: &InputOptions) -> Self {
        AnalysisOptions {
            seed: o.seed.unwrap_or(self.seed),
            max_degree: o.max_degree.or(self.max_degree),
            max_denominator_degree: o.max_denominator_degree.or(self.max_denominator_degree),
            generic_tries: o.generic_tries.unwrap_or(self.generic_tries),
            reducedness_trials: o.reducedness_trials.unwrap_or(self.reducedness_trials),
        }
    }
}

fn texts(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn matrix_texts(g: &LieAlgebraVF) -> Vec<Vec<Vec<String>>> {
    g.basis()
        .iter()
        .map(|x| x.matrix().row_vectors().iter().map(|r| texts(r)).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputEcho {
    pub n: usize,
    pub variables: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub component_points: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraSection {
    pub dim: usize,
    pub dim_derived: usize,
    /// Basis actually analysed (solved from the polynomial for `poly` input).
    pub basis: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prehomogeneity {
    pub generic_point: Vec<String>,
    /// "input" or "search".
    pub source: &'static str,
    pub orbit_dim: usize,
    pub reference_minor_columns: Vec<usize>,
    pub reference_minor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LfdSection {
    pub is_lfd: bool,
    pub reduced: Option<ReducedVerdict>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub dim_g: usize,
    pub dim_derived: usize,
    pub dim_isotropy: usize,
    #[serde(flatten)]
    pub counts: InvariantReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicEntry {
    pub f: String,
    pub degree: u32,
    pub lambda: Vec<String>,
    /// Multiplicity in the reference minor.
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicsSection {
    pub max_degree: u32,
    pub max_degree_scanned: u32,
    pub complete: bool,
    pub cofactor: String,
    pub invariants: Vec<BasicEntry>,
    pub anomalies: Vec<Anomaly>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdditiveEntry {
    pub numerator: String,
    pub exponents: Vec<u32>,
    pub denominator: String,
    pub fraction: String,
    pub dphi: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdditiveSection {
    pub bound: u32,
    pub dim_a1: usize,
    pub basis: Vec<AdditiveEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageError {
    pub stage: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub version: &'static str,
    pub input: InputEcho,
    pub options: AnalysisOptions,
    pub algebra: Option<AlgebraSection>,
    pub prehomogeneity: Option<Prehomogeneity>,
    pub lfd: Option<LfdSection>,
    pub saito_determinant: Option<String>,
    pub basics: Option<BasicsSection>,
    pub additive: Option<AdditiveSection>,
    pub dims: Option<Dims>,
    pub verdicts: Option<TheoremVerdicts>,
    pub errors: Vec<StageError>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// True when every stage ran and no theorem check failed.
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.verdicts.as_ref().is_some_and(|v| !v.any_fail())
    }
}

/// Typed results next to the report.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub report: AnalysisReport,
    pub algebra: Option<LieAlgebraVF>,
    pub pvs: Option<PVSpace>,
    pub lfd: bool,
    pub basics: Option<BasicInvariants>,
    pub additive: Option<AdditiveResult>,
}

/// Parenthesizes a polynomial unless it is a single term.
fn grouped(f: &MultiPoly, vars: &[String]) -> String {
    let s = f.display_with(vars);
    if f.num_terms() > 1 {
        format!("({s})")
    } else {
        s
    }
}

/// Runs the whole pipeline. Stage failures are recorded in
/// `report.errors`; later stages that depend on a failed one are skipped.
pub fn analyze(input: &AnalysisInput, options: &AnalysisOptions) -> Analysis {
    let opts = options.clone();
    let vars = &input.variables;
    let mut errors = Vec::new();
    let (poly_text, basis_echo) = match &input.task {
        Task::Algebra(g) => (None, Some(matrix_texts(g))),
        Task::Poly { poly, .. } => (Some(poly.display_with(vars)), None),
    };
    let mut report = AnalysisReport {
        version: REPORT_VERSION,
        input: InputEcho {
            n: input.n,
            variables: vars.clone(),
            poly: poly_text,
            basis: basis_echo,
            component_points: input.points.components.iter().map(|v| texts(v)).collect(),
        },
        options: opts.clone(),
        algebra: None,
        prehomogeneity: None,
        lfd: None,
        saito_determinant: None,
        basics: None,
        additive: None,
        dims: None,
        verdicts: None,
        errors: Vec::new(),
    };
    let mut out = Analysis {
        report: report.clone(),
        algebra: None,
        pvs: None,
        lfd: false,
        basics: None,
        additive: None,
    };
    macro_rules! bail {
        () => {{
            report.errors = errors;
            out.report = report;
            return out;
        }};
    }

    let g = match &input.task {
        Task::Algebra(g) => g.clone(),
        Task::Poly { poly, .. } => match linear_logarithmic_fields(poly) {
            Ok(g) => g,
            Err(e) => {
                errors.push(StageError {
                    stage: "derlog",
                    message: e.to_string(),
                });
                bail!();
            }
        },
    };
    let derived = match g.derived_coordinates() {
        Ok(d) => d,
        Err(e) => {
            errors.push(StageError {
                stage: "algebra",
                message: e.to_string(),
            });
            bail!();
        }
    };
    report.algebra = Some(AlgebraSection {
        dim: g.dim(),
        dim_derived: derived.dim(),
        basis: matrix_texts(&g),
    });
    out.algebra = Some(g.clone());

    let mut pvs = None;
    if let Some(v) = &input.points.generic {
        match PVSpace::new(g.clone(), v.clone()) {
            Ok(p) => pvs = Some((p, "input")),
            Err(e) => errors.push(StageError {
                stage: "generic_point",
                message: format!("given generic point rejected: {e}"),
            }),
        }
    }
    if pvs.is_none() {
        match PVSpace::discover(g.clone(), opts.seed, opts.generic_tries) {
            Ok(p) => pvs = Some((p, "search")),
            Err(e) => {
                errors.push(StageError {
                    stage: "generic_point",
                    message: e.to_string(),
                });
            }
        }
    }

    // the LFD test needs no generic point
    let mut lfd = false;
    match is_linear_free_divisor(&g, opts.reducedness_trials, opts.seed) {
        Ok(v) => {
            lfd = v.is_lfd;
            report.lfd = Some(LfdSection {
                is_lfd: v.is_lfd,
                reduced: v.reduced,
                reason: v.reason,
            });
        }
        Err(e) => errors.push(StageError {
            stage: "lfd",
            message: e.to_string(),
        }),
    }
    out.lfd = lfd;
    let Some((p, source)) = pvs else { bail!() };
    let (minor, cols) = p.reference_minor();
    report.prehomogeneity = Some(Prehomogeneity {
        generic_point: texts(p.generic_point()),
        source,
        orbit_dim: p.n(),
        reference_minor_columns: cols.to_vec(),
        reference_minor: minor.display_with(vars),
    });
    report.saito_determinant = p.saito_determinant().map(|d| d.display_with(vars));
    out.pvs = Some(p.clone());

    let n = p.n() as u32;
    let max_degree = opts.max_degree.unwrap_or(if lfd { n } else { 2 * n });
    let basics = match basic_relative_invariants(&p, max_degree) {
        Ok(b) => b,
        Err(e) => {
            errors.push(StageError {
                stage: "basics",
                message: e.to_string(),
            });
            bail!();
        }
    };
    report.basics = Some(BasicsSection {
        max_degree,
        max_degree_scanned: basics.max_degree_scanned,
        complete: basics.complete,
        cofactor: basics.cofactor.display_with(vars),
        invariants: basics
            .basics
            .iter()
            .zip(&basics.multiplicities)
            .map(|(b, &m)| BasicEntry {
                f: b.f.display_with(vars),
                degree: b.degree(),
                lambda: texts(&b.lambda),
                multiplicity: m,
            })
            .collect(),
        anomalies: basics.anomalies.clone(),
    });
    out.basics = Some(basics.clone());

    let aopts = AdditiveOptions {
        max_denominator_degree: opts.max_denominator_degree,
        early_stop: false,
    };
    let additive = match additive_invariants(&p, &basics.basics, &aopts) {
        Ok(a) => a,
        Err(e) => {
            errors.push(StageError {
                stage: "additive",
                message: e.to_string(),
            });
            bail!();
        }
    };
    report.additive = Some(AdditiveSection {
        bound: additive.bound,
        dim_a1: additive.dim_a1,
        basis: additive
            .basis
            .iter()
            .map(|a| {
                let den = a.denominator(&basics.basics);
                AdditiveEntry {
                    numerator: a.h1.display_with(vars),
                    exponents: a.k.clone(),
                    denominator: den.display_with(vars),
                    fraction: format!("{}/{}", grouped(&a.h1, vars), grouped(&den, vars)),
                    dphi: texts(&a.dphi),
                }
            })
            .collect(),
    });
    out.additive = Some(additive.clone());

    let dh = match dim_h(&p) {
        Ok(d) => d,
        Err(e) => {
            errors.push(StageError {
                stage: "dims",
                message: e.to_string(),
            });
            bail!();
        }
    };
    let iso = isotropy_subalgebra(&g, p.generic_point())
        .map(|s| s.dim())
        .unwrap_or(0);
    report.dims = Some(Dims {
        dim_g: g.dim(),
        dim_derived: derived.dim(),
        dim_isotropy: iso,
        counts: InvariantReport::new(dh, additive.dim_a1, basics.basics.len()),
    });

    report.verdicts = Some(run_checks(&CheckInput {
        p: &p,
        lfd,
        basics: &basics,
        additive: &additive,
        dim_h: dh,
        component_points: &input.points.components,
        seed: opts.seed,
    }));
    bail!()
}

pub fn run_analysis(input: &AnalysisInput, options: &AnalysisOptions) -> AnalysisReport {
    analyze(input, options).report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_input;

    #[test]
    fn aac_from_polynomial() {
        let inp =
            parse_input(r#"{"n":3,"poly":"x*(x*z - y^2)","variables":["x","y","z"]}"#).unwrap();
        let opts = AnalysisOptions {
            max_denominator_degree: Some(6),
            ..Default::default()
        };
        let r = run_analysis(&inp, &opts);
        assert!(r.errors.is_empty(), "{:?}", r.errors);
        assert_eq!(r.algebra.as_ref().unwrap().dim, 3);
        assert!(r.lfd.as_ref().unwrap().is_lfd);
        let b = r.basics.as_ref().unwrap();
        let fs: Vec<&str> = b.invariants.iter().map(|e| e.f.as_str()).collect();
        assert_eq!(fs, vec!["x", "x*z - y^2"]);
        let d = r.dims.as_ref().unwrap();
        assert_eq!(
            (d.counts.r, d.counts.dim_a1, d.dim_g - d.dim_derived),
            (2, 0, 2)
        );
        assert!(r.passed(), "{}", r.to_json());
        assert_eq!(r.to_json(), run_analysis(&inp, &opts).to_json());
    }
}
