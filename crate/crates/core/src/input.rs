//! JSON input files.
//!
//! ```json
//! {"n": 3, "variables": ["x", "y", "z"], "poly": "x*(x*z - y^2)",
//!  "points": {"generic": ["1", "0", "1"], "component:1": ["0", "1", "0"]},
//!  "options": {"seed": 7, "max_denominator_degree": 6}}
//! ```
//!
//! Exactly one of `basis` (n×n matrices of rational strings) or `poly` is
//! required. `variables` defaults to x1..xn.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liealg::{Closure, LieAlgebraVF, LieError};
use crate::linalg::RatMatrix;
use crate::ratpoly::{
    default_variables, parse_poly, parse_rational, Homogeneity, MultiPoly, ParseError, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid input at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("cannot parse `poly`: {0}")]
    Poly(#[from] ParseError),
    #[error("`poly` is not homogeneous")]
    NotHomogeneous,
    #[error("`poly` is zero")]
    ZeroPoly,
    #[error("basis is not closed under the bracket: [X{i}, X{j}] is outside the span (0-based)")]
    NotClosed { i: usize, j: usize },
    #[error("invalid basis: {0}")]
    Basis(#[from] LieError),
}

fn schema(path: &str, message: impl Into<String>) -> InputError {
    InputError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

/// A rational written as `"p"` or `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RatText(Rational);

impl<'de> Deserialize<'de> for RatText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RatText;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"p\" or \"p/q\"")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<RatText, E> {
                parse_rational(s)
                    .map(RatText)
                    .map_err(|e| E::custom(format!("bad rational {s:?}: {e}")))
            }
        }
        d.deserialize_str(V)
    }
}

/// Overrides for bounds and seeds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct InputOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_denominator_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generic_tries: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reducedness_trials: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    n: usize,
    #[serde(default)]
    variables: Option<Vec<String>>,
    #[serde(default)]
    basis: Option<Vec<Vec<Vec<RatText>>>>,
    #[serde(default)]
    poly: Option<String>,
    #[serde(default)]
    points: Option<BTreeMap<String, Vec<RatText>>>,
    #[serde(default)]
    options: Option<InputOptions>,
}

#[derive(Debug, Clone)]
pub enum Task {
    /// A closed Lie algebra given by its basis.
    Algebra(LieAlgebraVF),
    /// A homogeneous polynomial whose linear logarithmic fields are used.
    Poly { text: String, poly: MultiPoly },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Points {
    pub generic: Option<Vec<Rational>>,
    /// Points on hypersurface components, in role order.
    pub components: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone)]
pub struct AnalysisInput {
    pub n: usize,
    pub variables: Vec<String>,
    pub task: Task,
    pub points: Points,
    pub options: InputOptions,
}

impl AnalysisInput {
    pub fn from_algebra(g: LieAlgebraVF) -> Self {
        let n = g.n();
        AnalysisInput {
            n,
            variables: default_variables(n),
            task: Task::Algebra(g),
            points: Points::default(),
            options: InputOptions::default(),
        }
    }

    pub fn from_poly(poly: MultiPoly, variables: Vec<String>) -> Self {
        AnalysisInput {
            n: poly.nvars(),
            task: Task::Poly {
                text: poly.display_with(&variables),
                poly,
            },
            variables,
            points: Points::default(),
            options: InputOptions::default(),
        }
    }
}

pub fn load_input(path: impl AsRef<Path>) -> Result<AnalysisInput, InputError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_input(&text)
}

pub fn parse_input(text: &str) -> Result<AnalysisInput, InputError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawInput = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        schema(&path, e.into_inner().to_string())
    })?;
    validate(raw)
}

fn validate(raw: RawInput) -> Result<AnalysisInput, InputError> {
    let n = raw.n;
    if n == 0 {
        return Err(schema("n", "must be positive"));
    }
    let variables = match raw.variables {
        None => default_variables(n),
        Some(v) => {
            if v.len() != n {
                return Err(schema(
                    "variables",
                    format!("expected {n} names, got {}", v.len()),
                ));
            }
            for (i, name) in v.iter().enumerate() {
                let ok = name
                    .chars()
                    .next()
                    .is_some_and(|c| c.is_alphabetic() || c == '_')
                    && name.chars().all(|c| c.is_alphanumeric() || c == '_');
                if !ok {
                    return Err(schema(
                        &format!("variables[{i}]"),
                        format!("{name:?} is not an identifier"),
                    ));
                }
                if v[..i].contains(name) {
                    return Err(schema(
                        &format!("variables[{i}]"),
                        format!("duplicate name {name:?}"),
                    ));
                }
            }
            v
        }
    };
    let task = match (raw.basis, raw.poly) {
        (Some(_), Some(_)) => {
            return Err(schema(
                ".",
                "give exactly one of `basis` and `poly`, not both",
            ))
        }
        (None, None) => return Err(schema(".", "one of `basis` or `poly` is required")),
        (Some(basis), None) => {
            let mut mats = Vec::with_capacity(basis.len());
            for (k, m) in basis.into_iter().enumerate() {
                if m.len() != n || m.iter().any(|r| r.len() != n) {
                    return Err(schema(
                        &format!("basis[{k}]"),
                        format!("expected a {n}x{n} matrix"),
                    ));
                }
                let data = m.into_iter().flatten().map(|r| r.0).collect();
                mats.push(RatMatrix::new(n, n, data).expect("checked shape"));
            }
            let g = LieAlgebraVF::new(n, mats)?;
            if let Closure::NotClosed { i, j, .. } = g.verify_closure()? {
                return Err(InputError::NotClosed { i, j });
            }
            Task::Algebra(g)
        }
        (None, Some(text)) => {
            let poly = parse_poly(&text, &variables)?;
            match poly.homogeneous_degree() {
                Homogeneity::Zero => return Err(InputError::ZeroPoly),
                Homogeneity::Inhomogeneous => return Err(InputError::NotHomogeneous),
                Homogeneity::Degree(_) => {}
            }
            Task::Poly { text, poly }
        }
    };
    let mut points = Points::default();
    let mut comps: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
    for (role, v) in raw.points.unwrap_or_default() {
        let path = format!("points.{role}");
        if v.len() != n {
            return Err(schema(
                &path,
                format!("expected {n} coordinates, got {}", v.len()),
            ));
        }
        let v: Vec<Rational> = v.into_iter().map(|r| r.0).collect();
        if role == "generic" {
            points.generic = Some(v);
        } else if let Some(k) = role
            .strip_prefix("component:")
            .and_then(|k| k.parse::<usize>().ok())
        {
            if k == 0 {
                return Err(schema(&path, "components are numbered from 1"));
            }
            comps.insert(k, v);
        } else {
            return Err(schema(
                &path,
                "role must be \"generic\" or \"component:<k>\"",
            ));
        }
    }
    points.components = comps.into_values().collect();
    Ok(AnalysisInput {
        n,
        variables,
        task,
        points,
        options: raw.options.unwrap_or_default(),
    })
}
