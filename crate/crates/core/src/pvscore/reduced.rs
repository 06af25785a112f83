use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{saito_determinant, saito_matrix, PvsError};
use crate::liealg::LieAlgebraVF;
use crate::ratpoly::{rat, MultiPoly, Rational};

/// Resamples allowed per trial when the line restriction loses degree.
const RESAMPLES: usize = 32;
const LINE_BOX: i64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ReducedVerdict {
    /// The restriction to `p + t·q` is squarefree of full degree, which
    /// proves f squarefree.
    Reduced {
        point: Vec<String>,
        direction: Vec<String>,
    },
    /// Every sampled line section had a repeated root. Strong evidence,
    /// not a proof.
    NotReduced { trials: usize },
    /// No full-degree line section could be sampled.
    Inconclusive { trials: usize },
}

impl ReducedVerdict {
    pub fn is_reduced(&self) -> bool {
        matches!(self, ReducedVerdict::Reduced { .. })
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// One-sided squarefree test on random rational lines.
pub fn is_reduced(f: &MultiPoly, trials: usize, seed: u64) -> Result<ReducedVerdict, PvsError> {
    if f.is_zero() {
        return Err(PvsError::ZeroPolynomial);
    }
    let n = f.nvars();
    let deg = f.total_degree().unwrap_or(0) as usize;
    if deg == 0 {
        return Ok(ReducedVerdict::Reduced {
            point: strings(&vec![rat(0); n]),
            direction: strings(&vec![rat(0); n]),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut full_degree_seen = false;
    for _ in 0..trials {
        for _ in 0..RESAMPLES {
            let p: Vec<Rational> = (0..n)
                .map(|_| rat(rng.gen_range(-LINE_BOX..=LINE_BOX)))
                .collect();
            let q: Vec<Rational> = (0..n)
                .map(|_| rat(rng.gen_range(-LINE_BOX..=LINE_BOX)))
                .collect();
            let g = f.restrict_to_line(&p, &q)?;
            if g.degree() != Some(deg) {
                continue;
            }
            full_degree_seen = true;
            if g.is_squarefree() {
                return Ok(ReducedVerdict::Reduced {
                    point: strings(&p),
                    direction: strings(&q),
                });
            }
            break;
        }
    }
    Ok(if full_degree_seen {
        ReducedVerdict::NotReduced { trials }
    } else {
        ReducedVerdict::Inconclusive { trials }
    })
}

/// Outcome of the linear-free-divisor test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LfdVerdict {
    pub is_lfd: bool,
    /// Saito determinant in x1..xn names, when dim 𝔤 = n.
    pub determinant: Option<String>,
    pub reduced: Option<ReducedVerdict>,
    pub reason: String,
}

/// dim 𝔤 = n, nonzero Saito determinant, and a reducedness certificate.
pub fn is_linear_free_divisor(
    g: &LieAlgebraVF,
    trials: usize,
    seed: u64,
) -> Result<LfdVerdict, PvsError> {
    let Ok(s) = saito_matrix(g) else {
        return Ok(LfdVerdict {
            is_lfd: false,
            determinant: None,
            reduced: None,
            reason: format!("dim g = {} differs from n = {}", g.dim(), g.n()),
        });
    };
    let det = saito_determinant(&s);
    lfd_from_determinant(&det, trials, seed)
}

pub(crate) fn lfd_from_determinant(
    det: &MultiPoly,
    trials: usize,
    seed: u64,
) -> Result<LfdVerdict, PvsError> {
    if det.is_zero() {
        return Ok(LfdVerdict {
            is_lfd: false,
            determinant: Some("0".into()),
            reduced: None,
            reason: "Saito determinant vanishes identically".into(),
        });
    }
    let red = is_reduced(det, trials, seed)?;
    let is_lfd = red.is_reduced();
    let reason = match &red {
        ReducedVerdict::Reduced { .. } => "reduced Saito determinant of degree n".to_string(),
        ReducedVerdict::NotReduced { trials } => {
            format!("Saito determinant has a repeated factor on all {trials} sampled lines")
        }
        ReducedVerdict::Inconclusive { trials } => {
            format!("no full-degree line section found in {trials} trials")
        }
    };
    Ok(LfdVerdict {
        is_lfd,
        determinant: Some(det.to_string()),
        reduced: Some(red),
        reason,
    })
}
