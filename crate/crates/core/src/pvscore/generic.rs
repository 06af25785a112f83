use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::PvsError;
use crate::liealg::{orbit_tangent_dim, LieAlgebraVF};
use crate::ratpoly::{rat, Rational};

/// Tries per box size before the box doubles.
const TRIES_PER_BOX: usize = 8;

/// Samples integer points from boxes [−B, B]ⁿ (B = 2, 4, 8, …) until one
/// has an n-dimensional orbit. Failure only means no certificate was found.
pub fn find_generic_point(
    g: &LieAlgebraVF,
    seed: u64,
    max_tries: usize,
) -> Result<Vec<Rational>, PvsError> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..max_tries {
        let b: i64 = 2i64 << (t / TRIES_PER_BOX).min(40);
        let v: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-b..=b))).collect();
        if orbit_tangent_dim(g, &v)? == n {
            return Ok(v);
        }
    }
    Err(PvsError::NoGenericPoint { tries: max_tries })
}
