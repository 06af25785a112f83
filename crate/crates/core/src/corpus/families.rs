//! Constructions of the built-in algebras and polynomials.

use num_traits::Zero;

use crate::liealg::{LieAlgebraVF, LieError};
use crate::linalg::RatMatrix;
use crate::pvscore::poly_det;
use crate::ratpoly::{rat, MultiPoly, Rational};

fn closed(n: usize, mats: Vec<RatMatrix>) -> LieAlgebraVF {
    LieAlgebraVF::new_closed(n, mats).expect("built-in algebra is closed and independent")
}

/// diag(1,0,−1), E₂₁ + 2E₃₂, diag(0,1,2) on (x, y, z).
pub fn aac() -> LieAlgebraVF {
    closed(
        3,
        vec![
            RatMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]),
            RatMatrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 2, 0]]),
            RatMatrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]]),
        ],
    )
}

/// I, E₂₁, …, Eₙ₁: x₁ ↦ a x₁, xᵢ ↦ a xᵢ + bᵢ x₁.
pub fn two_additive(n: usize) -> LieAlgebraVF {
    let mut b = vec![RatMatrix::identity(n)];
    for i in 1..n {
        b.push(RatMatrix::unit(n, i, 0));
    }
    closed(n, b)
}

/// diag(1,1,0), E₂₁, diag(0,0,1).
pub fn example_a() -> LieAlgebraVF {
    closed(
        3,
        vec![
            RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]),
            RatMatrix::unit(3, 1, 0),
            RatMatrix::from_i64(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]]),
        ],
    )
}

/// diag(1,1,0), E₂₁, diag(0,−1,1): same orbits as [`example_a`].
pub fn example_a_contrast() -> LieAlgebraVF {
    closed(
        3,
        vec![
            RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]),
            RatMatrix::unit(3, 1, 0),
            RatMatrix::from_i64(&[&[0, 0, 0], &[0, -1, 0], &[0, 0, 1]]),
        ],
    )
}

/// Lower shift N with N eᵢ = eᵢ₊₁.
pub fn lower_shift(n: usize) -> RatMatrix {
    let mut s = RatMatrix::zeros(n, n);
    for i in 1..n {
        s[(i, i - 1)] = rat(1);
    }
    s
}

/// I, N, N², …, Nⁿ⁻¹: lower triangular Toeplitz matrices.
pub fn nilpotent_powers(n: usize) -> LieAlgebraVF {
    let shift = lower_shift(n);
    let mut b = vec![RatMatrix::identity(n)];
    let mut p = shift.clone();
    for _ in 1..n {
        b.push(p.clone());
        p = p.mul(&shift).expect("square");
    }
    closed(n, b)
}

pub fn normal_crossings(n: usize) -> LieAlgebraVF {
    closed(n, (0..n).map(|i| RatMatrix::unit(n, i, i)).collect())
}

/// Lower triangular n×n matrices acting on n×m matrices from the left and
/// strictly upper triangular m×m matrices acting by M ↦ −M·Y. Coordinates
/// are the entries of M in row-major order.
pub fn lu(n: usize, m: usize) -> LieAlgebraVF {
    let dim = n * m;
    let idx = |r: usize, c: usize| r * m + c;
    let mut mats = Vec::new();
    for a in 0..n {
        for b in 0..=a {
            let mut x = RatMatrix::zeros(dim, dim);
            for c in 0..m {
                x[(idx(a, c), idx(b, c))] = rat(1);
            }
            mats.push(x);
        }
    }
    for a in 0..m {
        for b in (a + 1)..m {
            let mut x = RatMatrix::zeros(dim, dim);
            for r in 0..n {
                x[(idx(r, b), idx(r, a))] = rat(-1);
            }
            mats.push(x);
        }
    }
    closed(dim, mats)
}

pub fn lu_variables(n: usize, m: usize) -> Vec<String> {
    (1..=n)
        .flat_map(|r| (1..=m).map(move |c| format!("m{r}{c}")))
        .collect()
}

/// The n×m matrix of coordinate functions.
fn lu_matrix(n: usize, m: usize) -> Vec<Vec<MultiPoly>> {
    (0..n)
        .map(|r| (0..m).map(|c| MultiPoly::var(n * m, r * m + c)).collect())
        .collect()
}

/// det of the leading i×i block.
pub fn lu_leading_minor(n: usize, m: usize, i: usize) -> MultiPoly {
    let mm = lu_matrix(n, m);
    poly_det(&mm[..i].iter().map(|r| r[..i].to_vec()).collect::<Vec<_>>())
}

/// det of the first i rows of M with column i (1-based) deleted, keeping
/// columns 1..=i+1.
pub fn lu_deleted_minor(n: usize, m: usize, i: usize) -> MultiPoly {
    let mm = lu_matrix(n, m);
    let cols: Vec<usize> = (0..=i).filter(|&c| c != i - 1).collect();
    poly_det(
        &mm[..i]
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect::<Vec<_>>(),
    )
}

/// Upper-left coordinates x₁₂, x₁₃, x₁₄, x₂₂, x₂₃, x₂₄, x₃₃, x₃₄, x₄₄ of a
/// symmetric 4×4 matrix with x₁₁ = 0.
pub const SYM_COORDS: [(usize, usize); 9] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

pub fn sym_variables() -> Vec<String> {
    SYM_COORDS
        .iter()
        .map(|(i, j)| format!("x{}{}", i + 1, j + 1))
        .collect()
}

/// The generators a, b, c, d, e, f, g, h, i of the block group as
/// elementary 4×4 matrices.
pub const BLOCK_GENERATORS: [(usize, usize); 9] = [
    (0, 0),
    (1, 1),
    (1, 2),
    (2, 1),
    (2, 2),
    (3, 0),
    (3, 1),
    (3, 2),
    (3, 3),
];

fn sym_from_coords(v: &[Rational]) -> RatMatrix {
    let mut s = RatMatrix::zeros(4, 4);
    for (k, &(i, j)) in SYM_COORDS.iter().enumerate() {
        s[(i, j)] = v[k].clone();
        s[(j, i)] = v[k].clone();
    }
    s
}

/// Matrix of M ↦ AM + MAᵀ on the nine coordinates.
pub fn congruence_action(a: &RatMatrix) -> Result<RatMatrix, LieError> {
    let mut out = RatMatrix::zeros(9, 9);
    for k in 0..9 {
        let mut e = vec![rat(0); 9];
        e[k] = rat(1);
        let m = sym_from_coords(&e);
        let img = a.mul(&m)?.add(&m.mul(&a.transpose())?)?;
        if !img[(0, 0)].is_zero() {
            return Err(LieError::BadMatrix { index: k });
        }
        for (r, &(i, j)) in SYM_COORDS.iter().enumerate() {
            out[(r, k)] = img[(i, j)].clone();
        }
    }
    Ok(out)
}

/// The block group acting on symmetric matrices with x₁₁ = 0.
pub fn symmetric_block() -> LieAlgebraVF {
    let mats = BLOCK_GENERATORS
        .iter()
        .map(|&(i, j)| congruence_action(&RatMatrix::unit(4, i, j)).expect("preserves x11 = 0"))
        .collect();
    closed(9, mats)
}

/// Coordinates of a symmetric 4×4 matrix (given by rows) with x₁₁ = 0.
pub fn sym_point(rows: [[i64; 4]; 4]) -> Vec<Rational> {
    SYM_COORDS.iter().map(|&(i, j)| rat(rows[i][j])).collect()
}

/// The leading principal minors of orders 2, 3, 4 of the symmetric matrix,
/// skipping the first row and column for the first one.
pub fn symmetric_block_minors() -> Vec<MultiPoly> {
    let var = |i: usize, j: usize| -> MultiPoly {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        match SYM_COORDS.iter().position(|&p| p == (a, b)) {
            Some(k) => MultiPoly::var(9, k),
            None => MultiPoly::zero(9),
        }
    };
    let block = |idx: &[usize]| -> MultiPoly {
        poly_det(
            &idx.iter()
                .map(|&i| idx.iter().map(|&j| var(i, j)).collect())
                .collect::<Vec<_>>(),
        )
    };
    vec![block(&[1, 2]), block(&[0, 1, 2]), block(&[0, 1, 2, 3])]
}

/// The numerator of the i-th additive function of the Toeplitz group in
/// the n entries a₁..aₙ: the i×i determinant whose first column is
/// (k/i)·a_{k+1} and whose (r, c) entry is a_{r−c+2} otherwise.
pub fn toeplitz_numerator(a: &[MultiPoly], i: usize) -> MultiPoly {
    let nv = a[0].nvars();
    let m: Vec<Vec<MultiPoly>> = (0..i)
        .map(|r| {
            (0..i)
                .map(|c| {
                    if c > r + 1 {
                        return MultiPoly::zero(nv);
                    }
                    let e = a[r + 1 - c].clone();
                    if c == 0 {
                        e.scale(&Rational::new((r as i64 + 1).into(), (i as i64).into()))
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    poly_det(&m)
}

/// Expands Φᵢ(AB) − Φᵢ(A) − Φᵢ(B) over 2n symbolic entries, cleared of
/// the denominator (a₁b₁)ⁱ. Zero means Φᵢ is a homomorphism.
pub fn toeplitz_homomorphism_defect(n: usize, i: usize) -> MultiPoly {
    let a: Vec<MultiPoly> = (0..n).map(|k| MultiPoly::var(2 * n, k)).collect();
    let b: Vec<MultiPoly> = (0..n).map(|k| MultiPoly::var(2 * n, n + k)).collect();
    let c: Vec<MultiPoly> = (0..n)
        .map(|k| {
            let mut s = MultiPoly::zero(2 * n);
            for j in 0..=k {
                s = &s + &(&a[j] * &b[k - j]);
            }
            s
        })
        .collect();
    let lhs = toeplitz_numerator(&c, i);
    let pa = &toeplitz_numerator(&a, i) * &b[0].pow(i as u32);
    let pb = &toeplitz_numerator(&b, i) * &a[0].pow(i as u32);
    &(&lhs - &pa) - &pb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::orbit_tangent_dim;
    use crate::ratpoly::{default_variables, parse_poly};

    #[test]
    fn symmetric_block_dimensions() {
        let g = symmetric_block();
        assert_eq!(g.dim(), 9);
        assert_eq!(g.derived_coordinates().unwrap().dim(), 6);
        let v0 = sym_point([[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(orbit_tangent_dim(&g, &v0).unwrap(), 9);
    }

    #[test]
    fn toeplitz_numerators_small() {
        let x = |s: &str| parse_poly(s, &default_variables(4)).unwrap();
        let a: Vec<MultiPoly> = (0..4).map(|k| MultiPoly::var(4, k)).collect();
        assert_eq!(toeplitz_numerator(&a, 1), x("x2"));
        assert_eq!(toeplitz_numerator(&a, 2), x("1/2*x2^2 - x1*x3"));
        assert_eq!(
            toeplitz_numerator(&a, 3),
            x("1/3*x2^3 - x1*x2*x3 + x1^2*x4")
        );
    }

    #[test]
    fn homomorphism_small() {
        for i in 1..4 {
            assert!(toeplitz_homomorphism_defect(4, i).is_zero());
        }
    }

    #[test]
    fn lu_is_square() {
        for (n, m) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
            assert_eq!(lu(n, m).dim(), n * m);
        }
        assert_eq!(lu_deleted_minor(2, 3, 2).to_string(), "x1*x6 - x3*x4");
    }
}
