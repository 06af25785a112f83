//! Exact linear algebra: row reduction, kernels, subspace sums and
//! intersections, and rational eigenvalues.

use pvsinv::linalg::{det_rat, kernel, rational_eigenvalues, rref, solve, RatMatrix, Subspace};
use pvsinv::ratpoly::{rat, Rational};

fn main() {
    let m = RatMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    let (r, rank) = rref(&m);
    println!("rank {rank}, rref rows {}", show_rows(&r.row_vectors()));
    let k = kernel(&m);
    println!("kernel basis {}", show_rows(&k.basis_vectors()));
    assert_eq!(rank + k.dim(), 3);

    let a = RatMatrix::from_i64(&[&[2, 1], &[1, 1]]);
    println!("det = {}", det_rat(&a).unwrap());
    let x = solve(&a, &[rat(3), rat(2)]).unwrap().unwrap();
    println!("solution of a x = (3, 2): {}", show(&x));

    let u = Subspace::from_vectors(
        4,
        vec![
            vec![rat(1), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0), rat(0)],
        ],
    )
    .unwrap();
    let w = Subspace::from_vectors(
        4,
        vec![
            vec![rat(0), rat(1), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(1)],
        ],
    )
    .unwrap();
    let s = u.sum(&w).unwrap();
    let i = u.intersect(&w).unwrap();
    println!("dim U + W = {}, dim U ∩ W = {}", s.dim(), i.dim());
    assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());

    let t = RatMatrix::from_i64(&[&[2, 0, 0], &[1, 2, 0], &[0, 0, 3]]);
    for (l, m) in rational_eigenvalues(&t).unwrap() {
        println!("eigenvalue {l} with multiplicity {m}");
    }
}

fn show(v: &[Rational]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", s.join(", "))
}

fn show_rows(rows: &[Vec<Rational>]) -> String {
    rows.iter().map(|r| show(r)).collect::<Vec<_>>().join(" ")
}
