//! Linear vector fields ξ_A and the Lie algebras they span: action on
//! polynomials, brackets, derived algebra and isotropy.

use pvsinv::liealg::{
    derived_subalgebra, isotropy_subalgebra, orbit_tangent_dim, vf_bracket, LieAlgebraVF,
    LinVectorField,
};
use pvsinv::linalg::RatMatrix;
use pvsinv::ratpoly::{parse_poly, rat, Rational};

fn main() {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    // scalars, and the unipotent maps y += x, z += 2y
    let basis = vec![
        RatMatrix::identity(3),
        RatMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]),
        RatMatrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 2, 0]]),
    ];
    let g = LieAlgebraVF::new(3, basis).unwrap();
    println!("dim g = {}, closed: {}", g.dim(), g.is_closed());

    let f = parse_poly("x*z - y^2", &vars).unwrap();
    for (i, x) in g.basis().iter().enumerate() {
        println!(
            "X{} f = {}",
            i + 1,
            x.apply(&f).unwrap().display_with(&vars)
        );
    }

    let b = vf_bracket(&g.basis()[1], &g.basis()[2]).unwrap();
    println!("[X2, X3] = {}", show_rows(&b.matrix().row_vectors()));
    let coords = g.coordinates(b.matrix()).unwrap().expect("closed");
    println!("in the basis: {}", show(&coords));

    println!("dim [g, g] = {}", derived_subalgebra(&g).unwrap().dim());
    let v = [rat(1), rat(0), rat(1)];
    println!(
        "orbit of (1, 0, 1) has dimension {}",
        orbit_tangent_dim(&g, &v).unwrap()
    );
    let w = [rat(0), rat(0), rat(1)];
    let iso = isotropy_subalgebra(&g, &w).unwrap();
    println!("isotropy at (0, 0, 1): {}", show_rows(&iso.basis_vectors()));

    // the Euler field acts on a degree-d form as multiplication by d
    let e = LinVectorField::new(RatMatrix::identity(3)).unwrap();
    assert_eq!(e.apply(&f).unwrap(), f.scale(&rat(2)));
}

fn show(v: &[Rational]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", s.join(", "))
}

fn show_rows(rows: &[Vec<Rational>]) -> String {
    rows.iter().map(|r| show(r)).collect::<Vec<_>>().join(" ")
}
