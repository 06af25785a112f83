//! From a polynomial to its linear logarithmic vector fields, a generic
//! point, the Saito determinant and the linear free divisor test.

use pvsinv::pvscore::{is_linear_free_divisor, is_reduced, linear_logarithmic_fields, PVSpace};
use pvsinv::ratpoly::{parse_poly, Rational};

fn main() {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let f = parse_poly("x*(x*z - y^2)", &vars).unwrap();
    let g = linear_logarithmic_fields(&f).unwrap();
    println!("linear fields tangent to f = 0: dimension {}", g.dim());
    for x in g.basis() {
        println!("  {}", show_rows(&x.matrix().row_vectors()));
    }

    let p = PVSpace::discover(g.clone(), 7, 64).unwrap();
    println!("generic point {}", show(p.generic_point()));
    let det = p.saito_determinant().expect("square Saito matrix");
    println!("Saito determinant {}", det.display_with(&vars));

    let v = is_linear_free_divisor(&g, 3, 7).unwrap();
    println!("linear free divisor: {} ({})", v.is_lfd, v.reason);
    assert!(v.is_lfd);

    let square = parse_poly("x^2*y", &vars).unwrap();
    let r = is_reduced(&square, 3, 7).unwrap();
    println!("x^2 y reduced? {r:?}");
    assert!(!r.is_reduced());
}

fn show(v: &[Rational]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", s.join(", "))
}

fn show_rows(rows: &[Vec<Rational>]) -> String {
    rows.iter().map(|r| show(r)).collect::<Vec<_>>().join(" ")
}
