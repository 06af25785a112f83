//! Exact polynomial arithmetic over ℚ: parsing, products, derivatives,
//! exact division and restriction to a line.

use pvsinv::ratpoly::{parse_poly, rat, ratio, MultiPoly, Rational};

fn main() {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let f = parse_poly("x*z - y^2", &vars).unwrap();
    let x = MultiPoly::var(3, 0);
    let g = &x * &f;
    println!("g = {}", g.display_with(&vars));
    println!(
        "degree {:?}, homogeneous: {:?}",
        g.total_degree(),
        g.homogeneous_degree()
    );

    for i in 0..3 {
        println!(
            "d g/d{} = {}",
            vars[i],
            g.partial_derivative(i).unwrap().display_with(&vars)
        );
    }

    let q = g.exact_divide(&f).unwrap().expect("f divides g");
    assert_eq!(q, x);
    assert!(g
        .exact_divide(&parse_poly("y", &vars).unwrap())
        .unwrap()
        .is_none());

    let v = [rat(2), ratio(1, 2), rat(3)];
    println!("g(2, 1/2, 3) = {}", g.evaluate(&v).unwrap());

    // g on the line (1, 0, 1) + t (0, 1, 0) is 1 - t^2
    let u = g
        .restrict_to_line(&[rat(1), rat(0), rat(1)], &[rat(0), rat(1), rat(0)])
        .unwrap();
    let roots: Vec<Rational> = u.rational_roots().into_iter().map(|(t, _)| t).collect();
    println!(
        "restriction to a line: {u}, rational roots {}",
        show(&roots)
    );
    assert!(u.is_squarefree());

    // the same polynomial written differently parses to the same value
    let h = parse_poly("(x*z - y^2)*x", &vars).unwrap();
    assert_eq!(g, h);
}

fn show(v: &[Rational]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", s.join(", "))
}
