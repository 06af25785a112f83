//! The structural checks: component counts, Euler decomposition,
//! isotropy at component points and the Jacobian rank.

use pvsinv::corpus::families::aac;
use pvsinv::invariants::{additive_invariants, basic_relative_invariants, dim_h, AdditiveOptions};
use pvsinv::pvscore::PVSpace;
use pvsinv::ratpoly::{rat, Rational};
use pvsinv::verifier::{
    classify_point, component_isotropy, euler_decomposition, run_checks, CheckInput,
};

fn main() {
    let p = PVSpace::new(aac(), vec![rat(1), rat(0), rat(1)]).unwrap();
    let b = basic_relative_invariants(&p, 3).unwrap();
    let a = additive_invariants(&p, &b.basics, &AdditiveOptions::default()).unwrap();

    let e = euler_decomposition(&p, &b.basics).unwrap();
    println!(
        "Euler decomposition: residual in [g, g]: {}, lambda(I) = {}",
        e.residual_in_derived,
        show(&e.lambda_at_identity)
    );

    let points = vec![vec![rat(0), rat(1), rat(0)], vec![rat(1), rat(0), rat(0)]];
    for v in &points {
        let i = classify_point(p.algebra(), &b.basics, v)
            .unwrap()
            .expect("generic on one component");
        let iso = component_isotropy(p.algebra(), &b.basics, i, v).unwrap();
        println!(
            "point {}: component {}, isotropy dim {}, own character nonzero: {}",
            show(v),
            i + 1,
            iso.isotropy_dim,
            iso.own_nonzero
        );
    }

    let v = run_checks(&CheckInput {
        p: &p,
        lfd: true,
        basics: &b,
        additive: &a,
        dim_h: dim_h(&p).unwrap(),
        component_points: &points,
        seed: 1,
    });
    for (name, verdict) in v.all() {
        println!("{name}: {verdict:?}");
    }
    assert!(!v.any_fail());
}

fn show(v: &[Rational]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", s.join(", "))
}
