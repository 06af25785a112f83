//! Additive relative invariants with a bounded denominator, and splitting
//! one along a partition of the basic invariants.

use pvsinv::corpus::families::{nilpotent_powers, two_additive};
use pvsinv::invariants::{
    additive_invariants, basic_relative_invariants, partial_fraction_split, verify_additive,
    AdditiveOptions, Split,
};
use pvsinv::pvscore::PVSpace;
use pvsinv::ratpoly::default_variables;

fn main() {
    // invertible lower triangular Toeplitz matrices acting on the first column
    let n = 4;
    let vars = default_variables(n);
    let p = PVSpace::discover(nilpotent_powers(n), 1, 64).unwrap();
    let b = basic_relative_invariants(&p, 2 * n as u32).unwrap();
    println!(
        "basic invariants: {:?}",
        b.basics
            .iter()
            .map(|f| f.f.display_with(&vars))
            .collect::<Vec<_>>()
    );

    let opts = AdditiveOptions {
        max_denominator_degree: Some(3),
        ..Default::default()
    };
    let a = additive_invariants(&p, &b.basics, &opts).unwrap();
    println!(
        "dim A1 = {} with denominators of degree <= {}",
        a.dim_a1, a.bound
    );
    for h in &a.basis {
        let den = h.denominator(&b.basics);
        println!(
            "  ({}) / ({})",
            h.h1.display_with(&vars),
            den.display_with(&vars)
        );
        println!(
            "      dPhi = {:?}",
            h.dphi.iter().map(ToString::to_string).collect::<Vec<_>>()
        );
        assert!(verify_additive(&p, &b.basics, h));
    }

    // with a single basic invariant there is nothing to split
    let q = PVSpace::discover(two_additive(3), 1, 64).unwrap();
    let bq = basic_relative_invariants(&q, 6).unwrap();
    let aq = additive_invariants(&q, &bq.basics, &AdditiveOptions::default()).unwrap();
    let s = partial_fraction_split(q.algebra(), &bq.basics, &aq.basis[0], &[0], &[]).unwrap();
    println!(
        "split of the first invariant of the second example: {}",
        matches!(s, Split::Vacuous)
    );
}
