//! Semi-invariants degree by degree and the basic relative invariants,
//! for the congruence action of a block group on symmetric 4x4 matrices
//! with vanishing corner entry.

use pvsinv::corpus::families::{sym_point, sym_variables, symmetric_block};
use pvsinv::invariants::{basic_relative_invariants, semiinvariants_of_degree};
use pvsinv::pvscore::PVSpace;

fn main() {
    let g = symmetric_block();
    let vars = sym_variables();
    println!("dim g = {} acting on {} coordinates", g.dim(), g.n());

    for d in 1..=2 {
        for s in semiinvariants_of_degree(&g, d).unwrap() {
            let polys: Vec<String> = s.basis.iter().map(|f| f.display_with(&vars)).collect();
            println!("degree {d}, dim {}: {polys:?}", s.dim());
        }
    }

    let v0 = sym_point([[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
    let p = PVSpace::new(g, v0).unwrap();
    let b = basic_relative_invariants(&p, 9).unwrap();
    println!(
        "complete: {}, scanned up to degree {}",
        b.complete, b.max_degree_scanned
    );
    for (f, m) in b.basics.iter().zip(&b.multiplicities) {
        let lambda: Vec<String> = f.lambda.iter().map(ToString::to_string).collect();
        println!(
            "degree {} (multiplicity {m}): {}",
            f.degree(),
            f.f.display_with(&vars)
        );
        println!("    character {lambda:?}");
        assert!(f.verify(p.algebra()).unwrap());
    }
}
