//! Exact simplicial homology over Q and finite fields.
//!
//! Run with `cargo run --example homology_basics`.

use stackwalk::homology::{betti, relative_betti};
use stackwalk::linalg::FieldSpec;
use stackwalk::{Complex, Face};

fn main() {
    // the 7-vertex Möbius–Kühnel torus
    let torus = Complex::from_facets((0u32..7).flat_map(|i| {
        [
            Face::new(vec![i, (i + 1) % 7, (i + 3) % 7]),
            Face::new(vec![i, (i + 2) % 7, (i + 3) % 7]),
        ]
    }))
    .unwrap();
    println!("torus f-vector: {:?}", torus.f_vector().0);
    for field in [FieldSpec::rationals(), FieldSpec::f2()] {
        println!("  reduced betti over {field}: {:?}", betti(&torus, field).betti);
    }

    // the 6-vertex projective plane: torsion shows up over F_2 only
    let rp2 = Complex::from_facets([
        [1u32, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
    ])
    .unwrap();
    println!("RP^2 over Q:   {:?}", betti(&rp2, FieldSpec::rationals()).betti);
    println!("RP^2 over F_2: {:?}", betti(&rp2, FieldSpec::f2()).betti);
    println!("RP^2 over F_3: {:?}", betti(&rp2, FieldSpec::prime(3).unwrap()).betti);

    // relative homology of the pair (D^3, S^2)
    let disc = Complex::simplex(3);
    let rim = Complex::boundary_simplex(3);
    let rel = relative_betti(&disc, &rim, FieldSpec::rationals()).unwrap();
    println!("H(D^3, S^2) over Q: {:?}", rel.betti);
}
