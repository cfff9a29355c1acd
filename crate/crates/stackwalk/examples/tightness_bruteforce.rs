//! Brute-force F-tightness over every vertex subset.
//!
//! Run with `cargo run --example tightness_bruteforce`.

use stackwalk::linalg::FieldSpec;
use stackwalk::tightness::{is_tight, DEFAULT_GUARD};
use stackwalk::{Complex, Face};

fn main() {
    let f2 = FieldSpec::f2();

    let torus = Complex::from_facets((0u32..7).flat_map(|i| {
        [
            Face::new(vec![i, (i + 1) % 7, (i + 3) % 7]),
            Face::new(vec![i, (i + 2) % 7, (i + 3) % 7]),
        ]
    }))
    .unwrap();
    let rep = is_tight(&torus, f2, DEFAULT_GUARD).unwrap();
    println!("7-vertex torus: tight = {} ({} subsets checked)", rep.tight, rep.subsets_checked);

    let mut facets = Vec::new();
    for a in [1u32, 2] {
        for b in [3u32, 4] {
            for c in [5u32, 6] {
                facets.push(Face::new(vec![a, b, c]));
            }
        }
    }
    let oct = Complex::from_facets(facets).unwrap();
    let rep = is_tight(&oct, f2, DEFAULT_GUARD).unwrap();
    let (w, i) = rep.witness.clone().unwrap();
    println!("octahedron: tight = {}, witness W = {w:?} in degree {i}", rep.tight);
    println!("  (the induced subcomplex on W is a 4-cycle whose H_1 dies in the sphere)");
}
