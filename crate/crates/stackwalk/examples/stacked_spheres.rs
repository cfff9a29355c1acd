//! Three independent characterizations of stacked spheres, agreeing.
//!
//! Run with `cargo run --example stacked_spheres`.

use stackwalk::generators::gen_stacked_sphere;
use stackwalk::linalg::FieldSpec;
use stackwalk::stacked::{is_stacked_sphere, kalai_criterion};
use stackwalk::{Complex, Face};

fn main() {
    let q = FieldSpec::rationals();

    for n in [6u64, 12, 20] {
        let (s, _) = gen_stacked_sphere(2, n, n).unwrap();
        println!(
            "random 2-sphere on {n} vertices: f = {:?}, reduction oracle {}, Kalai {}",
            s.f_vector().0,
            is_stacked_sphere(&s, q).unwrap(),
            kalai_criterion(&s, q).unwrap(),
        );
    }

    // the octahedron is the smallest non-stacked 2-sphere
    let mut facets = Vec::new();
    for a in [1u32, 2] {
        for b in [3u32, 4] {
            for c in [5u32, 6] {
                facets.push(Face::new(vec![a, b, c]));
            }
        }
    }
    let oct = Complex::from_facets(facets).unwrap();
    println!(
        "octahedron: reduction oracle {}, Kalai {} (missing 2-faces: {:?})",
        is_stacked_sphere(&oct, q).unwrap(),
        kalai_criterion(&oct, q).unwrap(),
        oct.missing_faces(1).len(),
    );
}
