//! Recognition of homology spheres, balls and manifolds, and boundary
//! extraction.
//!
//! Run with `cargo run --example recognize_manifolds`.

use stackwalk::linalg::FieldSpec;
use stackwalk::recognition::{boundary_complex, classify, interior_faces};
use stackwalk::{Complex, Face};

fn main() {
    let q = FieldSpec::rationals();

    let sphere = Complex::boundary_simplex(4);
    println!("boundary of the 4-simplex: {:?}", classify(&sphere, q).verdict);

    let ball = Complex::from_facets([[0u32, 1, 2, 3], [1, 2, 3, 4]]).unwrap();
    println!("two glued tetrahedra:      {:?}", classify(&ball, q).verdict);

    let bd = boundary_complex(&ball, q).unwrap();
    println!("  its boundary has {} triangles (a stacked 2-sphere)", bd.facet_count());
    println!("  interior faces: {:?}", interior_faces(&ball, q).unwrap());

    // a wedge of two triangles is not a manifold: the shared vertex has a
    // disconnected link
    let wedge = Complex::from_facets([[0u32, 1, 2], [0, 3, 4]]).unwrap();
    let class = classify(&wedge, q);
    println!("wedge of two triangles:    {:?} (witness {:?})", class.verdict, class.witness);

    // links drive everything: check one explicitly
    let link = ball.link(&Face::from([1, 2])).unwrap();
    println!("link of the edge {{1 2}}:    facets {:?}", link.facets().collect::<Vec<_>>());
}
