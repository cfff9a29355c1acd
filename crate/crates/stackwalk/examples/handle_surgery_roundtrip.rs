//! Cutting a manifold along an interior face and regluing it, exactly.
//!
//! Run with `cargo run --example handle_surgery_roundtrip`.

use stackwalk::homology::betti;
use stackwalk::linalg::FieldSpec;
use stackwalk::surgery::{handle_add_boundary, handle_delete, FacetBijection};
use stackwalk::{Complex, Face};

fn main() {
    let q = FieldSpec::rationals();

    // a solid handle: tube of 8 tetrahedra with its ends glued together
    let tube = Complex::from_facets((0u32..8).map(|i| Face::new((i..i + 4).collect()))).unwrap();
    let psi = FacetBijection::sorted(Face::from([0, 1, 2]), Face::from([8, 9, 10])).unwrap();
    let solid = handle_add_boundary(&tube, &psi).unwrap();
    println!("solid handle: f = {:?}, beta_1 = {}", solid.f_vector().0, betti(&solid, q).b(1));

    // cut it back open along the glued triangle
    let (cut, reglue) = handle_delete(&solid, &Face::from([8, 9, 10]), q).unwrap();
    println!("after deletion: f = {:?}, beta_1 = {}", cut.f_vector().0, betti(&cut, q).b(1));
    println!("regluing bijection: {:?} -> {:?}", reglue.sigma, reglue.tau);

    // the round trip restores the input facet for facet, same labels
    let back = handle_add_boundary(&cut, &reglue).unwrap();
    assert_eq!(back, solid);
    println!("round trip is label-exact: {}", back == solid);
}
