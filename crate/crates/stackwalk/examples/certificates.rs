//! Certificates are serializable, replayable, and tamper-evident.
//!
//! Run with `cargo run --example certificates`.

use stackwalk::generators::{gen_hbar_member, verify_certificate, verify_certificate_detailed};
use stackwalk::Complex;

fn main() {
    let (h, cert) = gen_hbar_member(3, 1, 10, 4).unwrap();
    println!(
        "H-bar member: {} facets, base tree of {} simplices, {} handle(s)",
        h.facet_count(),
        cert.base.facets.len(),
        cert.handles.len(),
    );

    let json = serde_json::to_string_pretty(&cert).unwrap();
    println!("serialized certificate is {} bytes of JSON", json.len());
    let parsed = serde_json::from_str(&json).unwrap();
    assert_eq!(cert, parsed);
    println!("round trips through JSON: true");
    println!("verifies against its complex: {}", verify_certificate(&h, &cert));

    // replaying against the wrong complex reports the divergence
    let wrong = Complex::simplex(3);
    match verify_certificate_detailed(&wrong, &cert) {
        Ok(()) => unreachable!(),
        Err(step) => println!("against a tetrahedron instead: {step}"),
    }
}
