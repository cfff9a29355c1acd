//! Seeded generation of Walkup-class manifolds with certificates.
//!
//! Run with `cargo run --example generate_walkup`.

use stackwalk::generators::{gen_walkup_closed, verify_certificate};
use stackwalk::homology::betti;
use stackwalk::linalg::FieldSpec;
use stackwalk::stacked::is_stacked_closed;

fn main() {
    let f2 = FieldSpec::f2();
    for k in 0..=2u32 {
        let (m, cert) = gen_walkup_closed(4, k, 10 + 8 * k as u64, 5).unwrap();
        let f = m.f_vector();
        println!(
            "H^4({k}) member: f = {:?}, beta_1 = {}, f1 - 4 f0 + 10 = {}, stacked: {}, certificate verifies: {}",
            f.0,
            betti(&m, f2).b(1),
            f.f(1) as i64 - 4 * f.f(0) as i64 + 10,
            is_stacked_closed(&m, f2).unwrap(),
            verify_certificate(&m, &cert),
        );
    }
}
