//! Seeded random constructors for stacked balls and spheres and for the
//! Walkup classes H̄^d(k) / H^d(k), together with replayable certificates.
//!
//! Certificates pin exact vertex labels: replaying one must reproduce the
//! complex facet for facet, because the surgery round trip itself is
//! label-exact.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Face};
use crate::recognition::pseudo_boundary;
use crate::stacked::TreeCertificate;
use crate::surgery::{enumerate_admissible, handle_add_boundary, FacetBijection, SurgeryMode};
use crate::{Error, Result};

/// Whether a certificate describes a ball-class member (H̄^d(k)) or its
/// boundary (H^d(k)).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Ball,
    Closed,
}

/// A replayable construction trace: a stacked d-ball built as a tree of
/// simplices, followed by `k` simplicial handle additions; `Closed` kind
/// means the final complex is the boundary of the replayed ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub d: u32,
    pub k: u32,
    pub base: TreeCertificate,
    pub handles: Vec<FacetBijection>,
}

impl Certificate {
    /// Rebuilds the complex the certificate describes.
    pub fn replay(&self) -> Result<Complex> {
        let mut cur = self.base.replay()?;
        for psi in &self.handles {
            cur = handle_add_boundary(&cur, psi)?;
        }
        match self.kind {
            CertificateKind::Ball => Ok(cur),
            CertificateKind::Closed => pseudo_boundary(&cur),
        }
    }
}

/// How many admissible bijections each handle step may look at.
const ADMISSIBLE_BUDGET: usize = 4096;

/// Builds a tree of `num_facets` d-simplices by repeatedly attaching a
/// fresh vertex over a random boundary ridge.
fn grow_tree(d: u32, num_facets: u64, rng: &mut ChaCha8Rng) -> (Complex, TreeCertificate) {
    let first = Face::new((0..=d).collect());
    let mut facets = vec![first.clone()];
    let mut gluings = Vec::new();
    let mut next_label = d + 1;
    for _ in 1..num_facets {
        // boundary ridges: (d-1)-subsets lying in exactly one facet so far
        let mut counts: std::collections::BTreeMap<Face, usize> = std::collections::BTreeMap::new();
        for f in &facets {
            for r in f.boundary_faces() {
                *counts.entry(r).or_insert(0) += 1;
            }
        }
        let ridges: Vec<Face> =
            counts.into_iter().filter(|&(_, n)| n == 1).map(|(r, _)| r).collect();
        let ridge = ridges[rng.gen_range(0..ridges.len())].clone();
        facets.push(ridge.with_vertex(next_label));
        gluings.push(ridge);
        next_label += 1;
    }
    let c = Complex::from_facets(facets.iter().cloned()).expect("nonempty facet list");
    (c, TreeCertificate { facets, gluings })
}

/// Random stacked d-ball: a tree of `num_facets` d-simplices.
pub fn gen_stacked_ball(d: u32, num_facets: u64, seed: u64) -> Result<(Complex, Certificate)> {
    if d < 1 || num_facets < 1 {
        return Err(Error::pre("gen_stacked_ball needs d >= 1 and num_facets >= 1".to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (c, base) = grow_tree(d, num_facets, &mut rng);
    let cert = Certificate { kind: CertificateKind::Ball, d, k: 0, base, handles: Vec::new() };
    Ok((c, cert))
}

/// Random stacked e-sphere on `n_vertices` vertices: the boundary of a
/// random stacked (e+1)-ball.
pub fn gen_stacked_sphere(e: u32, n_vertices: u64, seed: u64) -> Result<(Complex, Certificate)> {
    if e < 2 || n_vertices < (e + 2) as u64 {
        return Err(Error::pre("gen_stacked_sphere needs e >= 2 and n >= e + 2".to_string()));
    }
    let (ball, mut cert) = gen_stacked_ball(e + 1, n_vertices - (e as u64) - 1, seed)?;
    cert.kind = CertificateKind::Closed;
    Ok((pseudo_boundary(&ball)?, cert))
}

/// Random member of H̄^d(k): a stacked ball followed by `k` simplicial
/// handle additions. When no admissible pair exists the base is regrown
/// with extra facets (up to 8·(d+1) extra per handle) and the whole
/// construction restarts deterministically from the same RNG stream.
pub fn gen_hbar_member(
    d: u32,
    k: u32,
    base_facets: u64,
    seed: u64,
) -> Result<(Complex, Certificate)> {
    if d < 2 {
        return Err(Error::pre("gen_hbar_member needs d >= 2".to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let growth_cap = 8 * (d as u64 + 1) * (k as u64);
    let mut extra = 0u64;
    'attempt: loop {
        let (ball, base) = grow_tree(d, base_facets + extra, &mut rng);
        let mut cur = ball;
        let mut handles = Vec::with_capacity(k as usize);
        for _ in 0..k {
            let mut psis = enumerate_admissible(&cur, SurgeryMode::Boundary, ADMISSIBLE_BUDGET)?;
            if psis.is_empty() {
                extra += d as u64 + 1;
                if extra > growth_cap {
                    return Err(Error::BudgetExhausted(format!(
                        "no admissible handle pair after growing the base by {extra} facets"
                    )));
                }
                continue 'attempt;
            }
            psis.shuffle(&mut rng);
            let psi = psis.swap_remove(0);
            cur = handle_add_boundary(&cur, &psi)?;
            handles.push(psi);
        }
        let cert = Certificate { kind: CertificateKind::Ball, d, k, base, handles };
        return Ok((cur, cert));
    }
}

/// Random member of H^d(k): the boundary of a random H̄^d(k) member.
pub fn gen_walkup_closed(
    d: u32,
    k: u32,
    base_facets: u64,
    seed: u64,
) -> Result<(Complex, Certificate)> {
    if d < 3 {
        return Err(Error::pre("gen_walkup_closed needs d >= 3".to_string()));
    }
    let (ball, mut cert) = gen_hbar_member(d, k, base_facets, seed)?;
    cert.kind = CertificateKind::Closed;
    Ok((pseudo_boundary(&ball)?, cert))
}

/// Randomized search for an n-vertex neighborly member of H^d(k). Returns
/// the first hit within `budget` candidate evaluations, or `None`.
///
/// A base tree of m facets has d + m vertices and each handle identifies
/// away d of them, so candidates use m = n − d + k·d base facets.
pub fn search_neighborly_walkup(
    d: u32,
    n: u64,
    k: u32,
    seed: u64,
    budget: u64,
) -> Result<Option<(Complex, Certificate)>> {
    if d < 3 || n < (d as u64) + 1 {
        return Err(Error::pre("search_neighborly_walkup needs d >= 3 and n > d".to_string()));
    }
    let base_facets = n as i64 - d as i64 + (k as i64) * (d as i64);
    if base_facets < 1 {
        return Ok(None);
    }
    let base_facets = base_facets as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spent = 0u64;
    while spent < budget {
        let (ball, base) = grow_tree(d, base_facets, &mut rng);
        let mut cur = ball;
        let mut handles: Vec<FacetBijection> = Vec::new();
        // all but the last handle: pick one admissible pair at random
        let mut stuck = false;
        for _ in 1..k {
            let mut psis = enumerate_admissible(&cur, SurgeryMode::Boundary, ADMISSIBLE_BUDGET)?;
            if psis.is_empty() {
                stuck = true;
                break;
            }
            psis.shuffle(&mut rng);
            let psi = psis.swap_remove(0);
            cur = handle_add_boundary(&cur, &psi)?;
            handles.push(psi);
        }
        spent += 1;
        if stuck {
            continue;
        }
        if k == 0 {
            let bd = pseudo_boundary(&cur)?;
            if bd.vertex_count() as u64 == n && bd.is_neighborly() {
                let cert =
                    Certificate { kind: CertificateKind::Closed, d, k, base, handles };
                return Ok(Some((bd, cert)));
            }
            continue;
        }
        // last handle: try every admissible pair against the target
        let mut psis = enumerate_admissible(&cur, SurgeryMode::Boundary, ADMISSIBLE_BUDGET)?;
        psis.shuffle(&mut rng);
        for psi in psis {
            if spent >= budget {
                break;
            }
            spent += 1;
            let done = handle_add_boundary(&cur, &psi)?;
            let bd = pseudo_boundary(&done)?;
            if bd.vertex_count() as u64 == n && bd.is_neighborly() {
                let mut handles = handles.clone();
                handles.push(psi);
                let cert =
                    Certificate { kind: CertificateKind::Closed, d, k, base, handles };
                return Ok(Some((bd, cert)));
            }
        }
    }
    Ok(None)
}

/// Replays `cert` and compares with `c` facet-exactly; `Err` carries a
/// description of the first divergent step.
pub fn verify_certificate_detailed(
    c: &Complex,
    cert: &Certificate,
) -> std::result::Result<(), String> {
    if cert.k as usize != cert.handles.len() {
        return Err(format!(
            "certificate claims k = {} but records {} handle steps",
            cert.k,
            cert.handles.len()
        ));
    }
    let mut cur = cert
        .base
        .replay()
        .map_err(|e| format!("base tree does not replay: {e}"))?;
    for (i, psi) in cert.handles.iter().enumerate() {
        cur = handle_add_boundary(&cur, psi)
            .map_err(|e| format!("handle step {} does not replay: {e}", i + 1))?;
    }
    if cert.kind == CertificateKind::Closed {
        cur = pseudo_boundary(&cur).map_err(|e| format!("boundary step does not replay: {e}"))?;
    }
    if &cur != c {
        return Err("replayed complex differs from the given complex".to_string());
    }
    Ok(())
}

/// Replays `cert` and compares with `c` facet-exactly.
pub fn verify_certificate(c: &Complex, cert: &Certificate) -> bool {
    verify_certificate_detailed(c, cert).is_ok()
}
