//! Brute-force F-tightness and the numeric tightness criteria.
//!
//! Tightness quantifies over every vertex subset W and every degree i:
//! the map H̃_i(Δ[W]) → H̃_i(Δ) induced by inclusion must be injective.
//! The 2^n loop is the bottleneck, so subsets whose induced complex is a
//! cone (trivial homology) are skipped, and the ambient chain data is
//! built once and shared.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::complex::Complex;
use crate::homology::{betti, inclusion_induced_with, ChainData};
use crate::linalg::FieldSpec;
use crate::recognition::classify;
use crate::stacked;
use crate::{Error, Result};

/// Hard cap on brute-force vertex counts unless the caller raises it.
pub const DEFAULT_GUARD: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessReport {
    pub field: FieldSpec,
    pub tight: bool,
    /// First failing (W, degree), in size-descending subset order.
    pub witness: Option<(BTreeSet<u32>, i64)>,
    pub subsets_checked: u64,
}

/// Every facet contains some common vertex: the complex is a cone, hence
/// contractible, hence injectivity is automatic.
fn is_cone(c: &Complex) -> bool {
    c.vertex_set()
        .iter()
        .any(|&v| c.facets().all(|f| f.contains(v)))
}

/// Brute-force F-tightness over all vertex subsets. Subsets are visited
/// largest-first, so a reported witness is a maximal failing subcomplex
/// rather than a bare vertex pair.
pub fn is_tight(
    c: &Complex,
    field: FieldSpec,
    guard_max_vertices: usize,
) -> Result<TightnessReport> {
    let verts: Vec<u32> = c.vertex_set().iter().copied().collect();
    let n = verts.len();
    if n > guard_max_vertices {
        return Err(Error::GuardExceeded { vertices: n, guard: guard_max_vertices });
    }
    if !c.is_connected() {
        return Ok(TightnessReport { field, tight: false, witness: None, subsets_checked: 0 });
    }
    let ambient = ChainData::build(c);
    let mut checked = 0u64;
    for size in (0..=n).rev() {
        for combo in verts.iter().copied().combinations(size) {
            checked += 1;
            if size == 0 || size == n {
                // void complex / identity map
                continue;
            }
            let w: BTreeSet<u32> = combo.into_iter().collect();
            let ind = c.induced(&w);
            if is_cone(&ind) {
                continue;
            }
            for i in 0..=ind.dim() {
                let rep = inclusion_induced_with(&ind, &ambient, i, field)?;
                if !rep.injective {
                    return Ok(TightnessReport {
                        field,
                        tight: false,
                        witness: Some((w, i)),
                        subsets_checked: checked,
                    });
                }
            }
        }
    }
    Ok(TightnessReport { field, tight: true, witness: None, subsets_checked: checked })
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut out = 1i64;
    for j in 0..k {
        out = out * (n - j) / (j + 1);
    }
    out
}

/// The exact-integer criteria of the tightness circle of results.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriteriaReport {
    pub d: i64,
    pub f0: u64,
    pub f1: u64,
    /// β_1 over the requested field.
    pub beta1: u64,
    /// β_1 over Z/2, which is what tight-neighborliness is defined with.
    pub beta1_f2: u64,
    /// f_1 − (d+1)·f_0 + C(d+2, 2)
    pub ns_lhs: i64,
    /// C(d+2, 2)·β_1
    pub ns_rhs: i64,
    pub tight_neighborly: bool,
    /// d = 3 only: f_1 − 4f_0 + 10 = 10·β_1
    pub bagchi_equal: Option<bool>,
    /// d = 3 only: (f_0 − 4)(f_0 − 5) = 20·β_1
    pub bds_equal: Option<bool>,
}

pub fn criteria(c: &Complex, field: FieldSpec) -> Result<CriteriaReport> {
    let d = c.dim();
    if d < 3 {
        return Err(Error::pre("criteria needs a closed homology manifold of dimension >= 3".to_string()));
    }
    if !c.is_connected() {
        return Err(Error::Disconnected);
    }
    let class = classify(c, field);
    if !class.verdict.is_closed_manifold() {
        return Err(Error::pre(format!(
            "criteria needs a closed homology manifold, got {:?}",
            class.verdict
        )));
    }
    let f = c.f_vector();
    let (f0, f1) = (f.f(0), f.f(1));
    let beta1 = betti(c, field).b(1);
    let beta1_f2 = betti(c, FieldSpec::f2()).b(1);
    let ns_lhs = f1 as i64 - (d + 1) * f0 as i64 + binom(d + 2, 2);
    let ns_rhs = binom(d + 2, 2) * beta1 as i64;
    let tight_neighborly = binom(f0 as i64 - d - 1, 2) == binom(d + 2, 2) * beta1_f2 as i64;
    let (bagchi_equal, bds_equal) = if d == 3 {
        (
            Some(f1 as i64 - 4 * f0 as i64 + 10 == 10 * beta1 as i64),
            Some((f0 as i64 - 4) * (f0 as i64 - 5) == 20 * beta1 as i64),
        )
    } else {
        (None, None)
    };
    Ok(CriteriaReport {
        d,
        f0,
        f1,
        beta1,
        beta1_f2,
        ns_lhs,
        ns_rhs,
        tight_neighborly,
        bagchi_equal,
        bds_equal,
    })
}

/// One leg each of the equivalence theorems, evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub tight_neighborly: bool,
    pub neighborly_and_stacked: bool,
    pub neighborly_and_locally_stacked: bool,
    /// F-tight with β_i = 0 for 1 < i < d−1; `None` when the vertex guard
    /// forced the brute-force leg to be skipped.
    pub f_tight_vanishing: Option<bool>,
    /// d = 3 only: the (f_0 − 4)(f_0 − 5) = 20·β_1 identity.
    pub bds_identity: Option<bool>,
    /// All evaluated legs returned the same answer.
    pub agree: bool,
}

pub fn equivalence_report(
    c: &Complex,
    field: FieldSpec,
    guard_max_vertices: usize,
) -> Result<EquivalenceReport> {
    let crit = criteria(c, field)?;
    let d = crit.d;
    let neighborly = c.is_neighborly();
    let stacked_leg = neighborly && stacked::is_stacked_closed(c, field)?;
    let locally_leg = neighborly && stacked::is_locally_stacked(c, field)?;
    let f_tight_vanishing = match is_tight(c, field, guard_max_vertices) {
        Ok(rep) => {
            let b = betti(c, field);
            let vanishing = (2..(d - 1)).all(|i| b.b(i) == 0);
            Some(rep.tight && vanishing)
        }
        Err(Error::GuardExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let legs: Vec<bool> = [
        Some(crit.tight_neighborly),
        Some(stacked_leg),
        Some(locally_leg),
        f_tight_vanishing,
        crit.bds_equal,
    ]
    .into_iter()
    .flatten()
    .collect();
    let agree = legs.windows(2).all(|w| w[0] == w[1]);
    Ok(EquivalenceReport {
        tight_neighborly: crit.tight_neighborly,
        neighborly_and_stacked: stacked_leg,
        neighborly_and_locally_stacked: locally_leg,
        f_tight_vanishing,
        bds_identity: crit.bds_equal,
        agree,
    })
}

/// For every k with β_{k−1} = 0, a tight complex must have no missing
/// k-faces; returns the conjunction of those emptiness checks.
pub fn missing_face_vanishing_check(c: &Complex, field: FieldSpec) -> bool {
    let b = betti(c, field);
    let d = c.dim();
    for k in 1..=(d + 1) {
        if b.b(k - 1) == 0 && !c.missing_faces(k as usize).is_empty() {
            return false;
        }
    }
    true
}
