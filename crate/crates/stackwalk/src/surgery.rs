//! Surgical calculus on homology manifolds: admissible bijections, handle
//! additions (closed and with-boundary), connected unions, and simplicial
//! handle deletion with its face-set decomposition.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Face};
use crate::linalg::FieldSpec;
use crate::recognition::{self, boundary_complex};
use crate::{Error, Result};

/// A vertex bijection ψ between two disjoint facets σ → τ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetBijection {
    pub sigma: Face,
    pub tau: Face,
    /// Pairs (v, ψ(v)) covering σ exactly.
    pub pairing: Vec<(u32, u32)>,
}

impl FacetBijection {
    pub fn new(sigma: Face, tau: Face, pairing: Vec<(u32, u32)>) -> Result<FacetBijection> {
        if !sigma.intersect(&tau).is_empty() {
            return Err(Error::pre(format!("facets {sigma:?} and {tau:?} are not disjoint")));
        }
        let sources: BTreeSet<u32> = pairing.iter().map(|&(v, _)| v).collect();
        let targets: BTreeSet<u32> = pairing.iter().map(|&(_, w)| w).collect();
        let sigma_set: BTreeSet<u32> = sigma.vertices().iter().copied().collect();
        let tau_set: BTreeSet<u32> = tau.vertices().iter().copied().collect();
        if sources != sigma_set || targets != tau_set || pairing.len() != sigma.len() {
            return Err(Error::pre(format!(
                "pairing {pairing:?} is not a bijection {sigma:?} -> {tau:?}"
            )));
        }
        Ok(FacetBijection { sigma, tau, pairing })
    }

    /// Pairs σ and τ in sorted vertex order.
    pub fn sorted(sigma: Face, tau: Face) -> Result<FacetBijection> {
        if sigma.len() != tau.len() {
            return Err(Error::pre("facets of unequal dimension".to_string()));
        }
        let pairing = sigma
            .vertices()
            .iter()
            .copied()
            .zip(tau.vertices().iter().copied())
            .collect();
        FacetBijection::new(sigma, tau, pairing)
    }

    /// ψ(v), defined only on σ.
    pub fn map(&self, v: u32) -> Option<u32> {
        self.pairing.iter().find(|&&(a, _)| a == v).map(|&(_, b)| b)
    }

    /// ψ_+: identity off σ, ψ on σ.
    pub fn psi_plus(&self, face: &Face) -> Face {
        Face::new(
            face.vertices()
                .iter()
                .map(|&v| self.map(v).unwrap_or(v))
                .collect(),
        )
    }
}

/// Where σ and τ must live for an addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurgeryMode {
    /// σ, τ facets of the (closed) complex itself.
    Closed,
    /// σ, τ facets of the boundary; links still taken in the full complex.
    Boundary,
}

/// Admissibility: lk(v) ∩ lk(ψ(v)) = {∅} for every v ∈ σ, which holds iff
/// the two links share no vertex.
pub fn is_admissible(c: &Complex, psi: &FacetBijection, mode: SurgeryMode) -> Result<bool> {
    let host = match mode {
        SurgeryMode::Closed => c.clone(),
        SurgeryMode::Boundary => recognition::pseudo_boundary(c)?,
    };
    if !host.is_facet(&psi.sigma) {
        return Err(Error::pre(format!("{:?} is not a facet of the host complex", psi.sigma)));
    }
    if !host.is_facet(&psi.tau) {
        return Err(Error::pre(format!("{:?} is not a facet of the host complex", psi.tau)));
    }
    for &(v, w) in &psi.pairing {
        let lv = c.link(&Face::vertex(v))?;
        let lw = c.link(&Face::vertex(w))?;
        if lv.vertex_set().intersection(lw.vertex_set()).next().is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Combinatorial handle addition Δ^ψ on a connected closed complex: drop
/// the facets σ and τ, then identify v with ψ(v).
pub fn handle_add_closed(c: &Complex, psi: &FacetBijection) -> Result<Complex> {
    if !c.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_admissible(c, psi, SurgeryMode::Closed)? {
        return Err(Error::pre(format!("bijection {:?} -> {:?} is not admissible", psi.sigma, psi.tau)));
    }
    let facets = c
        .facets()
        .filter(|f| **f != psi.sigma && **f != psi.tau)
        .map(|f| psi.psi_plus(f));
    Complex::from_facets(facets)
}

/// Simplicial handle addition Δ^ψ̄: identify v with ψ(v), keeping σ and τ.
/// Across two components this is the simplicial connected union.
pub fn handle_add_boundary(c: &Complex, psi: &FacetBijection) -> Result<Complex> {
    if !is_admissible(c, psi, SurgeryMode::Boundary)? {
        return Err(Error::pre(format!("bijection {:?} -> {:?} is not admissible", psi.sigma, psi.tau)));
    }
    Complex::from_facets(c.facets().map(|f| psi.psi_plus(f)))
}

/// Convenience connected union of two separate complexes: relabels `b` to
/// fresh labels above `a`, then glues the boundary facet `tau` of `b` onto
/// the boundary facet `sigma` of `a` in sorted vertex order. Returns the
/// union and the bijection actually used (τ in the fresh labels).
pub fn connected_union(
    a: &Complex,
    b: &Complex,
    sigma: &Face,
    tau: &Face,
) -> Result<(Complex, FacetBijection)> {
    let base = a.max_label().map_or(0, |m| m + 1);
    let relabel: BTreeMap<u32, u32> = b
        .vertex_set()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, base + i as u32))
        .collect();
    let b2 = b.relabel(&relabel)?;
    let tau2 = Face::new(tau.vertices().iter().map(|v| relabel[v]).collect());
    let both = Complex::from_facets(a.facets().cloned().chain(b2.facets().cloned()))?;
    let psi = FacetBijection::sorted(sigma.clone(), tau2)?;
    let glued = handle_add_boundary(&both, &psi)?;
    Ok((glued, psi))
}

/// The face sets of a simplicial handle deletion over σ.
#[derive(Clone, Debug)]
pub struct DeletionDecomposition {
    pub sigma: Face,
    /// The two facets containing σ are x∪σ and y∪σ; x is the smaller label.
    pub x: u32,
    pub y: u32,
    /// R_x(k) and R_y(k) indexed like σ's sorted vertices z_1..z_d.
    pub rx: Vec<BTreeSet<Face>>,
    pub ry: Vec<BTreeSet<Face>>,
    /// X = ∪ R_x(k) and Y = ∪ R_y(k).
    pub x_faces: BTreeSet<Face>,
    pub y_faces: BTreeSet<Face>,
    /// Fresh labels z_1^+..z_d^+ in σ's sorted order.
    pub fresh: Vec<u32>,
}

impl DeletionDecomposition {
    /// α ↦ α^+: replace each z_k by z_k^+.
    pub fn plus(&self, face: &Face) -> Face {
        let map: BTreeMap<u32, u32> = self
            .sigma
            .vertices()
            .iter()
            .copied()
            .zip(self.fresh.iter().copied())
            .collect();
        Face::new(
            face.vertices()
                .iter()
                .map(|v| map.get(v).copied().unwrap_or(*v))
                .collect(),
        )
    }
}

/// Builds and validates the X/Y partition for a deletion over σ: σ must be
/// an interior (d−1)-face with ∂σ̄ ⊆ ∂c contained in exactly two facets;
/// each link lk(z_k) must split into exactly two components off σ.
pub fn deletion_decomposition(
    c: &Complex,
    sigma: &Face,
    field: FieldSpec,
) -> Result<DeletionDecomposition> {
    let d = c.dim();
    if !c.has_face(sigma) || sigma.dim() != d - 1 {
        return Err(Error::pre(format!("{sigma:?} is not a (d-1)-face of the complex")));
    }
    let bd = boundary_complex(c, field)?;
    if bd.has_face(sigma) {
        return Err(Error::pre(format!("{sigma:?} is a boundary face, not interior")));
    }
    for rho in sigma.boundary_faces() {
        if !bd.has_face(&rho) {
            return Err(Error::pre(format!(
                "proper face {rho:?} of {sigma:?} is not on the boundary"
            )));
        }
    }
    let carriers: Vec<&Face> = c.facets().filter(|f| sigma.is_subset_of(f)).collect();
    if carriers.len() != 2 {
        return Err(Error::pre(format!(
            "{sigma:?} lies in {} facets, expected exactly 2",
            carriers.len()
        )));
    }
    let mut extra: Vec<u32> = carriers
        .iter()
        .map(|f| f.minus(sigma).vertices()[0])
        .collect();
    extra.sort_unstable();
    let (x, y) = (extra[0], extra[1]);

    // component split of each lk(z_k) off σ
    let zs = sigma.vertices().to_vec();
    let mut x_sides: Vec<BTreeSet<u32>> = Vec::with_capacity(zs.len());
    for &z in &zs {
        let link = c.link(&Face::vertex(z))?;
        let off: BTreeSet<u32> = link
            .vertex_set()
            .iter()
            .copied()
            .filter(|v| !sigma.contains(*v))
            .collect();
        let comps = link.induced(&off).connected_components();
        if comps.len() != 2 {
            return Err(Error::pre(format!(
                "link of {z} splits into {} components off {sigma:?}, expected 2",
                comps.len()
            )));
        }
        let xc = comps
            .into_iter()
            .find(|w| w.contains(&x))
            .ok_or_else(|| Error::internal(format!("no component of lk({z}) contains {x}")))?;
        x_sides.push(xc);
    }

    // R, R_x(k), R_y(k): membership of α∖{z_k} in the x-component is
    // decided by α's vertices outside σ, which all lie on one side
    let mut rx: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); zs.len()];
    let mut ry: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); zs.len()];
    for alpha in c.faces() {
        let meet = alpha.intersect(sigma);
        if meet.is_empty() || alpha.is_subset_of(sigma) {
            continue;
        }
        for (k, &z) in zs.iter().enumerate() {
            if !alpha.contains(z) {
                continue;
            }
            let outside: Vec<u32> = alpha
                .vertices()
                .iter()
                .copied()
                .filter(|v| !sigma.contains(*v))
                .collect();
            if outside.iter().all(|v| x_sides[k].contains(v)) {
                rx[k].insert(alpha.clone());
            } else {
                ry[k].insert(alpha.clone());
            }
        }
    }
    let x_faces: BTreeSet<Face> = rx.iter().flatten().cloned().collect();
    let y_faces: BTreeSet<Face> = ry.iter().flatten().cloned().collect();

    // Lemma 3.5 sanity: abort rather than emit a wrong complex
    if x_faces.intersection(&y_faces).next().is_some() {
        return Err(Error::internal("deletion decomposition has X ∩ Y ≠ ∅".to_string()));
    }
    for (k, &z) in zs.iter().enumerate() {
        let from_x: BTreeSet<Face> =
            x_faces.iter().filter(|a| a.contains(z)).cloned().collect();
        if from_x != rx[k] {
            return Err(Error::internal(format!(
                "deletion decomposition violates {{α ∈ X : z_k ∈ α}} = R_x(k) at z_k = {z}"
            )));
        }
    }

    let base = c.max_label().map_or(0, |m| m + 1);
    let fresh: Vec<u32> = (0..zs.len() as u32).map(|i| base + i).collect();
    Ok(DeletionDecomposition {
        sigma: sigma.clone(),
        x,
        y,
        rx,
        ry,
        x_faces,
        y_faces,
        fresh,
    })
}

/// Simplicial handle deletion: cut along σ, duplicating its vertices on
/// the x side. Returns Δ̃^σ and the regluing bijection ψ(z_i^+) = z_i,
/// so `handle_add_boundary(Δ̃^σ, ψ)` restores the input label-exactly.
pub fn handle_delete(
    c: &Complex,
    sigma: &Face,
    field: FieldSpec,
) -> Result<(Complex, FacetBijection)> {
    let dd = deletion_decomposition(c, sigma, field)?;
    let facets = c.facets().map(|f| {
        if dd.x_faces.contains(f) {
            dd.plus(f)
        } else {
            f.clone()
        }
    });
    let cut = Complex::from_facets(facets)?;
    let sigma_plus = Face::new(dd.fresh.clone());
    let pairing = dd
        .fresh
        .iter()
        .copied()
        .zip(sigma.vertices().iter().copied())
        .collect();
    let psi = FacetBijection::new(sigma_plus, sigma.clone(), pairing)?;
    Ok((cut, psi))
}

/// All admissible bijections of the complex in deterministic order
/// (lexicographic over σ, τ, pairing), truncated at `budget`.
pub fn enumerate_admissible(
    c: &Complex,
    mode: SurgeryMode,
    budget: usize,
) -> Result<Vec<FacetBijection>> {
    let host = match mode {
        SurgeryMode::Closed => c.clone(),
        SurgeryMode::Boundary => recognition::pseudo_boundary(c)?,
    };
    let facets: Vec<Face> = host.facets().cloned().collect();
    // per-vertex compatibility: links may not share a vertex
    let mut link_vertices: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
    for &v in c.vertex_set() {
        link_vertices.insert(v, c.link(&Face::vertex(v))?.vertex_set().clone());
    }
    let compatible = |a: u32, b: u32| link_vertices[&a].intersection(&link_vertices[&b]).next().is_none();

    let mut out = Vec::new();
    'outer: for (i, sigma) in facets.iter().enumerate() {
        for tau in facets.iter().skip(i + 1) {
            if !sigma.intersect(tau).is_empty() {
                continue;
            }
            for perm in tau.vertices().iter().copied().permutations(tau.len()) {
                let ok = sigma
                    .vertices()
                    .iter()
                    .zip(&perm)
                    .all(|(&v, &w)| compatible(v, w));
                if ok {
                    let pairing = sigma.vertices().iter().copied().zip(perm).collect();
                    out.push(FacetBijection::new(sigma.clone(), tau.clone(), pairing)?);
                    if out.len() >= budget {
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;
    use crate::homology::betti;
    use crate::recognition::classify;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    /// Path of `m` d-simplices glued end to end on vertices 0..m+d.
    fn path_of_simplices(d: u32, m: u32) -> Complex {
        let facets = (0..m).map(|i| Face::new((i..i + d + 1).collect()));
        Complex::from_facets(facets).unwrap()
    }

    fn path_of_tetrahedra(m: u32) -> Complex {
        path_of_simplices(3, m)
    }

    #[test]
    fn admissibility() {
        // facets of ∂Δ^4 pairwise intersect: constructor refuses
        let c = Complex::boundary_simplex(4);
        let f: Vec<Face> = c.facets().cloned().collect();
        assert!(FacetBijection::sorted(f[0].clone(), f[1].clone()).is_err());
        assert!(enumerate_admissible(&c, SurgeryMode::Closed, 100).unwrap().is_empty());

        // long tube: far-apart end facets are admissible
        let tube = path_of_tetrahedra(8);
        let psi = FacetBijection::sorted(Face::from([0, 1, 2]), Face::from([8, 9, 10])).unwrap();
        assert!(is_admissible(&tube, &psi, SurgeryMode::Boundary).unwrap());

        // short tube: links overlap
        let short = path_of_tetrahedra(3);
        let psi = FacetBijection::sorted(Face::from([0, 1, 2]), Face::from([3, 4, 5])).unwrap();
        assert!(!is_admissible(&short, &psi, SurgeryMode::Boundary).unwrap());
    }

    #[test]
    fn closed_addition_on_a_stacked_sphere() {
        let ball = path_of_simplices(4, 12);
        let sphere = crate::recognition::boundary_complex(&ball, q()).unwrap();
        let psis = enumerate_admissible(&sphere, SurgeryMode::Closed, 1).unwrap();
        assert!(!psis.is_empty());
        let before = sphere.f_vector();
        let after_c = handle_add_closed(&sphere, &psis[0]).unwrap();
        let after = after_c.f_vector();
        assert_eq!(after.f(0), before.f(0) - 4);
        assert_eq!(betti(&after_c, q()).b(1), betti(&sphere, q()).b(1) + 1);
        assert!(classify(&after_c, q()).verdict.is_closed_manifold());
    }

    #[test]
    fn boundary_addition_and_union() {
        // connected union of two 3-simplices = two facets sharing a triangle
        let (u, _) = connected_union(
            &Complex::simplex(3),
            &Complex::simplex(3),
            &Face::from([1, 2, 3]),
            &Face::from([0, 1, 2]),
        )
        .unwrap();
        assert_eq!(u.facet_count(), 2);
        assert_eq!(u.vertex_count(), 5);
        assert!(crate::stacked::is_stacked_with_boundary(&u, q()).unwrap());

        // same-component addition on a tube: β_1 goes up by one
        let tube = path_of_tetrahedra(8);
        let psi = FacetBijection::sorted(Face::from([0, 1, 2]), Face::from([8, 9, 10])).unwrap();
        let solid = handle_add_boundary(&tube, &psi).unwrap();
        assert_eq!(betti(&solid, q()).b(1), 1);
        assert!(classify(&solid, q()).verdict.is_manifold_with_boundary());
        assert!(crate::stacked::is_stacked_with_boundary(&solid, q()).unwrap());
    }

    #[test]
    fn deletion_smallest_case() {
        let c = two_tetrahedra();
        let sigma = Face::from([1, 2, 3]);
        let dd = deletion_decomposition(&c, &sigma, q()).unwrap();
        assert_eq!((dd.x, dd.y), (0, 4));
        assert!(dd.x_faces.intersection(&dd.y_faces).next().is_none());
        let (cut, psi) = handle_delete(&c, &sigma, q()).unwrap();
        assert_eq!(cut.vertex_count(), 8);
        assert_eq!(betti(&cut, q()).b(0), 1); // reduced: two components
        let glued = handle_add_boundary(&cut, &psi).unwrap();
        assert_eq!(glued, c);
    }

    #[test]
    fn deletion_of_a_handle() {
        let tube = path_of_tetrahedra(8);
        let psi = FacetBijection::sorted(Face::from([0, 1, 2]), Face::from([8, 9, 10])).unwrap();
        let solid = handle_add_boundary(&tube, &psi).unwrap();
        // {0,1,2} was identified onto {8,9,10}: that is the cut face
        let sigma = Face::from([8, 9, 10]);
        let (cut, back) = handle_delete(&solid, &sigma, q()).unwrap();
        assert_eq!(betti(&cut, q()).b(1), 0);
        assert_eq!(betti(&cut, q()).b(0), 0);
        let glued = handle_add_boundary(&cut, &back).unwrap();
        assert_eq!(glued, solid);
    }

    #[test]
    fn deletion_preconditions() {
        let c = two_tetrahedra();
        assert!(deletion_decomposition(&c, &Face::from([0, 1, 2]), q()).is_err()); // boundary face
        assert!(deletion_decomposition(&c, &Face::from([1, 2]), q()).is_err()); // wrong dim
    }

    #[test]
    fn enumeration_is_relabel_invariant() {
        let tube = path_of_tetrahedra(8);
        let n = enumerate_admissible(&tube, SurgeryMode::Boundary, 10_000).unwrap().len();
        let map: std::collections::BTreeMap<u32, u32> =
            tube.vertex_set().iter().map(|&v| (v, 3 * v + 11)).collect();
        let relabeled = tube.relabel(&map).unwrap();
        let m = enumerate_admissible(&relabeled, SurgeryMode::Boundary, 10_000).unwrap().len();
        assert_eq!(n, m);
        assert!(n > 0);
    }
}
