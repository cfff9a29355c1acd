//! Stackedness in all its variants.
//!
//! A homology d-manifold with boundary is stacked when all its interior
//! faces have dimension ≥ d−1; a closed manifold is stacked when it bounds
//! a stacked manifold. The closed case is decided without ever producing a
//! bounding manifold: in dimension ≥ 4 stackedness coincides with local
//! stackedness, and in dimension 3 with the face-count equality
//! `f_1 − 4 f_0 + 10 = 10 β_1`.

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Face};
use crate::homology::betti;
use crate::linalg::FieldSpec;
use crate::recognition::{self, classify, Verdict};
use crate::{Error, Result};

/// A gluing trace for a stacked ball: facets in attachment order, each
/// facet after the first glued along a (d−1)-face of the complex built so
/// far.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCertificate {
    pub facets: Vec<Face>,
    /// `gluings[i]` is the (d−1)-face along which `facets[i + 1]` was
    /// attached.
    pub gluings: Vec<Face>,
}

impl TreeCertificate {
    pub fn single(facet: Face) -> TreeCertificate {
        TreeCertificate { facets: vec![facet], gluings: Vec::new() }
    }

    /// Rebuilds the complex from the trace.
    pub fn replay(&self) -> Result<Complex> {
        Complex::from_facets(self.facets.iter().cloned())
    }
}

/// Stackedness for a homology d-manifold with boundary: every interior
/// face has dimension ≥ d−1.
pub fn is_stacked_with_boundary(c: &Complex, field: FieldSpec) -> Result<bool> {
    let class = classify(c, field);
    if !class.verdict.is_manifold_with_boundary() {
        return Err(Error::pre(format!(
            "is_stacked_with_boundary needs a homology manifold with boundary, got {:?}",
            class.verdict
        )));
    }
    let d = c.dim();
    let interior = recognition::interior_faces(c, field)?;
    Ok(interior.iter().all(|f| f.dim() >= d - 1))
}

/// Decides whether a homology e-sphere is stacked by reverse construction:
/// repeatedly find a vertex whose link is the boundary of an e-simplex and
/// whose link vertices span no facet yet, and replace its star by the
/// single e-face on the link vertices. Accepts iff the reduction reaches
/// the boundary of an (e+1)-simplex.
pub fn is_stacked_sphere(c: &Complex, field: FieldSpec) -> Result<bool> {
    let class = classify(c, field);
    if class.verdict != Verdict::HomologySphere {
        return Err(Error::pre(format!(
            "is_stacked_sphere needs a homology sphere, got {:?}",
            class.verdict
        )));
    }
    let e = c.dim();
    if e < 1 {
        return Ok(true); // S^0 and {∅}
    }
    if e == 1 {
        return Ok(true); // every cycle is a stacked 1-sphere
    }
    let mut cur = c.clone();
    while cur.vertex_count() as i64 > e + 2 {
        let Some((v, link_face)) = reducible_vertex(&cur, e) else {
            return Ok(false);
        };
        let facets: Vec<Face> = cur
            .facets()
            .filter(|f| !f.contains(v))
            .cloned()
            .chain(std::iter::once(link_face))
            .collect();
        cur = Complex::from_facets(facets)?;
    }
    Ok(cur == normalize_to_labels(&Complex::boundary_simplex((e + 1) as u32), &cur))
}

/// Smallest-label vertex whose link is the boundary of an e-simplex and
/// whose link vertices do not already span a facet. Returns the vertex and
/// the e-face on its link vertices.
fn reducible_vertex(c: &Complex, e: i64) -> Option<(u32, Face)> {
    for &v in c.vertex_set() {
        let link = c.link(&Face::vertex(v)).expect("vertex");
        if link.vertex_count() as i64 != e + 1 {
            continue;
        }
        // ∂Δ^e: all e-subsets of e+1 vertices must be facets
        if link.facet_count() as i64 != e + 1 || link.dim() != e - 1 {
            continue;
        }
        let span = Face::new(link.vertex_set().iter().copied().collect());
        if !link.facets().all(|f| f.is_subset_of(&span)) {
            continue;
        }
        if c.is_facet(&span) {
            continue;
        }
        return Some((v, span));
    }
    None
}

/// Relabels `reference`'s copy of ∂Δ onto the vertex labels of `target`
/// for the final comparison of the reduction.
fn normalize_to_labels(reference: &Complex, target: &Complex) -> Complex {
    let map: std::collections::BTreeMap<u32, u32> = reference
        .vertex_set()
        .iter()
        .copied()
        .zip(target.vertex_set().iter().copied())
        .collect();
    reference.relabel(&map).expect("injective relabeling")
}

/// Kalai's criterion for a homology (d−1)-sphere, d ≥ 3: stacked iff the
/// 1-skeleton is chordal and there are no missing k-faces for 1 < k < d−1.
pub fn kalai_criterion(c: &Complex, field: FieldSpec) -> Result<bool> {
    let class = classify(c, field);
    if class.verdict != Verdict::HomologySphere || c.dim() < 2 {
        return Err(Error::pre(
            "kalai_criterion needs a homology sphere of dimension >= 2".to_string(),
        ));
    }
    let d = c.dim() + 1;
    if !c.is_chordal_skeleton() {
        return Ok(false);
    }
    for k in 2..(d - 1) {
        if !c.missing_faces(k as usize).is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Local stackedness: every vertex link is a stacked sphere or a stacked
/// ball.
pub fn is_locally_stacked(c: &Complex, field: FieldSpec) -> Result<bool> {
    let class = classify(c, field);
    if !class.verdict.is_manifold() {
        return Err(Error::pre(format!(
            "is_locally_stacked needs a homology manifold, got {:?}",
            class.verdict
        )));
    }
    let d = c.dim();
    for &v in c.vertex_set() {
        let link = c.link(&Face::vertex(v)).expect("vertex");
        let link_class = classify(&link, field);
        let ok = match link_class.verdict {
            Verdict::HomologySphere => is_stacked_sphere(&link, field)?,
            Verdict::HomologyBall | Verdict::HomologyManifoldWithBoundary => {
                let interior = recognition::interior_faces(&link, field)?;
                interior.iter().all(|f| f.dim() >= d - 2)
            }
            _ => false,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Stackedness of a connected closed homology d-manifold, d ≥ 3. For
/// d ≥ 4 this is local stackedness; for d = 3 the face-count equality
/// `f_1 − 4 f_0 + 10 = 10 β_1`.
pub fn is_stacked_closed(c: &Complex, field: FieldSpec) -> Result<bool> {
    let d = c.dim();
    if d < 3 {
        return Err(Error::pre(
            "is_stacked_closed is decidable only for dimension >= 3 (certificates cover d = 2)"
                .to_string(),
        ));
    }
    if !c.is_connected() {
        return Err(Error::Disconnected);
    }
    let class = classify(c, field);
    if !class.verdict.is_closed_manifold() {
        return Err(Error::pre(format!(
            "is_stacked_closed needs a closed homology manifold, got {:?}",
            class.verdict
        )));
    }
    if d >= 4 {
        is_locally_stacked(c, field)
    } else {
        let f = c.f_vector();
        let b1 = betti(c, field).b(1);
        let lhs = f.f(1) as i64 - 4 * f.f(0) as i64 + 10;
        Ok(lhs == 10 * b1 as i64)
    }
}

/// Extracts the gluing tree of a stacked manifold with boundary: facets as
/// nodes, interior (d−1)-faces as edges, ordered by a traversal from the
/// smallest facet.
pub fn tree_certificate(c: &Complex, field: FieldSpec) -> Result<TreeCertificate> {
    if !is_stacked_with_boundary(c, field)? {
        return Err(Error::pre("tree_certificate needs a stacked manifold".to_string()));
    }
    let facets: Vec<Face> = c.facets().cloned().collect();
    let mut shared: std::collections::HashMap<Face, Vec<usize>> = std::collections::HashMap::new();
    for (i, f) in facets.iter().enumerate() {
        for r in f.boundary_faces() {
            shared.entry(r).or_default().push(i);
        }
    }
    let mut adj: Vec<Vec<(usize, Face)>> = vec![Vec::new(); facets.len()];
    let mut edge_count = 0;
    for (ridge, owners) in &shared {
        if let [a, b] = owners[..] {
            adj[a].push((b, ridge.clone()));
            adj[b].push((a, ridge.clone()));
            edge_count += 1;
        }
    }
    if edge_count + 1 != facets.len() {
        return Err(Error::internal(format!(
            "facet adjacency graph of a stacked manifold must be a tree ({} facets, {} gluings)",
            facets.len(),
            edge_count
        )));
    }
    // BFS from the smallest facet; connectivity is re-verified as we go
    let mut order = Vec::with_capacity(facets.len());
    let mut glue = Vec::new();
    let mut seen = vec![false; facets.len()];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    order.push(facets[0].clone());
    while let Some(i) = queue.pop_front() {
        for (j, ridge) in &adj[i] {
            if !seen[*j] {
                seen[*j] = true;
                queue.push_back(*j);
                order.push(facets[*j].clone());
                glue.push(ridge.clone());
            }
        }
    }
    if order.len() != facets.len() {
        return Err(Error::internal(
            "facet adjacency graph of a stacked manifold must be connected".to_string(),
        ));
    }
    Ok(TreeCertificate { facets: order, gluings: glue })
}
