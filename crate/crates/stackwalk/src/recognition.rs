//! Recognition of homology spheres, balls and manifolds, and boundary
//! extraction.
//!
//! The definitions are recursive over the face poset: a complex is a
//! homology d-sphere when every link (including the link of ∅, the complex
//! itself) has the field homology of a sphere of the complementary
//! dimension; a ball additionally has trivial global homology and a
//! boundary — the faces whose links have vanishing top reduced homology —
//! that is itself a homology sphere. Links of faces of the ambient complex
//! are memoized per invocation, since `lk_{lk(σ)}(τ) = lk(σ ∪ τ)`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Face};
use crate::homology::{betti, BettiVector};
use crate::linalg::FieldSpec;
use crate::{Error, Result};

/// Classification verdict for a complex.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HomologySphere,
    HomologyBall,
    ClosedHomologyManifold,
    HomologyManifoldWithBoundary,
    NotAHomologyManifold,
}

impl Verdict {
    /// Sphere implies closed manifold; ball implies manifold with boundary.
    pub fn is_closed_manifold(self) -> bool {
        matches!(self, Verdict::HomologySphere | Verdict::ClosedHomologyManifold)
    }

    pub fn is_manifold_with_boundary(self) -> bool {
        matches!(self, Verdict::HomologyBall | Verdict::HomologyManifoldWithBoundary)
    }

    pub fn is_manifold(self) -> bool {
        !matches!(self, Verdict::NotAHomologyManifold)
    }
}

/// Result of [`classify`], with a witness face on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldClass {
    pub verdict: Verdict,
    pub field: FieldSpec,
    pub witness: Option<Face>,
}

/// Memoizes the Betti vectors of the links of faces of one fixed complex.
struct Classifier<'a> {
    c: &'a Complex,
    field: FieldSpec,
    memo: HashMap<Face, BettiVector>,
}

impl<'a> Classifier<'a> {
    fn new(c: &'a Complex, field: FieldSpec) -> Self {
        Classifier { c, field, memo: HashMap::new() }
    }

    fn link_betti(&mut self, f: &Face) -> BettiVector {
        if let Some(b) = self.memo.get(f) {
            return b.clone();
        }
        let b = betti(&self.c.link(f).expect("face of the complex"), self.field);
        self.memo.insert(f.clone(), b.clone());
        b
    }

    /// Is `lk(prefix)` a homology sphere of its own dimension?
    fn link_is_sphere(&mut self, prefix: &Face) -> Option<Face> {
        let link = self.c.link(prefix).expect("face of the complex");
        let d = link.dim();
        // the ∅ link first: cheap global rejection
        let mut faces: Vec<Face> = link.faces().into_iter().collect();
        faces.sort_by_key(|f| f.len());
        for tau in faces {
            let b = self.link_betti(&prefix.union(&tau));
            if !b.is_sphere(d - tau.dim() - 1) {
                return Some(tau);
            }
        }
        None
    }

    /// Is `lk(prefix)` a homology ball of its own dimension? Checks the
    /// three conditions of the definition; returns a witness face on
    /// failure.
    fn link_is_ball(&mut self, prefix: &Face) -> Option<Face> {
        let link = self.c.link(prefix).expect("face of the complex");
        let d = link.dim();
        if d < 0 {
            return Some(Face::empty()); // {∅} is a sphere, not a ball
        }
        // (i) trivial reduced homology
        if !self.link_betti(prefix).is_trivial() {
            return Some(Face::empty());
        }
        // (ii) every link trivial or sphere-like
        for tau in link.faces() {
            if tau.dim() >= d {
                continue;
            }
            let b = self.link_betti(&prefix.union(&tau));
            if !(b.is_trivial() || b.is_sphere(d - tau.dim() - 1)) {
                return Some(tau);
            }
        }
        // (iii) the boundary is a homology (d−1)-sphere
        match eq1_boundary(&link, |tau| self.link_betti(&prefix.union(tau))) {
            Ok(bd) => {
                if bd.dim() != d - 1 {
                    return Some(Face::empty());
                }
                let mut sub = Classifier::new(&bd, self.field);
                sub.link_is_sphere(&Face::empty())
            }
            Err(Error::BoundaryNotClosed(f)) => Some(f),
            Err(_) => Some(Face::empty()),
        }
    }
}

/// The boundary per the homology-vanishing condition: faces σ with
/// `−1 < dim σ < d` whose link has vanishing top reduced homology, plus ∅.
/// Validated to be downward closed.
fn eq1_boundary(
    c: &Complex,
    mut link_betti: impl FnMut(&Face) -> BettiVector,
) -> Result<Complex> {
    let d = c.dim();
    if !c.is_pure() {
        return Err(Error::NotPure { expected: d });
    }
    if d <= 0 {
        return Ok(Complex::empty_complex());
    }
    let mut boundary: BTreeSet<Face> = BTreeSet::new();
    // fast path for (d−1)-faces: boundary iff contained in exactly one facet
    for f in c.faces_of_dim(d - 1) {
        let count = c.facets().filter(|t| f.is_subset_of(t)).count();
        if count == 1 {
            boundary.insert(f);
        }
    }
    for dim in 0..d - 1 {
        for f in c.faces_of_dim(dim) {
            if link_betti(&f).b(d - dim - 1) == 0 {
                boundary.insert(f);
            }
        }
    }
    // Eq. (1) yields a set of faces; closure under subsets is validated,
    // not assumed (it can fail off the manifold world)
    for f in &boundary {
        for b in f.boundary_faces() {
            if !b.is_empty() && !boundary.contains(&b) {
                return Err(Error::BoundaryNotClosed(f.clone()));
            }
        }
    }
    if boundary.is_empty() {
        Ok(Complex::empty_complex())
    } else {
        Complex::from_facets(boundary)
    }
}

/// The boundary complex `∂c` of a pure complex, per the homology-vanishing
/// condition with the facet-count fast path in codimension 1. Returns `{∅}`
/// for a closed complex.
pub fn boundary_complex(c: &Complex, field: FieldSpec) -> Result<Complex> {
    let mut cls = Classifier::new(c, field);
    eq1_boundary(c, |f| cls.link_betti(f))
}

/// Purely combinatorial boundary of a pure complex: the downward closure of
/// the (d−1)-faces lying in exactly one facet. Agrees with
/// [`boundary_complex`] on homology manifolds and needs no field.
pub fn pseudo_boundary(c: &Complex) -> Result<Complex> {
    let d = c.dim();
    if !c.is_pure() {
        return Err(Error::NotPure { expected: d });
    }
    if d <= 0 {
        return Ok(Complex::empty_complex());
    }
    let ridges: Vec<Face> = c
        .faces_of_dim(d - 1)
        .into_iter()
        .filter(|f| c.facets().filter(|t| f.is_subset_of(t)).count() == 1)
        .collect();
    if ridges.is_empty() {
        Ok(Complex::empty_complex())
    } else {
        Complex::from_facets(ridges)
    }
}

/// Classifies a complex as homology sphere / ball / closed manifold /
/// manifold with boundary, or reports a witness face where the recursive
/// definitions fail. Total: never errors on bad input.
pub fn classify(c: &Complex, field: FieldSpec) -> ManifoldClass {
    let mut cls = Classifier::new(c, field);
    if cls.link_is_sphere(&Face::empty()).is_none() {
        return ManifoldClass { verdict: Verdict::HomologySphere, field, witness: None };
    }
    if c.is_pure() && cls.link_is_ball(&Face::empty()).is_none() {
        return ManifoldClass { verdict: Verdict::HomologyBall, field, witness: None };
    }
    let d = c.dim();
    for &v in c.vertex_set() {
        let vf = Face::vertex(v);
        let link = c.link(&vf).expect("vertex of the complex");
        if link.dim() != d - 1 {
            return ManifoldClass {
                verdict: Verdict::NotAHomologyManifold,
                field,
                witness: Some(vf),
            };
        }
        if cls.link_is_sphere(&vf).is_some() && cls.link_is_ball(&vf).is_some() {
            return ManifoldClass {
                verdict: Verdict::NotAHomologyManifold,
                field,
                witness: Some(vf),
            };
        }
    }
    match eq1_boundary(c, |f| cls.link_betti(f)) {
        Ok(bd) => {
            if bd == Complex::empty_complex() {
                ManifoldClass { verdict: Verdict::ClosedHomologyManifold, field, witness: None }
            } else {
                ManifoldClass {
                    verdict: Verdict::HomologyManifoldWithBoundary,
                    field,
                    witness: None,
                }
            }
        }
        Err(Error::BoundaryNotClosed(f)) => {
            ManifoldClass { verdict: Verdict::NotAHomologyManifold, field, witness: Some(f) }
        }
        Err(_) => ManifoldClass {
            verdict: Verdict::NotAHomologyManifold,
            field,
            witness: None,
        },
    }
}

/// Faces of a homology manifold with boundary that are not in the boundary.
pub fn interior_faces(c: &Complex, field: FieldSpec) -> Result<Vec<Face>> {
    let class = classify(c, field);
    if !class.verdict.is_manifold_with_boundary() {
        return Err(Error::pre(format!(
            "interior_faces needs a homology manifold with boundary, got {:?}",
            class.verdict
        )));
    }
    let bd = boundary_complex(c, field)?;
    Ok(c.faces()
        .into_iter()
        .filter(|f| !f.is_empty() && !bd.has_face(f))
        .collect())
}

/// Pseudomanifold test: pure, every (d−1)-face in at most two facets, and
/// the facet adjacency graph (facets sharing a (d−1)-face) connected.
pub fn is_pseudomanifold(c: &Complex) -> Result<bool> {
    let d = c.dim();
    if !c.is_pure() {
        return Err(Error::NotPure { expected: d });
    }
    if d < 1 {
        return Ok(c.facet_count() == 1);
    }
    let facets: Vec<&Face> = c.facets().collect();
    let mut ridge_owners: HashMap<Face, Vec<usize>> = HashMap::new();
    for (i, f) in facets.iter().enumerate() {
        for r in f.boundary_faces() {
            ridge_owners.entry(r).or_default().push(i);
        }
    }
    if ridge_owners.values().any(|o| o.len() > 2) {
        return Ok(false);
    }
    // connectivity of the facet adjacency graph
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); facets.len()];
    for owners in ridge_owners.values() {
        if let [a, b] = owners[..] {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; facets.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    Ok(seen.into_iter().all(|s| s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }
    fn f2() -> FieldSpec {
        FieldSpec::f2()
    }

    #[test]
    fn boundary_of_simplex() {
        for d in 1..=4u32 {
            let bd = boundary_complex(&Complex::simplex(d), q()).unwrap();
            assert_eq!(bd, Complex::boundary_simplex(d));
        }
        assert_eq!(
            boundary_complex(&Complex::boundary_simplex(3), q()).unwrap(),
            Complex::empty_complex()
        );
    }

    #[test]
    fn boundary_of_glued_tetrahedra() {
        let bd = boundary_complex(&two_tetrahedra(), q()).unwrap();
        assert_eq!(bd.facet_count(), 6);
        assert_eq!(bd.dim(), 2);
        assert!(!bd.has_face(&Face::from([1, 2, 3])));
        assert_eq!(classify(&bd, q()).verdict, Verdict::HomologySphere);
    }

    #[test]
    fn classification() {
        for d in 1..=4u32 {
            assert_eq!(
                classify(&Complex::boundary_simplex(d + 1), q()).verdict,
                Verdict::HomologySphere
            );
            assert_eq!(classify(&Complex::simplex(d), q()).verdict, Verdict::HomologyBall);
        }
        assert_eq!(classify(&rp2_6(), f2()).verdict, Verdict::ClosedHomologyManifold);
        assert_eq!(classify(&rp2_6(), q()).verdict, Verdict::ClosedHomologyManifold);
        assert_eq!(classify(&torus7(), q()).verdict, Verdict::ClosedHomologyManifold);
        assert_eq!(classify(&two_tetrahedra(), q()).verdict, Verdict::HomologyBall);
        assert_eq!(classify(&octahedron(), q()).verdict, Verdict::HomologySphere);

        // a ball classifies with a witness-free boundary round trip
        let two_triangles_at_vertex = Complex::from_facets([[0u32, 1, 2], [2, 3, 4]]).unwrap();
        let class = classify(&two_triangles_at_vertex, q());
        assert_eq!(class.verdict, Verdict::NotAHomologyManifold);
        assert!(class.witness.is_some());
    }

    #[test]
    fn interior_faces_examples() {
        for d in 1..=3u32 {
            let int = interior_faces(&Complex::simplex(d), q()).unwrap();
            assert_eq!(int, vec![Face::new((0..=d).collect())]);
        }
        let int = interior_faces(&two_tetrahedra(), q()).unwrap();
        assert_eq!(int.len(), 3); // gluing triangle + the two facets
        assert!(int.contains(&Face::from([1, 2, 3])));
    }

    #[test]
    fn pseudomanifolds() {
        assert!(is_pseudomanifold(&Complex::boundary_simplex(3)).unwrap());
        let v_joined = Complex::from_facets([[0u32, 1, 2], [2, 3, 4]]).unwrap();
        assert!(!is_pseudomanifold(&v_joined).unwrap());
        let triple_edge = Complex::from_facets([[0u32, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap();
        assert!(!is_pseudomanifold(&triple_edge).unwrap());
        let impure =
            Complex::from_facets([Face::from([0u32, 1, 2]), Face::from([3, 4])]).unwrap();
        assert!(is_pseudomanifold(&impure).is_err());
    }

    #[test]
    fn ball_boundary_is_sphere() {
        for b in [Complex::simplex(3), two_tetrahedra()] {
            assert_eq!(classify(&b, q()).verdict, Verdict::HomologyBall);
            let bd = boundary_complex(&b, q()).unwrap();
            assert_eq!(classify(&bd, q()).verdict, Verdict::HomologySphere);
        }
    }

    #[test]
    fn fast_path_matches_homology_path() {
        for c in [Complex::simplex(3), two_tetrahedra(), torus7(), rp2_6(), octahedron()] {
            let fast = pseudo_boundary(&c).unwrap();
            let full = boundary_complex(&c, q()).unwrap();
            assert_eq!(fast, full, "complex {:?}", c);
        }
    }

    #[test]
    fn trivial_homology_orientable_manifold_is_ball() {
        // Lemma 2.1 shape: orientable + boundary + trivial reduced homology → ball
        let b = two_tetrahedra();
        assert!(crate::homology::is_orientable(&b, q()).unwrap());
        assert!(crate::homology::betti(&b, q()).is_trivial());
        assert_eq!(classify(&b, q()).verdict, Verdict::HomologyBall);
    }
}
