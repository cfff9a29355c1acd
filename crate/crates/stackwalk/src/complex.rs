//! Facet-based simplicial complexes and their combinatorial operations.
//!
//! A [`Complex`] is stored by its facets (maximal faces) over arbitrary
//! non-negative integer vertex labels. Labels are preserved from input; no
//! silent compaction happens, so surgery operations can mint fresh labels
//! (`max label + 1 + i`) without colliding with user labels.
//!
//! The void complex (no faces at all) is not representable; the minimal
//! complex is `{∅}`, obtained from [`Complex::empty_complex`].

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A face: a sorted, duplicate-free set of vertex labels. The empty face is
/// a valid value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Face(Vec<u32>);

impl Face {
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertex(v: u32) -> Self {
        Face(vec![v])
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension: `len() - 1`, so the empty face has dimension −1.
    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        // both sorted
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Face::new(v)
    }

    pub fn minus(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn intersect(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn with_vertex(&self, v: u32) -> Face {
        let mut vs = self.0.clone();
        vs.push(v);
        Face::new(vs)
    }

    pub fn without_vertex(&self, v: u32) -> Face {
        Face(self.0.iter().copied().filter(|w| *w != v).collect())
    }

    /// All subsets of this face, including the empty face and the face itself.
    pub fn subsets(&self) -> Vec<Face> {
        let n = self.0.len();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1 << n) {
            let mut v = Vec::with_capacity(mask.count_ones() as usize);
            for (i, &x) in self.0.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v.push(x);
                }
            }
            out.push(Face(v));
        }
        out
    }

    /// The `len()` subsets obtained by dropping one vertex.
    pub fn boundary_faces(&self) -> Vec<Face> {
        (0..self.0.len())
            .map(|i| {
                let mut v = self.0.clone();
                v.remove(i);
                Face(v)
            })
            .collect()
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "{{")?;
            for (i, v) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")
        }
    }
}

impl From<&[u32]> for Face {
    fn from(vs: &[u32]) -> Self {
        Face::new(vs.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Face {
    fn from(vs: [u32; N]) -> Self {
        Face::new(vs.to_vec())
    }
}

/// The f-vector: `counts[i]` is the number of faces of dimension `i - 1`,
/// so `counts[0] = f_{-1} = 1` always.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_i` for `i >= -1`; zero outside the stored range.
    pub fn f(&self, i: i64) -> u64 {
        let idx = i + 1;
        if idx < 0 {
            return 0;
        }
        self.0.get(idx as usize).copied().unwrap_or(0)
    }

    /// Euler characteristic `Σ (−1)^i f_i` over `i >= 0`.
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(idx, &c)| if idx % 2 == 0 { -(c as i64) } else { c as i64 })
            .sum()
    }
}

/// An abstract simplicial complex given by its facets.
///
/// Invariants: no facet contains another; the vertex set is the union of the
/// facets; the face set is downward closed by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Complex {
    facets: BTreeSet<Face>,
    vertices: BTreeSet<u32>,
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex{:?}", self.facets.iter().collect::<Vec<_>>())
    }
}

impl Complex {
    /// Builds a complex from a list of vertex sets; entries contained in
    /// other entries are dropped. Errors on an empty list.
    pub fn from_facets<I, F>(raw: I) -> Result<Complex>
    where
        I: IntoIterator<Item = F>,
        F: Into<Face>,
    {
        let candidates: Vec<Face> = raw.into_iter().map(Into::into).collect();
        if candidates.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let mut facets: BTreeSet<Face> = BTreeSet::new();
        for c in &candidates {
            if candidates.iter().any(|o| c != o && c.is_subset_of(o)) {
                continue;
            }
            facets.insert(c.clone());
        }
        let vertices = facets.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        Ok(Complex { facets, vertices })
    }

    /// The minimal complex `{∅}`.
    pub fn empty_complex() -> Complex {
        let mut facets = BTreeSet::new();
        facets.insert(Face::empty());
        Complex { facets, vertices: BTreeSet::new() }
    }

    /// The full `d`-simplex on labels `0..=d`.
    pub fn simplex(d: u32) -> Complex {
        Complex::from_facets([Face::new((0..=d).collect())]).unwrap()
    }

    /// The boundary of the `d`-simplex, `∂Δ^d`; requires `d >= 1`.
    pub fn boundary_simplex(d: u32) -> Complex {
        assert!(d >= 1, "boundary_simplex needs d >= 1");
        let top = Face::new((0..=d).collect());
        Complex::from_facets(top.boundary_faces()).unwrap()
    }

    pub fn facets(&self) -> impl Iterator<Item = &Face> {
        self.facets.iter()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn vertex_set(&self) -> &BTreeSet<u32> {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn max_label(&self) -> Option<u32> {
        self.vertices.iter().next_back().copied()
    }

    /// Dimension: max facet size − 1; the `{∅}` complex has dimension −1.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// True when all facets have the same dimension.
    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn has_face(&self, f: &Face) -> bool {
        self.facets.iter().any(|g| f.is_subset_of(g))
    }

    pub fn is_facet(&self, f: &Face) -> bool {
        self.facets.contains(f)
    }

    /// All faces, including `∅`.
    pub fn faces(&self) -> BTreeSet<Face> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                out.insert(s);
            }
        }
        out
    }

    /// All faces of dimension `d` (so `d = -1` yields `[∅]`).
    pub fn faces_of_dim(&self, d: i64) -> Vec<Face> {
        let size = (d + 1) as usize;
        let mut out = BTreeSet::new();
        for f in &self.facets {
            if f.dim() < d {
                continue;
            }
            for s in subsets_of_size(f.vertices(), size) {
                out.insert(s);
            }
        }
        out.into_iter().collect()
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; (self.dim() + 2) as usize];
        for f in self.faces() {
            counts[(f.dim() + 1) as usize] += 1;
        }
        FVector(counts)
    }

    /// The link `{τ∖f : f ⊆ τ ∈ c}`. The link of a facet is `{∅}`.
    pub fn link(&self, f: &Face) -> Result<Complex> {
        if !self.has_face(f) {
            return Err(Error::NotAFace(f.clone()));
        }
        if f.is_empty() {
            return Ok(self.clone());
        }
        let residues: Vec<Face> = self
            .facets
            .iter()
            .filter(|t| f.is_subset_of(t))
            .map(|t| t.minus(f))
            .collect();
        // residues may contain ∅ only (facet link) or faces subsumed by others
        Complex::from_facets(residues)
    }

    /// The induced subcomplex on vertex set `w` (which need not be a subset
    /// of the vertex set).
    pub fn induced(&self, w: &BTreeSet<u32>) -> Complex {
        let mut pieces: Vec<Face> = Vec::new();
        for f in &self.facets {
            let restricted =
                Face(f.vertices().iter().copied().filter(|v| w.contains(v)).collect());
            pieces.push(restricted);
        }
        Complex::from_facets(pieces).expect("facet list is non-empty")
    }

    /// All missing `k`-faces: `(k+1)`-subsets of the vertex set that are not
    /// faces although all their proper subsets are.
    pub fn missing_faces(&self, k: usize) -> Vec<Face> {
        assert!(k >= 1, "missing_faces needs k >= 1");
        let verts: Vec<u32> = self.vertices.iter().copied().collect();
        let mut out = Vec::new();
        for cand in subsets_of_size(&verts, k + 1) {
            if self.has_face(&cand) {
                continue;
            }
            if cand.boundary_faces().iter().all(|b| self.has_face(b)) {
                out.push(cand);
            }
        }
        out
    }

    /// True iff every pair of vertices forms an edge.
    pub fn is_neighborly(&self) -> bool {
        let verts: Vec<u32> = self.vertices.iter().copied().collect();
        for (i, &a) in verts.iter().enumerate() {
            for &b in &verts[i + 1..] {
                if !self.has_face(&Face::new(vec![a, b])) {
                    return false;
                }
            }
        }
        true
    }

    /// The cone `c ∪ {{v} ∪ α : α ∈ c}`; errors if `v` is already a vertex.
    pub fn cone(&self, v: u32) -> Result<Complex> {
        if self.vertices.contains(&v) {
            return Err(Error::VertexPresent(v));
        }
        Complex::from_facets(self.facets.iter().map(|f| f.with_vertex(v)))
    }

    /// Edges of the 1-skeleton as an adjacency map (every vertex present,
    /// isolated ones with an empty neighbor set).
    pub fn skeleton_adjacency(&self) -> BTreeMap<u32, BTreeSet<u32>> {
        let mut adj: BTreeMap<u32, BTreeSet<u32>> =
            self.vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        for e in self.faces_of_dim(1) {
            let vs = e.vertices();
            adj.get_mut(&vs[0]).unwrap().insert(vs[1]);
            adj.get_mut(&vs[1]).unwrap().insert(vs[0]);
        }
        adj
    }

    /// Connected components of the 1-skeleton; isolated vertices are
    /// singleton components. The `{∅}` complex has no components.
    pub fn connected_components(&self) -> Vec<BTreeSet<u32>> {
        let adj = self.skeleton_adjacency();
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        let mut comps = Vec::new();
        for &start in &self.vertices {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &adj[&v] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Chordality of the 1-skeleton, decided by a Lex-BFS perfect
    /// elimination ordering test. On failure a witness induced cycle of
    /// length ≥ 4 is extracted.
    pub fn chordality(&self) -> Chordality {
        let verts: Vec<u32> = self.vertices.iter().copied().collect();
        let n = verts.len();
        if n < 4 {
            return Chordality::Chordal;
        }
        let index: BTreeMap<u32, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![BTreeSet::new(); n];
        for (v, nbrs) in self.skeleton_adjacency() {
            for w in nbrs {
                adj[index[&v]].insert(index[&w]);
            }
        }
        if lexbfs_is_chordal(&adj) {
            return Chordality::Chordal;
        }
        let cycle = induced_cycle_witness(&adj)
            .expect("non-chordal graph must contain an induced cycle of length >= 4");
        Chordality::NotChordal { witness: cycle.into_iter().map(|i| verts[i]).collect() }
    }

    pub fn is_chordal_skeleton(&self) -> bool {
        matches!(self.chordality(), Chordality::Chordal)
    }

    /// Applies a vertex relabeling to every facet. The map must be injective
    /// on the vertex set (checked).
    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> Result<Complex> {
        let mut seen = BTreeSet::new();
        for &v in &self.vertices {
            let w = *map.get(&v).unwrap_or(&v);
            if !seen.insert(w) {
                return Err(Error::pre(format!("relabeling is not injective at {w}")));
            }
        }
        Complex::from_facets(self.facets.iter().map(|f| {
            Face::new(f.vertices().iter().map(|v| *map.get(v).unwrap_or(v)).collect())
        }))
    }
}

/// Outcome of the chordality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal,
    /// An induced cycle of length ≥ 4, in cyclic order.
    NotChordal { witness: Vec<u32> },
}

/// Decides isomorphism of two complexes by backtracking vertex assignment;
/// intended for small complexes (≤ ~25 vertices). Returns a label map from
/// `a` to `b` when one exists.
pub fn are_isomorphic(a: &Complex, b: &Complex) -> Option<BTreeMap<u32, u32>> {
    if a.f_vector() != b.f_vector() {
        return None;
    }
    let va: Vec<u32> = a.vertex_set().iter().copied().collect();
    let vb: Vec<u32> = b.vertex_set().iter().copied().collect();
    if va.len() != vb.len() {
        return None;
    }
    let adj_a = a.skeleton_adjacency();
    let adj_b = b.skeleton_adjacency();
    let deg = |adj: &BTreeMap<u32, BTreeSet<u32>>, v: u32| adj[&v].len();
    // most-constrained-first: high degree vertices first
    let mut order = va.clone();
    order.sort_by_key(|&v| std::cmp::Reverse(deg(&adj_a, v)));

    let mut assignment: BTreeMap<u32, u32> = BTreeMap::new();
    let mut used: BTreeSet<u32> = BTreeSet::new();
    if assign(a, b, &adj_a, &adj_b, &order, &vb, 0, &mut assignment, &mut used) {
        Some(assignment)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    a: &Complex,
    b: &Complex,
    adj_a: &BTreeMap<u32, BTreeSet<u32>>,
    adj_b: &BTreeMap<u32, BTreeSet<u32>>,
    order: &[u32],
    vb: &[u32],
    pos: usize,
    assignment: &mut BTreeMap<u32, u32>,
    used: &mut BTreeSet<u32>,
) -> bool {
    if pos == order.len() {
        let mapped = a.relabel(assignment).expect("bijection");
        return mapped == *b;
    }
    let v = order[pos];
    'cand: for &w in vb {
        if used.contains(&w) || adj_a[&v].len() != adj_b[&w].len() {
            continue;
        }
        // adjacency must be preserved both ways against the partial map
        for (&x, &y) in assignment.iter() {
            let e_a = adj_a[&v].contains(&x);
            let e_b = adj_b[&w].contains(&y);
            if e_a != e_b {
                continue 'cand;
            }
        }
        assignment.insert(v, w);
        used.insert(w);
        if assign(a, b, adj_a, adj_b, order, vb, pos + 1, assignment, used) {
            return true;
        }
        assignment.remove(&v);
        used.remove(&w);
    }
    false
}

/// All `k`-subsets of a sorted slice, as Faces, in lexicographic order.
pub(crate) fn subsets_of_size(items: &[u32], k: usize) -> Vec<Face> {
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Face(idx.iter().map(|&i| items[i]).collect()));
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
        if k == 0 {
            return out;
        }
    }
}

/// Lex-BFS chordality test: G is chordal iff the reverse of a Lex-BFS
/// visiting order is a perfect elimination ordering.
fn lexbfs_is_chordal(adj: &[BTreeSet<usize>]) -> bool {
    let n = adj.len();
    // O(n^2) label-based Lex-BFS; fine at this scale.
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut visit_order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]))
            .unwrap();
        visited[v] = true;
        visit_order.push(v);
        for &w in &adj[v] {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    // elimination order = reverse visiting order
    let mut elim_pos = vec![0usize; n];
    for (i, &v) in visit_order.iter().rev().enumerate() {
        elim_pos[v] = i;
    }
    for &v in &visit_order {
        let later: Vec<usize> =
            adj[v].iter().copied().filter(|&w| elim_pos[w] > elim_pos[v]).collect();
        if let Some(&u) = later.iter().min_by_key(|&&w| elim_pos[w]) {
            for &w in &later {
                if w != u && !adj[u].contains(&w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Finds an induced cycle of length ≥ 4 in a non-chordal graph: for a vertex
/// v with non-adjacent neighbors u, w, a shortest u–w path avoiding N[v]
/// closes up with v into an induced cycle.
fn induced_cycle_witness(adj: &[BTreeSet<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    for v in 0..n {
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if adj[u].contains(&w) {
                    continue;
                }
                let allowed =
                    |x: usize| x == u || x == w || (x != v && !adj[v].contains(&x));
                if let Some(path) = shortest_path(adj, u, w, &allowed) {
                    if path.len() >= 3 {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
    }
    None
}

fn shortest_path(
    adj: &[BTreeSet<usize>],
    from: usize,
    to: usize,
    allowed: &dyn Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in &adj[x] {
            if !seen[y] && allowed(y) {
                seen[y] = true;
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn from_facets_drops_subsumed_entries() {
        let c = Complex::from_facets([vec![0u32, 1, 2], vec![0, 1]].into_iter().map(Face::new))
            .unwrap();
        assert_eq!(c.facet_count(), 1);
        assert_eq!(c.dim(), 2);

        let c = Complex::from_facets([vec![0u32, 1], vec![1, 2]].into_iter().map(Face::new))
            .unwrap();
        assert_eq!(c.facet_count(), 2);
        assert_eq!(c.dim(), 1);

        let c = Complex::from_facets([vec![5u32]].into_iter().map(Face::new)).unwrap();
        assert_eq!(c.dim(), 0);
        assert_eq!(c.vertex_count(), 1);

        assert!(matches!(
            Complex::from_facets(Vec::<Face>::new()),
            Err(Error::EmptyFacetList)
        ));
    }

    #[test]
    fn simplex_and_boundary() {
        let t = Complex::boundary_simplex(2);
        assert_eq!(t.facets().cloned().collect::<Vec<_>>(), vec![
            Face::from([0, 1]),
            Face::from([0, 2]),
            Face::from([1, 2])
        ]);
        assert_eq!(Complex::boundary_simplex(4).f_vector(), FVector(vec![1, 5, 10, 10, 5]));
        assert_eq!(Complex::simplex(3).facet_count(), 1);
        assert_eq!(Complex::simplex(3).dim(), 3);
    }

    #[test]
    fn f_vectors() {
        assert_eq!(octahedron().f_vector(), FVector(vec![1, 6, 12, 8]));
        assert_eq!(torus7().f_vector(), FVector(vec![1, 7, 21, 14]));
        assert_eq!(rp2_6().f_vector(), FVector(vec![1, 6, 15, 10]));
    }

    #[test]
    fn links() {
        let t = Complex::boundary_simplex(2);
        let lk = t.link(&Face::vertex(0)).unwrap();
        assert_eq!(lk.facets().cloned().collect::<Vec<_>>(), vec![
            Face::vertex(1),
            Face::vertex(2)
        ]);
        // link of ∅ is the complex itself
        assert_eq!(t.link(&Face::empty()).unwrap(), t);
        // link of an edge in the octahedron: two isolated vertices
        let lk = octahedron().link(&Face::from([1, 3])).unwrap();
        assert_eq!(lk.f_vector(), FVector(vec![1, 2]));
        assert_eq!(lk.connected_components().len(), 2);
        // link of a facet is {∅}
        let lk = t.link(&Face::from([0, 1])).unwrap();
        assert_eq!(lk, Complex::empty_complex());
        assert!(t.link(&Face::from([0, 1, 2])).is_err());
    }

    #[test]
    fn induced_subcomplexes() {
        let b3 = Complex::boundary_simplex(3);
        let w: BTreeSet<u32> = [0, 1, 2].into();
        assert_eq!(b3.induced(&w), Complex::from_facets([[0u32, 1, 2]]).unwrap());

        let w: BTreeSet<u32> = [1, 3, 2, 4].into();
        let cyc = octahedron().induced(&w);
        assert_eq!(cyc.f_vector(), FVector(vec![1, 4, 4]));
        assert!(!cyc.has_face(&Face::from([1, 2])));
        assert!(!cyc.has_face(&Face::from([3, 4])));

        assert_eq!(b3.induced(&BTreeSet::new()), Complex::empty_complex());
    }

    #[test]
    fn missing_faces_enumeration() {
        assert_eq!(Complex::boundary_simplex(2).missing_faces(2), vec![Face::from([0, 1, 2])]);
        let pairs = octahedron().missing_faces(1);
        assert_eq!(pairs, vec![Face::from([1, 2]), Face::from([3, 4]), Face::from([5, 6])]);
        for k in 1..4 {
            assert!(Complex::simplex(3).missing_faces(k).is_empty());
        }
    }

    #[test]
    fn neighborliness() {
        assert!(Complex::boundary_simplex(4).is_neighborly());
        assert!(!octahedron().is_neighborly());
        assert!(torus7().is_neighborly());
    }

    #[test]
    fn chordality_tests() {
        assert!(Complex::boundary_simplex(4).is_chordal_skeleton());
        // a tree graph
        let tree = Complex::from_facets([[0u32, 1], [1, 2], [1, 3], [3, 4]]).unwrap();
        assert!(tree.is_chordal_skeleton());
        match octahedron().chordality() {
            Chordality::NotChordal { witness } => {
                assert!(witness.len() >= 4);
                // the witness is an induced cycle: consecutive adjacent, no chords
                let c = octahedron();
                let m = witness.len();
                for i in 0..m {
                    for j in i + 1..m {
                        let e = Face::new(vec![witness[i], witness[j]]);
                        let consecutive = j == i + 1 || (i == 0 && j == m - 1);
                        assert_eq!(c.has_face(&e), consecutive, "pair {:?}", e);
                    }
                }
            }
            Chordality::Chordal => panic!("octahedron skeleton is not chordal"),
        }
    }

    #[test]
    fn cones() {
        let cone = Complex::simplex(2).cone(3).unwrap();
        assert_eq!(cone.faces(), Complex::simplex(3).faces());
        let pt = Complex::from_facets([[7u32]]).unwrap();
        assert_eq!(pt.cone(8).unwrap().f_vector(), FVector(vec![1, 2, 1]));
        assert_eq!(octahedron().cone(7).unwrap().f_vector(), FVector(vec![1, 7, 18, 20, 8]));
        assert!(octahedron().cone(3).is_err());
    }

    #[test]
    fn components() {
        let two = Complex::from_facets([[0u32, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(two.connected_components().len(), 2);
        assert!(Complex::boundary_simplex(3).is_connected());
        // B[V ∖ σ] for two glued tetrahedra: two singleton components
        let b = two_tetrahedra();
        let w: BTreeSet<u32> = [0, 4].into();
        let ind = b.induced(&w);
        let comps = ind.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn isomorphism() {
        let oct = octahedron();
        let map: BTreeMap<u32, u32> = [(1, 11), (2, 12), (3, 13), (4, 14), (5, 15), (6, 16)].into();
        let shuffled = oct.relabel(&map).unwrap();
        assert!(are_isomorphic(&oct, &shuffled).is_some());
        assert!(are_isomorphic(&Complex::boundary_simplex(3), &oct).is_none());
    }

    #[test]
    fn cone_f_vector_recursion() {
        // f_i(cone) = f_i + f_{i-1}
        let c = torus7();
        let f = c.f_vector();
        let g = c.cone(99).unwrap().f_vector();
        for i in 0..=(c.dim() + 1) {
            assert_eq!(g.f(i), f.f(i) + f.f(i - 1), "degree {i}");
        }
    }

    #[test]
    fn link_composition() {
        // link(link(c, f), g) = link(c, f ∪ g) for disjoint f, g with f ∪ g a face
        let c = torus7();
        let f = Face::vertex(0);
        let g = Face::vertex(1);
        let lhs = c.link(&f).unwrap().link(&g).unwrap();
        let rhs = c.link(&f.union(&g)).unwrap();
        assert_eq!(lhs, rhs);
    }
}
