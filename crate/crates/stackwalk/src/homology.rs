//! Reduced and relative simplicial homology with field coefficients.
//!
//! Homology is reduced throughout: the augmented chain complex includes the
//! augmentation map to the empty face, so `β̃_0 = components − 1` and the
//! `{∅}` complex has `β̃_{-1} = 1`. Orientations of simplices are fixed by
//! sorted vertex order, with boundary signs `(−1)^k`; all matrices are
//! deterministic for a given complex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Face};
use crate::linalg::{FieldSpec, SparseMatrix};
use crate::{Error, Result};

/// Reduced Betti numbers `β̃_0 .. β̃_d` over a field; `β̃_{-1}` is tracked
/// separately (non-zero only for the `{∅}` complex).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BettiVector {
    pub field: FieldSpec,
    pub betti: Vec<u64>,
    pub betti_neg1: u64,
}

impl BettiVector {
    /// `β̃_i`, zero outside the stored range.
    pub fn b(&self, i: i64) -> u64 {
        if i == -1 {
            return self.betti_neg1;
        }
        if i < 0 {
            return 0;
        }
        self.betti.get(i as usize).copied().unwrap_or(0)
    }

    /// True iff all reduced Betti numbers vanish (including `β̃_{-1}`).
    pub fn is_trivial(&self) -> bool {
        self.betti_neg1 == 0 && self.betti.iter().all(|&b| b == 0)
    }

    /// True iff this is the reduced homology of an `e`-sphere: a single 1
    /// in degree `e` (with `e = -1` meaning the `{∅}` complex).
    pub fn is_sphere(&self, e: i64) -> bool {
        self.b(e) == 1
            && self.betti_neg1 == if e == -1 { 1 } else { 0 }
            && self
                .betti
                .iter()
                .enumerate()
                .all(|(i, &b)| b == if i as i64 == e { 1 } else { 0 })
    }
}

/// Rank and injectivity of the map `H̃_i(A) → H̃_i(B)` induced by an
/// inclusion `A ⊆ B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedMapReport {
    pub degree: i64,
    pub rank: usize,
    pub dim_source: usize,
    pub injective: bool,
}

/// Faces of each dimension with index maps, plus boundary matrices of the
/// augmented chain complex. `boundary[i]` is ∂_i mapping i-chains to
/// (i−1)-chains; ∂_0 is the 1 × f_0 augmentation row.
pub(crate) struct ChainData {
    pub faces: Vec<Vec<Face>>,                     // faces[i] = i-faces, sorted
    pub index: Vec<BTreeMap<Face, usize>>,         // face -> column index per dim
    pub boundary: Vec<SparseMatrix>,               // boundary[i] = ∂_i
}

impl ChainData {
    pub fn build(c: &Complex) -> ChainData {
        let d = c.dim();
        let mut faces: Vec<Vec<Face>> = Vec::new();
        let mut index: Vec<BTreeMap<Face, usize>> = Vec::new();
        for i in 0..=d.max(-1) {
            let fs = c.faces_of_dim(i);
            let idx = fs.iter().cloned().enumerate().map(|(j, f)| (f, j)).collect();
            faces.push(fs);
            index.push(idx);
        }
        let mut boundary = Vec::new();
        for i in 0..faces.len() as i64 {
            boundary.push(boundary_matrix(&faces, &index, i));
        }
        ChainData { faces, index, boundary }
    }

    pub fn dim(&self) -> i64 {
        self.faces.len() as i64 - 1
    }

    /// rank ∂_i, with ∂ outside the complex's degree range having rank 0.
    pub fn boundary_rank(&self, i: i64, field: FieldSpec) -> usize {
        if i < 0 || i >= self.boundary.len() as i64 {
            return 0;
        }
        self.boundary[i as usize].rank(field)
    }
}

fn boundary_matrix(
    faces: &[Vec<Face>],
    index: &[BTreeMap<Face, usize>],
    i: i64,
) -> SparseMatrix {
    let cols = faces[i as usize].len();
    if i == 0 {
        // augmentation: every vertex maps to the empty face
        let entries = (0..cols).map(|j| (0, j, 1i64)).collect();
        return SparseMatrix::new(1, cols, entries);
    }
    let rows = faces[(i - 1) as usize].len();
    let mut entries = Vec::new();
    for (j, f) in faces[i as usize].iter().enumerate() {
        for (k, b) in f.boundary_faces().iter().enumerate() {
            let r = index[(i - 1) as usize][b];
            let sign = if k % 2 == 0 { 1 } else { -1 };
            entries.push((r, j, sign));
        }
    }
    SparseMatrix::new(rows, cols, entries)
}

/// Reduced Betti numbers of a complex, exactly.
pub fn betti(c: &Complex, field: FieldSpec) -> BettiVector {
    let d = c.dim();
    if d < 0 {
        return BettiVector { field, betti: Vec::new(), betti_neg1: 1 };
    }
    let data = ChainData::build(c);
    let mut out = Vec::with_capacity((d + 1) as usize);
    for i in 0..=d {
        let f_i = data.faces[i as usize].len();
        let rank_i = data.boundary_rank(i, field);
        let rank_next = data.boundary_rank(i + 1, field);
        out.push((f_i - rank_i - rank_next) as u64);
    }
    BettiVector { field, betti: out, betti_neg1: 0 }
}

/// Betti numbers of the relative chain complex `C(c)/C(sub)`.
pub fn relative_betti(c: &Complex, sub: &Complex, field: FieldSpec) -> Result<BettiVector> {
    for f in sub.facets() {
        if !c.has_face(f) {
            return Err(Error::NotASubcomplex(f.clone()));
        }
    }
    let d = c.dim();
    if d < 0 {
        return Ok(BettiVector { field, betti: Vec::new(), betti_neg1: 0 });
    }
    // relative chains: faces of c not in sub (∅ is always in sub)
    let mut faces: Vec<Vec<Face>> = Vec::new();
    let mut index: Vec<BTreeMap<Face, usize>> = Vec::new();
    for i in 0..=d {
        let fs: Vec<Face> =
            c.faces_of_dim(i).into_iter().filter(|f| !sub.has_face(f)).collect();
        let idx = fs.iter().cloned().enumerate().map(|(j, f)| (f, j)).collect();
        faces.push(fs);
        index.push(idx);
    }
    let rel_boundary = |i: i64| -> SparseMatrix {
        let cols = faces[i as usize].len();
        if i == 0 {
            return SparseMatrix::zero(0, cols);
        }
        let rows = faces[(i - 1) as usize].len();
        let mut entries = Vec::new();
        for (j, f) in faces[i as usize].iter().enumerate() {
            for (k, b) in f.boundary_faces().iter().enumerate() {
                if let Some(&r) = index[(i - 1) as usize].get(b) {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    entries.push((r, j, sign));
                }
            }
        }
        SparseMatrix::new(rows, cols, entries)
    };
    let ranks: Vec<usize> = (0..=d).map(|i| rel_boundary(i).rank(field)).collect();
    let mut out = Vec::with_capacity((d + 1) as usize);
    for i in 0..=d {
        let n_i = faces[i as usize].len();
        let r_i = ranks[i as usize];
        let r_next = if i < d { ranks[(i + 1) as usize] } else { 0 };
        out.push((n_i - r_i - r_next) as u64);
    }
    Ok(BettiVector { field, betti: out, betti_neg1: 0 })
}

/// Rank of `H̃_i(A) → H̃_i(B)` for a subcomplex inclusion, computed without
/// choosing homology bases: the image is `(Z_i(A) + B_i(B)) / B_i(B)`, so
/// its dimension is `rank [K_A | ∂_{i+1}^B] − rank ∂_{i+1}^B` where `K_A`
/// spans the reduced cycles of `A` written in `B`'s chain coordinates.
pub fn inclusion_induced(
    a: &Complex,
    b: &Complex,
    i: i64,
    field: FieldSpec,
) -> Result<InducedMapReport> {
    for f in a.facets() {
        if !b.has_face(f) {
            return Err(Error::NotASubcomplex(f.clone()));
        }
    }
    assert!(i >= 0, "inclusion_induced is defined for degrees i >= 0");
    let data_b = ChainData::build(b);
    inclusion_induced_with(a, &data_b, i, field)
}

/// As [`inclusion_induced`] but reusing precomputed chain data for the
/// ambient complex (the tightness scan calls this in a tight loop).
pub(crate) fn inclusion_induced_with(
    a: &Complex,
    data_b: &ChainData,
    i: i64,
    field: FieldSpec,
) -> Result<InducedMapReport> {
    if i > a.dim() {
        return Ok(InducedMapReport { degree: i, rank: 0, dim_source: 0, injective: true });
    }
    let data_a = ChainData::build(a);
    let kernel = data_a.boundary[i as usize].kernel_basis(field);
    let dim_source = kernel.len() - data_a.boundary_rank(i + 1, field);
    if dim_source == 0 {
        return Ok(InducedMapReport { degree: i, rank: 0, dim_source: 0, injective: true });
    }
    // embed A's cycle space into B's i-chains
    let rows_b = data_b.faces[i as usize].len();
    let mut entries = Vec::new();
    for (col, vec) in kernel.iter().enumerate() {
        for (j, &val) in vec.iter().enumerate() {
            if val != 0 {
                let face = &data_a.faces[i as usize][j];
                let r = data_b.index[i as usize][face];
                entries.push((r, col, val));
            }
        }
    }
    let k_a = SparseMatrix::new(rows_b, kernel.len(), entries);
    let (stacked_rank, db_rank) = if i + 1 <= data_b.dim() {
        let db = &data_b.boundary[(i + 1) as usize];
        (k_a.hstack(db).rank(field), db.rank(field))
    } else {
        (k_a.rank(field), 0)
    };
    // image dimension = dim (Z_i(A) + B_i(B)) − dim B_i(B); B_i(A) ⊆ B_i(B)
    // makes this exactly the rank of the map on homology
    let rank = stacked_rank - db_rank;
    Ok(InducedMapReport { degree: i, rank, dim_source, injective: rank == dim_source })
}

/// Orientability of a connected homology manifold: `β̃_d = 1` when closed,
/// `H_d(c, ∂c) ≅ F` when there is a boundary.
pub fn is_orientable(c: &Complex, field: FieldSpec) -> Result<bool> {
    if !c.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = c.dim();
    let bd = crate::recognition::pseudo_boundary(c)?;
    if bd == Complex::empty_complex() {
        Ok(betti(c, field).b(d) == 1)
    } else {
        Ok(relative_betti(c, &bd, field)?.b(d) == 1)
    }
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
    fn spheres() {
        for d in 1..=4u32 {
            for field in [q(), f2()] {
                let b = betti(&Complex::boundary_simplex(d + 1), field);
                assert!(b.is_sphere(d as i64), "d={d} field={field} got {:?}", b);
            }
        }
    }

    #[test]
    fn empty_complex_betti() {
        let b = betti(&Complex::empty_complex(), q());
        assert_eq!(b.betti_neg1, 1);
        assert!(b.is_sphere(-1));
    }

    #[test]
    fn torus_and_rp2() {
        for field in [q(), f2()] {
            let b = betti(&torus7(), field);
            assert_eq!((b.b(0), b.b(1), b.b(2)), (0, 2, 1), "field {field}");
        }
        let b = betti(&rp2_6(), f2());
        assert_eq!((b.b(0), b.b(1), b.b(2)), (0, 1, 1));
        let b = betti(&rp2_6(), q());
        assert_eq!((b.b(0), b.b(1), b.b(2)), (0, 0, 0));
    }

    #[test]
    fn relative_homology() {
        for d in 1..=3u32 {
            let b =
                relative_betti(&Complex::simplex(d), &Complex::boundary_simplex(d), q()).unwrap();
            for i in 0..=d as i64 {
                assert_eq!(b.b(i), u64::from(i == d as i64), "(D^{d}, S^{}) deg {i}", d - 1);
            }
        }
        let c = torus7();
        let b = relative_betti(&c, &c, f2()).unwrap();
        assert!(b.is_trivial());

        // two glued tetrahedra rel boundary: orientable 3-ball
        let b2 = two_tetrahedra();
        let bd = crate::recognition::pseudo_boundary(&b2).unwrap();
        let rel = relative_betti(&b2, &bd, q()).unwrap();
        assert_eq!((rel.b(0), rel.b(1), rel.b(2), rel.b(3)), (0, 0, 0, 1));

        let not_sub = Complex::from_facets([[90u32, 91]]).unwrap();
        assert!(relative_betti(&c, &not_sub, q()).is_err());
    }

    #[test]
    fn induced_maps() {
        let cycle4 = Complex::from_facets([[0u32, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        let r = inclusion_induced(&cycle4, &cycle4, 1, q()).unwrap();
        assert_eq!((r.rank, r.dim_source, r.injective), (1, 1, true));

        // induced 4-cycle inside the octahedron bounds: rank 0, not injective
        let oct = octahedron();
        let w = [1u32, 3, 2, 4].into();
        let a = oct.induced(&w);
        let r = inclusion_induced(&a, &oct, 1, f2()).unwrap();
        assert_eq!((r.rank, r.dim_source, r.injective), (0, 1, false));

        // the {∅} complex includes injectively in all degrees >= 0
        let e = Complex::empty_complex();
        for i in 0..3 {
            assert!(inclusion_induced(&e, &oct, i, q()).unwrap().injective);
        }

        assert!(inclusion_induced(&oct, &cycle4, 1, q()).is_err());
    }

    #[test]
    fn euler_consistency() {
        // Σ (−1)^i f_i = 1 + Σ (−1)^i β̃_i
        for c in [octahedron(), torus7(), rp2_6(), two_tetrahedra(), Complex::simplex(3)] {
            let f = c.f_vector();
            for field in [q(), f2(), FieldSpec::prime(3).unwrap()] {
                let b = betti(&c, field);
                let chi_h: i64 = b
                    .betti
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
                    .sum();
                assert_eq!(f.euler(), 1 + chi_h, "complex {:?} field {field}", c);
            }
        }
    }

    #[test]
    fn orientability() {
        assert!(is_orientable(&Complex::boundary_simplex(4), q()).unwrap());
        assert!(is_orientable(&rp2_6(), f2()).unwrap());
        assert!(!is_orientable(&rp2_6(), q()).unwrap());
        assert!(is_orientable(&torus7(), q()).unwrap());
        assert!(is_orientable(&two_tetrahedra(), q()).unwrap());
        let two = Complex::from_facets([[0u32, 1, 2], [3, 4, 5]]).unwrap();
        assert!(is_orientable(&two, q()).is_err());
    }

    /// Independent dense-elimination oracle over F_p used to cross-check the
    /// sparse path; kept deliberately separate from `linalg`.
    fn dense_rank_mod_p(rows: usize, cols: usize, get: impl Fn(usize, usize) -> i64, p: i64) -> usize {
        let mut a: Vec<Vec<i64>> = (0..rows)
            .map(|r| (0..cols).map(|c| get(r, c).rem_euclid(p)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..cols {
            let Some(pr) = (rank..rows).find(|&r| a[r][col] != 0) else { continue };
            a.swap(rank, pr);
            // scale pivot row to 1 via brute-force inverse
            let inv = (1..p).find(|&x| a[rank][col] * x % p == 1).unwrap();
            for x in a[rank].iter_mut() {
                *x = *x * inv % p;
            }
            for r in 0..rows {
                if r != rank && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..cols {
                        a[r][c] = (a[r][c] - f * a[rank][c]).rem_euclid(p);
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    fn betti_oracle(c: &Complex, p: i64) -> Vec<i64> {
        let d = c.dim();
        let mut faces: Vec<Vec<Face>> = Vec::new();
        for i in 0..=d {
            faces.push(c.faces_of_dim(i));
        }
        let rank = |i: i64| -> usize {
            if i < 0 || i > d {
                return 0;
            }
            if i == 0 {
                return if faces[0].is_empty() { 0 } else { 1 };
            }
            let rs = &faces[(i - 1) as usize];
            let cs = &faces[i as usize];
            dense_rank_mod_p(
                rs.len(),
                cs.len(),
                |r, c| {
                    let fc = &cs[c];
                    for (k, b) in fc.boundary_faces().iter().enumerate() {
                        if b == &rs[r] {
                            return if k % 2 == 0 { 1 } else { -1 };
                        }
                    }
                    0
                },
                p,
            )
        };
        (0..=d)
            .map(|i| faces[i as usize].len() as i64 - rank(i) as i64 - rank(i + 1) as i64)
            .collect()
    }

    #[test]
    fn betti_matches_independent_oracle_on_random_small_complexes() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..60 {
            let n = rng.gen_range(3..=8u32);
            let nf = rng.gen_range(1..=10usize);
            let facets: Vec<Face> = (0..nf)
                .map(|_| {
                    let size = rng.gen_range(1..=4usize);
                    Face::new((0..size).map(|_| rng.gen_range(0..n)).collect())
                })
                .collect();
            let c = Complex::from_facets(facets).unwrap();
            for p in [2i64, 3, 5] {
                let ours = betti(&c, FieldSpec::prime(p as u32).unwrap());
                let oracle = betti_oracle(&c, p);
                for (i, &o) in oracle.iter().enumerate() {
                    assert_eq!(ours.b(i as i64) as i64, o, "complex {:?} p={p} deg {i}", c);
                }
            }
        }
    }
}
