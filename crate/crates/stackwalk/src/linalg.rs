//! Exact rank and kernel computations over prime fields and the rationals.
//!
//! Everything here is exact: prime-field arithmetic on machine integers,
//! characteristic 0 via fraction-free (Bareiss) elimination on
//! arbitrary-precision integers. No floating point anywhere.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The coefficient field: characteristic 0 (the rationals) or a prime p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub fn rationals() -> FieldSpec {
        FieldSpec { characteristic: 0 }
    }

    pub fn prime(p: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::BadCharacteristic(p));
        }
        Ok(FieldSpec { characteristic: p })
    }

    /// Parses `0` as the rationals and any prime as F_p.
    pub fn from_characteristic(c: u32) -> Result<FieldSpec> {
        if c == 0 {
            Ok(FieldSpec::rationals())
        } else {
            FieldSpec::prime(c)
        }
    }

    pub fn f2() -> FieldSpec {
        FieldSpec { characteristic: 2 }
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else {
            write!(f, "F_{}", self.characteristic)
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    let p = p as u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A sparse integer matrix; entries are (row, col, value) with no duplicate
/// positions and no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<(usize, usize, i64)>) -> SparseMatrix {
        let mut seen = std::collections::HashSet::new();
        for &(r, c, v) in &entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of range");
            assert!(v != 0, "explicit zero entry at ({r},{c})");
            assert!(seen.insert((r, c)), "duplicate entry at ({r},{c})");
        }
        SparseMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn identity(n: usize) -> SparseMatrix {
        SparseMatrix::new(n, n, (0..n).map(|i| (i, i, 1)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|&(r, c, v)| (r, c + self.cols, v)));
        SparseMatrix { rows: self.rows, cols: self.cols + other.cols, entries }
    }

    /// Exact rank over the given field.
    pub fn rank(&self, field: FieldSpec) -> usize {
        match field.characteristic() {
            0 => self.rank_bareiss(),
            p => self.rank_mod_p(u64::from(p)),
        }
    }

    /// Basis of the null space; always satisfies
    /// `basis.len() == cols - rank`. Over F_p the entries are field
    /// representatives in `0..p`; over the rationals the vectors are scaled
    /// to integers.
    pub fn kernel_basis(&self, field: FieldSpec) -> Vec<Vec<i64>> {
        match field.characteristic() {
            0 => self.kernel_rational(),
            p => self.kernel_mod_p(u64::from(p)),
        }
    }

    /// Sparse Gaussian elimination over F_p, pivoting on the sparsest
    /// remaining row.
    fn rank_mod_p(&self, p: u64) -> usize {
        let mut rows: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); self.rows];
        for &(r, c, v) in &self.entries {
            let val = v.rem_euclid(p as i64) as u64;
            if val != 0 {
                rows[r].insert(c, val);
            }
        }
        let mut rows: Vec<BTreeMap<usize, u64>> =
            rows.into_iter().filter(|r| !r.is_empty()).collect();
        let mut rank = 0;
        while !rows.is_empty() {
            // sparsest row first keeps fill-in down on boundary matrices
            let pi = rows
                .iter()
                .enumerate()
                .min_by_key(|(_, r)| r.len())
                .map(|(i, _)| i)
                .unwrap();
            let pivot_row = rows.swap_remove(pi);
            let (&pc, &pv) = pivot_row.iter().next().unwrap();
            let pv_inv = mod_inverse(pv, p);
            rank += 1;
            for row in rows.iter_mut() {
                if let Some(&val) = row.get(&pc) {
                    let factor = val * pv_inv % p;
                    for (&c, &x) in &pivot_row {
                        let cur = row.get(&c).copied().unwrap_or(0);
                        let new = (cur + p - factor * x % p) % p;
                        if new == 0 {
                            row.remove(&c);
                        } else {
                            row.insert(c, new);
                        }
                    }
                }
            }
            rows.retain(|r| !r.is_empty());
        }
        rank
    }

    /// Fraction-free Bareiss elimination on arbitrary-precision integers.
    fn rank_bareiss(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            a[r][c] = BigInt::from(v);
        }
        let n = self.rows;
        let m = self.cols;
        let mut prev = BigInt::one();
        let mut rank = 0;
        let mut row = 0;
        let mut cols: Vec<usize> = (0..m).collect();
        for step in 0..m.min(n) {
            // find a pivot in the remaining submatrix
            let mut pivot = None;
            'outer: for cj in step..m {
                for ri in row..n {
                    if !a[ri][cols[cj]].is_zero() {
                        pivot = Some((ri, cj));
                        break 'outer;
                    }
                }
            }
            let Some((pr, pc)) = pivot else { break };
            a.swap(row, pr);
            cols.swap(step, pc);
            let pcol = cols[step];
            for ri in row + 1..n {
                for cj in step + 1..m {
                    let c = cols[cj];
                    let num = &a[row][pcol] * &a[ri][c] - &a[ri][pcol] * &a[row][c];
                    a[ri][c] = num / &prev;
                }
                a[ri][pcol] = BigInt::zero();
            }
            prev = a[row][pcol].clone();
            rank += 1;
            row += 1;
        }
        rank
    }

    fn kernel_mod_p(&self, p: u64) -> Vec<Vec<i64>> {
        // dense RREF; kernel from free columns
        let mut a: Vec<Vec<u64>> = vec![vec![0; self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            a[r][c] = v.rem_euclid(p as i64) as u64;
        }
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(row, pr);
            let inv = mod_inverse(a[row][col], p);
            for x in a[row].iter_mut() {
                *x = *x * inv % p;
            }
            for r in 0..self.rows {
                if r != row && a[r][col] != 0 {
                    let f = a[r][col];
                    for c in 0..self.cols {
                        a[r][c] = (a[r][c] + p - f * a[row][c] % p) % p;
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == self.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![0i64; self.cols];
            v[free] = 1;
            for &(r, c) in &pivots {
                let coeff = a[r][free];
                if coeff != 0 {
                    v[c] = ((p - coeff) % p) as i64;
                }
            }
            basis.push(v);
        }
        basis
    }

    fn kernel_rational(&self) -> Vec<Vec<i64>> {
        let mut a: Vec<Vec<BigRational>> =
            vec![vec![BigRational::zero(); self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            a[r][c] = BigRational::from(BigInt::from(v));
        }
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(row, pr);
            let inv = a[row][col].recip();
            for x in a[row].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..self.rows {
                if r != row && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..self.cols {
                        let sub = &f * &a[row][c];
                        a[r][c] = &a[r][c] - sub;
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == self.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for &(r, c) in &pivots {
                v[c] = -a[r][free].clone();
            }
            // clear denominators
            let lcm = v
                .iter()
                .map(|x| x.denom().clone())
                .fold(BigInt::one(), |acc, d| num_integer_lcm(&acc, &d));
            let ints: Vec<i64> = v
                .iter()
                .map(|x| {
                    ((x.numer() * &lcm) / x.denom())
                        .to_i64()
                        .expect("kernel entry exceeds i64; matrix too large for this path")
                })
                .collect();
            basis.push(ints);
        }
        basis
    }
}

fn num_integer_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    let g = num_integer_gcd(a, b);
    (a / &g * b).abs()
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Modular inverse by Fermat for prime p.
fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
