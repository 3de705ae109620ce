//! Dense polynomial matrices: products, transposes, determinants, minors,
//! and Jacobians.
//!
//! Determinants use Laplace expansion with memoization on column subsets,
//! which is fast for the small (≤ 6×6) minors this engine takes. Minor
//! enumeration is data-parallel when the `parallel` feature is on; the
//! sequential path is always available as its own function.

use std::collections::HashMap;

use fpcore::{Polynomial, Ring};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Row-major matrix of polynomials.
pub type PolyMatrix = Vec<Vec<Polynomial>>;

pub fn transpose(m: &PolyMatrix) -> PolyMatrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul(ring: &Ring, a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let inner = a[0].len();
    assert_eq!(inner, b.len(), "matrix shapes do not compose");
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| {
                    let mut acc = Polynomial::zero(ring);
                    for (k, f) in row.iter().enumerate() {
                        acc = acc.add(&f.mul(&b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Determinant of the square submatrix picked out by `rows` × `cols`,
/// expanding along successive rows with memoization keyed on the remaining
/// column set (as a bitmask over positions in `cols`).
fn det_submatrix(ring: &Ring, m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    assert_eq!(rows.len(), cols.len());
    assert!(cols.len() <= 32, "minor size beyond the supported cap");
    let mut memo: HashMap<u32, Polynomial> = HashMap::new();
    let full: u32 = if cols.is_empty() { 0 } else { (1u32 << cols.len()) - 1 };
    det_rec(ring, m, rows, cols, full, 0, &mut memo)
}

fn det_rec(
    ring: &Ring,
    m: &PolyMatrix,
    rows: &[usize],
    cols: &[usize],
    cols_mask: u32,
    depth: usize,
    memo: &mut HashMap<u32, Polynomial>,
) -> Polynomial {
    if depth == rows.len() {
        return Polynomial::one(ring);
    }
    if let Some(hit) = memo.get(&cols_mask) {
        return hit.clone();
    }
    let row = rows[depth];
    let mut acc = Polynomial::zero(ring);
    let mut sign_flip = false;
    for (pos, &col) in cols.iter().enumerate() {
        if cols_mask & (1 << pos) == 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.is_zero() {
            let sub = det_rec(ring, m, rows, cols, cols_mask & !(1 << pos), depth + 1, memo);
            let contrib = entry.mul(&sub);
            acc = if sign_flip { acc.sub(&contrib) } else { acc.add(&contrib) };
        }
        sign_flip = !sign_flip;
    }
    memo.insert(cols_mask, acc.clone());
    acc
}

/// Determinant of a square matrix.
pub fn det(ring: &Ring, m: &PolyMatrix) -> Polynomial {
    if m.is_empty() {
        return Polynomial::one(ring);
    }
    assert_eq!(m.len(), m[0].len(), "determinant of a non-square matrix");
    let idx: Vec<usize> = (0..m.len()).collect();
    det_submatrix(ring, m, &idx, &idx)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// All `k×k` minors in lexicographic subset order, zeros dropped.
pub fn minors_seq(ring: &Ring, m: &PolyMatrix, k: usize) -> Vec<Polynomial> {
    minor_subsets(m, k)
        .into_iter()
        .map(|(rows, cols)| det_submatrix(ring, m, &rows, &cols))
        .filter(|d| !d.is_zero())
        .collect()
}

#[cfg(feature = "parallel")]
pub fn minors_par(ring: &Ring, m: &PolyMatrix, k: usize) -> Vec<Polynomial> {
    minor_subsets(m, k)
        .into_par_iter()
        .map(|(rows, cols)| det_submatrix(ring, m, &rows, &cols))
        .filter(|d| !d.is_zero())
        .collect()
}

fn minor_subsets(m: &PolyMatrix, k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    if m.is_empty() || k == 0 || k > m.len() || k > m[0].len() {
        return Vec::new();
    }
    let row_sets = subsets(m.len(), k);
    let col_sets = subsets(m[0].len(), k);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for r in &row_sets {
        for c in &col_sets {
            out.push((r.clone(), c.clone()));
        }
    }
    out
}

/// All `k×k` minors of `m`, in a deterministic order.
pub fn minors(ring: &Ring, m: &PolyMatrix, k: usize) -> Vec<Polynomial> {
    #[cfg(feature = "parallel")]
    {
        minors_par(ring, m, k)
    }
    #[cfg(not(feature = "parallel"))]
    {
        minors_seq(ring, m, k)
    }
}

/// How many `k×k` minors `m` has (zero determinants included).
pub fn minor_count(m: &PolyMatrix, k: usize) -> usize {
    minor_subsets(m, k).len()
}

/// The slice `start..start+len` of the deterministic minor enumeration,
/// zeros dropped. Lets callers stream minors and stop early.
pub fn minors_batch(
    ring: &Ring,
    m: &PolyMatrix,
    k: usize,
    start: usize,
    len: usize,
) -> Vec<Polynomial> {
    let all = minor_subsets(m, k);
    let end = (start + len).min(all.len());
    if start >= end {
        return Vec::new();
    }
    let window = &all[start..end];
    #[cfg(feature = "parallel")]
    {
        window
            .par_iter()
            .map(|(rows, cols)| det_submatrix(ring, m, rows, cols))
            .filter(|d| !d.is_zero())
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        window
            .iter()
            .map(|(rows, cols)| det_submatrix(ring, m, rows, cols))
            .filter(|d| !d.is_zero())
            .collect()
    }
}

/// Jacobian matrix `(∂g_i/∂x_j)` of a generator list.
pub fn jacobian(ring: &Ring, gens: &[Polynomial]) -> PolyMatrix {
    gens.iter()
        .map(|g| (0..ring.nvars()).map(|j| g.derivative(j)).collect())
        .collect()
}
