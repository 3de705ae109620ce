//! Minimal graded free resolutions by iterated syzygy computation.
//!
//! Each syzygy step runs a module Gröbner basis with unit columns adjoined;
//! scalar entries are cancelled eagerly (Gaussian homotopy equivalence), so
//! the finished complex has every entry in the maximal ideal and its Betti
//! numbers are the minimal ones.

use fpcore::Ring;
use groebner::{mat_mul, syzygies, Budget, GbError, ModPoly, PolyMatrix};

use crate::module::{
    cancel_scalar_entries, drop_zero_columns, element_degree, GradedModule,
};

/// A graded complex `F_len → … → F₁ → F₀` resolving a module.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    ring: Ring,
    shifts: Vec<Vec<i64>>,
    diffs: Vec<PolyMatrix>,
    complete: bool,
}

impl FreeResolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Ranks of the free modules, `F₀` first.
    pub fn betti(&self) -> Vec<usize> {
        self.shifts.iter().map(|s| s.len()).collect()
    }

    /// Generator degrees of each free module, `F₀` first.
    pub fn shifts(&self) -> &[Vec<i64>] {
        &self.shifts
    }

    /// The differential `d_k : F_k → F_{k−1}` for `1 ≤ k ≤ length`.
    pub fn differential(&self, k: usize) -> &PolyMatrix {
        &self.diffs[k - 1]
    }

    /// Number of differentials computed so far.
    pub fn length(&self) -> usize {
        self.diffs.len()
    }

    /// True when the last syzygy step came back empty, i.e. the deepest
    /// differential is injective.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// True iff no differential carries a nonzero scalar entry.
    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().all(|d| {
            d.iter()
                .flatten()
                .all(|e| e.is_zero() || e.degree() != Some(0))
        })
    }

    /// Exactness smoke test: every composite `d_k ∘ d_{k+1}` vanishes.
    pub fn composes_to_zero(&self) -> bool {
        for k in 1..self.diffs.len() {
            let prod = mat_mul(&self.ring, &self.diffs[k - 1], &self.diffs[k]);
            if prod.iter().flatten().any(|e| !e.is_zero()) {
                return false;
            }
        }
        true
    }

    /// Alternating sum of ranks, `F₀` positive.
    pub fn rank_alternating_sum(&self) -> i64 {
        self.shifts
            .iter()
            .enumerate()
            .map(|(i, s)| if i % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }
}

/// Resolves `m` by at most `max_length` syzygy steps, minimalizing as it
/// goes. With `max_length ≥ nvars + 1` the resolution always completes, by
/// the syzygy theorem.
pub fn free_resolution(m: &GradedModule, max_length: usize) -> Result<FreeResolution, GbError> {
    let ring = m.ring().clone();
    let min = m.minimal_presentation();
    let mut shifts: Vec<Vec<i64>> = vec![min.gen_degs().to_vec()];
    let mut diffs: Vec<PolyMatrix> = Vec::new();

    if min.rank() == 0 || min.rel_degs().is_empty() {
        return Ok(FreeResolution { ring, shifts, diffs, complete: true });
    }
    shifts.push(min.rel_degs().to_vec());
    diffs.push(min.presentation().clone());

    let mut complete = false;
    while diffs.len() < max_length {
        let level = diffs.len();
        let ambient = shifts[level - 1].len();
        let rank = shifts[level].len();
        let cols = matrix_columns(&ring, diffs.last().unwrap(), ambient);
        let syz = syzygies(&ring, ambient as u32, &cols, &mut Budget::default())?;
        let syz: Vec<ModPoly> = syz.into_iter().filter(|s| !s.is_zero()).collect();
        if syz.is_empty() {
            complete = true;
            break;
        }
        let mut new_degs: Vec<i64> = syz
            .iter()
            .map(|s| element_degree(s, &shifts[level]).expect("nonzero syzygy"))
            .collect();
        let mut mat: PolyMatrix = (0..rank)
            .map(|i| {
                syz.iter()
                    .map(|s| s.component(&ring, i as u32))
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut prev = diffs.pop().unwrap();
        let tgt_degs = &mut shifts[level];
        cancel_scalar_entries(&ring, &mut mat, tgt_degs, &mut new_degs, Some(&mut prev));
        drop_zero_columns(&mut mat, &mut new_degs);
        diffs.push(prev);
        if new_degs.is_empty() {
            complete = true;
            break;
        }
        shifts.push(new_degs);
        diffs.push(mat);
    }
    Ok(FreeResolution { ring, shifts, diffs, complete })
}

/// Columns of a matrix as elements of the rank-`rank` free module.
pub(crate) fn matrix_columns(ring: &Ring, mat: &PolyMatrix, rank: usize) -> Vec<ModPoly> {
    let cols = mat.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| {
            ModPoly::from_components(
                ring,
                &(0..rank)
                    .map(|i| (i as u32, mat[i][j].clone()))
                    .collect::<Vec<_>>(),
            )
        })
        .collect()
}
