//! Finitely presented graded modules as cokernels of degree-compatible
//! matrices between free modules.
//!
//! A module is stored as `coker(F₁ → F₀)` where `F₀ = ⊕ᵢ R(−gen_degs[i])`
//! and `F₁ = ⊕ⱼ R(−rel_degs[j])`; entry `(i, j)` of the presentation is
//! homogeneous of degree `rel_degs[j] − gen_degs[i]` or zero. Hilbert data
//! comes from the lead terms of a module Gröbner basis of the relation
//! columns, one monomial ideal per free-module coordinate.

use std::sync::OnceLock;

use fpcore::{Polynomial, Ring};
use groebner::{
    module_groebner, module_normal_form, syzygies, Budget, GbError, HilbertSeries, ModPoly,
    PolyMatrix,
};

use crate::resolution::matrix_columns;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GradedError {
    #[error(
        "presentation is {rows}×{cols} but the shifts promise {gens} generators and {rels} relations"
    )]
    ShapeMismatch { rows: usize, cols: usize, gens: usize, rels: usize },
    #[error("entry ({row}, {col}) must be homogeneous of degree {expected} or zero")]
    InhomogeneousEntry { row: usize, col: usize, expected: i64 },
    #[error("generator of a graded module must be homogeneous")]
    InhomogeneousElement,
    #[error(transparent)]
    Gb(#[from] GbError),
}

/// A finitely presented graded module `coker(F₁ → F₀)`.
#[derive(Debug, Clone)]
pub struct GradedModule {
    ring: Ring,
    gen_degs: Vec<i64>,
    rel_degs: Vec<i64>,
    presentation: PolyMatrix,
    gb: OnceLock<Vec<ModPoly>>,
    series: OnceLock<Vec<HilbertSeries>>,
}

impl GradedModule {
    /// Builds a module after checking shapes and degree compatibility.
    pub fn new(
        ring: &Ring,
        gen_degs: Vec<i64>,
        rel_degs: Vec<i64>,
        presentation: PolyMatrix,
    ) -> Result<Self, GradedError> {
        let shape_ok = presentation.len() == gen_degs.len()
            && presentation.iter().all(|row| row.len() == rel_degs.len());
        if !shape_ok {
            return Err(GradedError::ShapeMismatch {
                rows: presentation.len(),
                cols: presentation.first().map_or(0, |r| r.len()),
                gens: gen_degs.len(),
                rels: rel_degs.len(),
            });
        }
        for (i, row) in presentation.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let expected = rel_degs[j] - gen_degs[i];
                if entry.homogeneous_degree().map(i64::from) != Some(expected) {
                    return Err(GradedError::InhomogeneousEntry { row: i, col: j, expected });
                }
            }
        }
        Ok(GradedModule {
            ring: ring.clone(),
            gen_degs,
            rel_degs,
            presentation,
            gb: OnceLock::new(),
            series: OnceLock::new(),
        })
    }

    /// The free module `⊕ R(−d)` over the listed generator degrees.
    pub fn free(ring: &Ring, gen_degs: Vec<i64>) -> Self {
        let rows = gen_degs.len();
        GradedModule {
            ring: ring.clone(),
            gen_degs,
            rel_degs: Vec::new(),
            presentation: vec![Vec::new(); rows],
            gb: OnceLock::new(),
            series: OnceLock::new(),
        }
    }

    /// The cyclic module `R/(gens)` for homogeneous generators.
    pub fn quotient(ring: &Ring, gens: &[Polynomial]) -> Result<Self, GradedError> {
        let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
        let mut rel_degs = Vec::with_capacity(gens.len());
        for g in &gens {
            let d = g.homogeneous_degree().ok_or(GradedError::InhomogeneousElement)?;
            rel_degs.push(i64::from(d));
        }
        GradedModule::new(
            ring,
            vec![0],
            rel_degs,
            vec![gens.into_iter().cloned().collect()],
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gen_degs(&self) -> &[i64] {
        &self.gen_degs
    }

    pub fn rel_degs(&self) -> &[i64] {
        &self.rel_degs
    }

    pub fn presentation(&self) -> &PolyMatrix {
        &self.presentation
    }

    pub fn rank(&self) -> usize {
        self.gen_degs.len()
    }

    /// The twist `M(t)`: degree `d` of the twist reads degree `d + t` of `M`.
    pub fn shifted(&self, t: i64) -> Self {
        GradedModule {
            ring: self.ring.clone(),
            gen_degs: self.gen_degs.iter().map(|a| a - t).collect(),
            rel_degs: self.rel_degs.iter().map(|a| a - t).collect(),
            presentation: self.presentation.clone(),
            gb: self.gb.clone(),
            series: OnceLock::new(),
        }
    }

    /// Presentation columns as elements of `F₀`.
    pub fn columns(&self) -> Vec<ModPoly> {
        (0..self.rel_degs.len())
            .map(|j| {
                ModPoly::from_components(
                    &self.ring,
                    &(0..self.gen_degs.len())
                        .map(|i| (i as u32, self.presentation[i][j].clone()))
                        .collect::<Vec<_>>(),
                )
            })
            .collect()
    }

    /// Module Gröbner basis of the relation submodule, cached on success.
    pub fn relations_gb(&self) -> Result<&[ModPoly], GbError> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = module_groebner(&self.ring, &self.columns(), &mut Budget::default())?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// True iff every generator lies in the relation submodule.
    pub fn is_zero(&self) -> Result<bool, GbError> {
        if self.gen_degs.is_empty() {
            return Ok(true);
        }
        let gb = self.relations_gb()?.to_vec();
        for i in 0..self.gen_degs.len() {
            let unit = ModPoly::from_poly(&self.ring, i as u32, &Polynomial::one(&self.ring));
            let nf = module_normal_form(&self.ring, &unit, &gb, &mut Budget::default())?;
            if !nf.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hilbert series of `F₀ / LT(relations)`, one per coordinate.
    fn component_series(&self) -> Result<&[HilbertSeries], GbError> {
        if let Some(s) = self.series.get() {
            return Ok(s);
        }
        let gb = self.relations_gb()?;
        let mut per_comp: Vec<Vec<fpcore::Monomial>> = vec![Vec::new(); self.gen_degs.len()];
        for f in gb {
            let lt = f.lead().expect("basis elements are nonzero");
            per_comp[lt.comp as usize].push(lt.mono);
        }
        let series: Vec<HilbertSeries> = per_comp
            .iter()
            .map(|leads| HilbertSeries::of_quotient(&self.ring, leads))
            .collect();
        Ok(self.series.get_or_init(|| series))
    }

    /// Dimension of the degree-`d` graded piece.
    pub fn graded_piece_dim(&self, d: i64) -> Result<i64, GbError> {
        let series = self.component_series()?;
        let mut total = 0i64;
        for (s, &a) in series.iter().zip(&self.gen_degs) {
            let local = d - a;
            if local >= 0 {
                total += s.value_at(local as u32);
            }
        }
        Ok(total)
    }

    /// Hilbert polynomial of the module at any integer argument.
    pub fn hilbert_polynomial_at(&self, d: i64) -> Result<i64, GbError> {
        let series = self.component_series()?;
        let mut total = 0i64;
        for (s, &a) in series.iter().zip(&self.gen_degs) {
            total += s.polynomial_at(d - a);
        }
        Ok(total)
    }

    /// Sheaf-theoretic Euler characteristic: the Hilbert polynomial at 0.
    pub fn euler_characteristic(&self) -> Result<i64, GbError> {
        self.hilbert_polynomial_at(0)
    }

    /// Krull dimension of the module (−1 for the zero module).
    pub fn krull_dim(&self) -> Result<i64, GbError> {
        let series = self.component_series()?;
        Ok(series.iter().map(|s| s.krull_dim()).max().unwrap_or(-1))
    }

    /// Cancels unit scalar entries of the presentation, drops zero
    /// columns, and prunes relation columns lying in the span of the
    /// others, producing an isomorphic module on minimal generators and
    /// minimal relations.
    pub fn minimal_presentation(&self) -> Self {
        let mut mat = self.presentation.clone();
        let mut gen_degs = self.gen_degs.clone();
        let mut rel_degs = self.rel_degs.clone();
        cancel_scalar_entries(&self.ring, &mut mat, &mut gen_degs, &mut rel_degs, None);
        drop_zero_columns(&mut mat, &mut rel_degs);
        minimalize_relations(&self.ring, &mut mat, &gen_degs, &mut rel_degs);
        GradedModule {
            ring: self.ring.clone(),
            gen_degs,
            rel_degs,
            presentation: mat,
            gb: OnceLock::new(),
            series: OnceLock::new(),
        }
    }
}

/// Drops relation columns that lie in the submodule spanned by the other
/// columns. Such a column appears with a unit coefficient in some syzygy
/// among the columns, so cancelling scalar entries of the syzygy matrix —
/// with the presentation as the previous differential — deletes exactly
/// the redundant relations. Best-effort: if the syzygy computation blows
/// its budget the presentation is left as it was, which is still correct,
/// just not relation-minimal.
fn minimalize_relations(
    ring: &Ring,
    mat: &mut PolyMatrix,
    gen_degs: &[i64],
    rel_degs: &mut Vec<i64>,
) {
    if rel_degs.len() < 2 {
        return;
    }
    let cols = matrix_columns(ring, mat, gen_degs.len());
    let Ok(syz) = syzygies(ring, gen_degs.len() as u32, &cols, &mut Budget::default())
    else {
        return;
    };
    if syz.is_empty() {
        return;
    }
    let mut syz_degs: Vec<i64> = syz
        .iter()
        .map(|s| element_degree(s, rel_degs).expect("nonzero syzygy"))
        .collect();
    let mut mat2: PolyMatrix = (0..rel_degs.len())
        .map(|i| syz.iter().map(|s| s.component(ring, i as u32)).collect())
        .collect();
    cancel_scalar_entries(ring, &mut mat2, rel_degs, &mut syz_degs, Some(mat));
}

/// Removes columns that are entirely zero.
pub(crate) fn drop_zero_columns(mat: &mut PolyMatrix, src_degs: &mut Vec<i64>) {
    let mut keep: Vec<usize> = Vec::new();
    for j in 0..src_degs.len() {
        if mat.iter().any(|row| !row[j].is_zero()) {
            keep.push(j);
        }
    }
    if keep.len() == src_degs.len() {
        return;
    }
    *src_degs = keep.iter().map(|&j| src_degs[j]).collect();
    for row in mat.iter_mut() {
        *row = keep.iter().map(|&j| row[j].clone()).collect();
    }
}

/// Gaussian cancellation of unit scalar entries: while some entry `(r, c)`
/// is a nonzero constant `u`, replace the matrix by its Schur complement
/// (`m[k][c'] −= m[k][c]·u⁻¹·m[r][c']`), then delete row `r` and column `c`.
/// Each deleted target row also deletes column `r` of `prev`, the previous
/// differential mapping out of the same free module. This is the standard
/// homotopy equivalence, so cokernels and homology are unchanged.
pub(crate) fn cancel_scalar_entries(
    ring: &Ring,
    mat: &mut PolyMatrix,
    tgt_degs: &mut Vec<i64>,
    src_degs: &mut Vec<i64>,
    mut prev: Option<&mut PolyMatrix>,
) {
    let field = ring.field();
    loop {
        let Some((r, c)) = find_scalar_entry(mat) else {
            return;
        };
        let u = mat[r][c].lead_coeff().expect("scalar entry is nonzero");
        let uinv = field.inv(u).expect("nonzero scalar in a field");
        let pivot_col: Vec<Polynomial> = mat.iter().map(|row| row[c].clone()).collect();
        let pivot_row: Vec<Polynomial> = mat[r].clone();
        for (k, row) in mat.iter_mut().enumerate() {
            if k == r || pivot_col[k].is_zero() {
                continue;
            }
            let factor = pivot_col[k].scale(uinv);
            for (cc, entry) in row.iter_mut().enumerate() {
                if cc == c || pivot_row[cc].is_zero() {
                    continue;
                }
                *entry = entry.sub(&factor.mul(&pivot_row[cc]));
            }
        }
        mat.remove(r);
        tgt_degs.remove(r);
        for row in mat.iter_mut() {
            row.remove(c);
        }
        src_degs.remove(c);
        if let Some(prev_mat) = prev.as_deref_mut() {
            for row in prev_mat.iter_mut() {
                row.remove(r);
            }
        }
    }
}

fn find_scalar_entry(mat: &PolyMatrix) -> Option<(usize, usize)> {
    for (r, row) in mat.iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            if !entry.is_zero() && entry.degree() == Some(0) {
                return Some((r, c));
            }
        }
    }
    None
}

/// Degree of a homogeneous module element under the given coordinate
/// shifts; `None` for the zero element.
pub(crate) fn element_degree(v: &ModPoly, shifts: &[i64]) -> Option<i64> {
    let lt = v.lead()?;
    let d = i64::from(lt.mono.deg()) + shifts[lt.comp as usize];
    debug_assert!(
        v.terms()
            .iter()
            .all(|t| i64::from(t.mono.deg()) + shifts[t.comp as usize] == d),
        "module element is not homogeneous"
    );
    Some(d)
}
