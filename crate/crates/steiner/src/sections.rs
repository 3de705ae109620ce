//! Section counting through reflexive hulls, symmetric powers of a
//! presentation, Riemann–Roch bookkeeping, and the vanishing scheme of a
//! generic section.

use std::collections::HashMap;

use fpcore::{Polynomial, Rng, Scalar};
use graded::{hom_module, GradedModule};
use groebner::{minors, Ideal, PolyMatrix};
use itertools::Itertools;

use crate::linalg;
use crate::presentation::{SteinerError, SteinerPresentation};

/// Double dual Hom(Hom(M, R), R). It kills torsion and, when the
/// sheafification is locally free, saturates — its graded pieces then count
/// twisted global sections of the sheaf.
pub fn reflexive_hull(m: &GradedModule) -> Result<GradedModule, SteinerError> {
    let unit = GradedModule::free(m.ring(), vec![0]);
    let dual = hom_module(m, &unit)?;
    Ok(hom_module(&dual, &unit)?)
}

/// Dimension of the degree-`twist` piece of the reflexive hull — the
/// twisted section count whenever the sheafification is locally free.
pub fn sheaf_sections(m: &GradedModule, twist: i64) -> Result<i64, SteinerError> {
    Ok(reflexive_hull(m)?.graded_piece_dim(twist)?)
}

/// The k-th symmetric power of the cokernel, presented by
/// F₁ ⊗ Sym^{k−1}F₀ → Sym^k F₀ with w_j ⊗ e_J ↦ Σ_i M[i][j] · e_{J ∪ {i}}.
/// Supported for k = 1, 2, 3.
pub fn sym_power_module(
    p: &SteinerPresentation,
    k: u32,
) -> Result<GradedModule, SteinerError> {
    if !(1..=3).contains(&k) {
        return Err(SteinerError::UnsupportedPower(k));
    }
    let ring = p.ring();
    let m = p.matrix();
    let rows = m.len();
    let cols = m[0].len();
    let row_sets: Vec<Vec<usize>> =
        (0..rows).combinations_with_replacement(k as usize).collect();
    let col_sets: Vec<Vec<usize>> =
        (0..rows).combinations_with_replacement(k as usize - 1).collect();
    let index: HashMap<&[usize], usize> =
        row_sets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let ncols = cols * col_sets.len();
    let mut mat: PolyMatrix = vec![vec![Polynomial::zero(ring); ncols]; row_sets.len()];
    for (jj, set) in col_sets.iter().enumerate() {
        for j in 0..cols {
            let col = jj * cols + j;
            for i in 0..rows {
                let mut key = set.clone();
                let pos = key.partition_point(|&x| x <= i);
                key.insert(pos, i);
                let r = index[key.as_slice()];
                mat[r][col] = m[i][j].clone();
            }
        }
    }
    Ok(GradedModule::new(ring, vec![0; row_sets.len()], vec![1; ncols], mat)?)
}

/// χ(E(t)) for a rank-2 sheaf on the plane with Chern numbers (c₁, c₂):
/// the twist has c₁ + 2t and c₂ + t·c₁ + t².
pub fn riemann_roch_chi(c1: i64, c2: i64, t: i64) -> i64 {
    let c1t = c1 + 2 * t;
    let c2t = c2 + t * c1 + t * t;
    let num = 3 * c1t + c1t * c1t - 2 * c2t;
    debug_assert_eq!(num.rem_euclid(2), 0, "rank-2 Riemann–Roch numerator is even");
    2 + num / 2
}

/// The section counts that characterize Steiner-type sheaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectionCounts {
    /// h⁰(F(−1))
    pub h0_twist_minus_one: i64,
    /// h⁰(F)
    pub h0: i64,
    /// h¹(F(−2))
    pub h1_twist_minus_two: i64,
}

impl SectionCounts {
    /// The profile (0, b−2, b−4) expected of a Steiner sheaf.
    pub fn matches_steiner(&self, b: u32) -> bool {
        *self
            == SectionCounts {
                h0_twist_minus_one: 0,
                h0: b as i64 - 2,
                h1_twist_minus_two: b as i64 - 4,
            }
    }
}

/// Counts h⁰(F(−1)), h⁰(F), and h¹(F(−2)) for the cokernel sheaf. The h¹
/// comes from Riemann–Roch plus Serre duality: F∨ ≅ F(−c₁), so
/// h²(F(−2)) = h⁰(F(3−b)).
pub fn section_counts(p: &SteinerPresentation) -> Result<SectionCounts, SteinerError> {
    let hull = reflexive_hull(&p.module())?;
    let b = p.b() as i64;
    let h0_minus_two = hull.graded_piece_dim(-2)?;
    let h2_minus_two = hull.graded_piece_dim(3 - b)?;
    let h1 = h0_minus_two - riemann_roch_chi(p.c1(), p.c2(), -2) + h2_minus_two;
    Ok(SectionCounts {
        h0_twist_minus_one: hull.graded_piece_dim(-1)?,
        h0: hull.graded_piece_dim(0)?,
        h1_twist_minus_two: h1,
    })
}

/// Ideal of the vanishing scheme of a generic section: compose the
/// presentation with a generic full-rank scalar projection k^{b−2} → k^{b−3}
/// and take maximal minors of the composite. For a locally free cokernel
/// the scheme is c₂ points, so the ideal has cone dimension 1 and degree
/// c₂.
pub fn section_scheme_ideal(
    p: &SteinerPresentation,
    rng: &mut Rng,
) -> Result<Ideal, SteinerError> {
    let ring = p.ring();
    let field = ring.field();
    let rows = (p.b() - 2) as usize;
    let proj_rows = rows - 1;
    let proj = loop {
        let cand: Vec<Vec<Scalar>> = (0..proj_rows)
            .map(|_| (0..rows).map(|_| rng.uniform(ring.modulus())).collect())
            .collect();
        if linalg::rank(field, cand.clone()) == proj_rows {
            break cand;
        }
    };
    let cols = (p.b() - 4) as usize;
    let composed: PolyMatrix = proj
        .iter()
        .map(|prow| {
            (0..cols)
                .map(|j| {
                    let mut acc = Polynomial::zero(ring);
                    for (k, &c) in prow.iter().enumerate() {
                        if c != 0 {
                            acc = acc.add(&p.matrix()[k][j].scale(c));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let mins = minors(ring, &composed, cols);
    Ok(Ideal::new(ring, mins))
}
