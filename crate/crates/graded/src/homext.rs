//! Hom modules, Ext modules, and the subquotient presentations behind them.
//!
//! Both constructions reduce to one primitive: given homogeneous elements
//! `gens` and `rels` of a graded free module, present the subquotient
//! `(⟨gens⟩ + ⟨rels⟩) / ⟨rels⟩` on the images of `gens`. Its relations are
//! exactly the coefficient vectors `h` with `Σ hₖ·gensₖ ∈ ⟨rels⟩`, read off
//! the watched coordinates of a syzygy computation over `[gens | rels]`.

use fpcore::{Polynomial, Ring};
use groebner::{syzygies, syzygies_watched, transpose, Budget, ModPoly, PolyMatrix};

use crate::module::{element_degree, GradedError, GradedModule};
use crate::resolution::{free_resolution, matrix_columns};

/// Presents `(⟨gens⟩ + ⟨rels⟩) / ⟨rels⟩` inside `⊕ R(−ambient_degs[i])`.
pub fn subquotient(
    ring: &Ring,
    ambient_degs: &[i64],
    gens: &[ModPoly],
    rels: &[ModPoly],
) -> Result<GradedModule, GradedError> {
    let gens: Vec<ModPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(GradedModule::free(ring, Vec::new()));
    }
    let gen_degs: Vec<i64> = gens
        .iter()
        .map(|g| element_degree(g, ambient_degs).expect("nonzero generator"))
        .collect();
    let mut all = gens.clone();
    all.extend(rels.iter().cloned());
    let syz = syzygies_watched(
        ring,
        ambient_degs.len() as u32,
        &all,
        gens.len(),
        &mut Budget::default(),
    )?;
    let cols: Vec<ModPoly> = syz.into_iter().filter(|s| !s.is_zero()).collect();
    let rel_degs: Vec<i64> = cols
        .iter()
        .map(|s| element_degree(s, &gen_degs).expect("nonzero relation"))
        .collect();
    let mat: PolyMatrix = (0..gens.len())
        .map(|i| cols.iter().map(|s| s.component(ring, i as u32)).collect::<Vec<_>>())
        .collect();
    Ok(GradedModule::new(ring, gen_degs, rel_degs, mat)?)
}

/// `Hom(M, N)` as a finitely presented graded module.
///
/// With `M = coker(A: F₁ → F₀)` and `N = coker(B: G₁ → G₀)`, a homomorphism
/// is a map `F₀ → N` killed by composition with `A`. Flattening
/// `Hom(F₀, G₀)` into one free module `U`, the condition reads
/// `(Aᵀ⊗1)·φ ∈ im(1⊗B)`, so the homomorphisms are the watched coordinates of
/// syzygies over `[Aᵀ⊗1 | 1⊗B]`, and relations come from `im(1⊗B)` in `U`.
pub fn hom_module(m: &GradedModule, n: &GradedModule) -> Result<GradedModule, GradedError> {
    assert_eq!(m.ring(), n.ring(), "Hom needs both modules over one ring");
    let ring = m.ring().clone();
    let r0 = m.gen_degs().len();
    let r1 = m.rel_degs().len();
    let g0 = n.gen_degs().len();
    let g1 = n.rel_degs().len();
    let a = m.presentation();
    let b = n.presentation();

    // U = Hom(F₀, G₀): coordinate (i, k) ↦ i·g0 + k, degree c_k − a_i.
    let u_degs: Vec<i64> = (0..r0)
        .flat_map(|i| (0..g0).map(move |k| (i, k)))
        .map(|(i, k)| n.gen_degs()[k] - m.gen_degs()[i])
        .collect();
    // W = Hom(F₁, G₀): coordinate (j, k) ↦ j·g0 + k.
    let w_rank = (r1 * g0) as u32;

    // Columns of Aᵀ⊗1: image of U's basis vector (i, k) is Σ_j A[i][j]·e_(j,k).
    let compose_with_a: Vec<ModPoly> = (0..r0)
        .flat_map(|i| (0..g0).map(move |k| (i, k)))
        .map(|(i, k)| {
            ModPoly::from_components(
                &ring,
                &(0..r1)
                    .map(|j| ((j * g0 + k) as u32, a[i][j].clone()))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    // Columns of 1⊗B inside W: relation l of N placed in block j.
    let n_rels_in_w: Vec<ModPoly> = (0..r1)
        .flat_map(|j| (0..g1).map(move |l| (j, l)))
        .map(|(j, l)| {
            ModPoly::from_components(
                &ring,
                &(0..g0)
                    .map(|k| ((j * g0 + k) as u32, b[k][l].clone()))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    // Columns of 1⊗B inside U: the relations of Hom(F₀, N).
    let n_rels_in_u: Vec<ModPoly> = (0..r0)
        .flat_map(|i| (0..g1).map(move |l| (i, l)))
        .map(|(i, l)| {
            ModPoly::from_components(
                &ring,
                &(0..g0)
                    .map(|k| ((i * g0 + k) as u32, b[k][l].clone()))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();

    let mut all = compose_with_a.clone();
    all.extend(n_rels_in_w.iter().cloned());
    let hom_gens: Vec<ModPoly> = if w_rank == 0 {
        // M is free: every map F₀ → N is a homomorphism.
        (0..u_degs.len())
            .map(|t| ModPoly::from_poly(&ring, t as u32, &Polynomial::one(&ring)))
            .collect()
    } else {
        syzygies_watched(&ring, w_rank, &all, compose_with_a.len(), &mut Budget::default())?
            .into_iter()
            .filter(|s| !s.is_zero())
            .collect()
    };
    subquotient(&ring, &u_degs, &hom_gens, &n_rels_in_u)
}

/// `Ext^i(M, R(twist))`: cohomology of the dualized minimal free resolution
/// at homological position `i`.
pub fn ext_module(i: usize, m: &GradedModule, twist: i64) -> Result<GradedModule, GradedError> {
    let ring = m.ring().clone();
    let res = free_resolution(m, i + 1)?;
    if i > res.length() {
        debug_assert!(res.is_complete());
        return Ok(GradedModule::free(&ring, Vec::new()));
    }
    // Hom(R(−a), R(twist)) = R(a + twist): generator degree −a − twist.
    let ambient_degs: Vec<i64> = res.shifts()[i].iter().map(|a| -a - twist).collect();
    let ker: Vec<ModPoly> = if i == res.length() {
        debug_assert!(res.is_complete());
        (0..ambient_degs.len())
            .map(|t| ModPoly::from_poly(&ring, t as u32, &Polynomial::one(&ring)))
            .collect()
    } else {
        // ker(d_{i+1}ᵀ) = syzygies of the columns of d_{i+1}ᵀ.
        let dt = transpose(res.differential(i + 1));
        let rank = res.shifts()[i + 1].len();
        syzygies(
            &ring,
            rank as u32,
            &matrix_columns(&ring, &dt, rank),
            &mut Budget::default(),
        )?
        .into_iter()
        .filter(|s| !s.is_zero())
        .collect()
    };
    let im: Vec<ModPoly> = if i == 0 {
        Vec::new()
    } else {
        let dt = transpose(res.differential(i));
        matrix_columns(&ring, &dt, res.shifts()[i].len())
            .into_iter()
            .filter(|s| !s.is_zero())
            .collect()
    };
    subquotient(&ring, &ambient_degs, &ker, &im)
}
