//! Variable elimination and kernels of graded ring maps.
//!
//! Both rest on the block order: a Gröbner basis computed with the doomed
//! variables in the dominant block intersects the subring in a Gröbner basis
//! of the eliminated ideal. Ring-map kernels add the graph trick — adjoin
//! the source variables to the target ring, impose `tᵢ − φ(tᵢ)`, and
//! eliminate the target's variables.

use fpcore::{MonomialOrder, Polynomial, Ring, RingError};
use thiserror::Error;

use crate::gb::{Budget, GbError};
use crate::ideal::Ideal;

#[derive(Debug, Error)]
pub enum ElimError {
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("cannot eliminate {drop} of {nvars} variables")]
    BadVariableSplit { drop: usize, nvars: usize },
    #[error("ring-map images must be homogeneous and nonzero")]
    InhomogeneousImage,
    #[error("graph ring needs {0} variables, which exceeds the supported cap")]
    TooManyVariables(usize),
}

/// Eliminates the variables at `drop` from `i`, returning the ideal
/// `I ∩ k[remaining variables]` inside a fresh grevlex ring on the surviving
/// variables (original names and weights, original order).
pub fn eliminate(i: &Ideal, drop: &[usize]) -> Result<Ideal, ElimError> {
    let ring = i.ring();
    let n = ring.nvars();
    let mut seen = vec![false; n];
    for &v in drop {
        assert!(v < n, "variable index out of range");
        assert!(!seen[v], "variable listed twice");
        seen[v] = true;
    }
    if drop.is_empty() || drop.len() >= n {
        return Err(ElimError::BadVariableSplit { drop: drop.len(), nvars: n });
    }
    let keep: Vec<usize> = (0..n).filter(|v| !seen[*v]).collect();

    // Elimination ring: dropped variables first, block order.
    let mut vars: Vec<String> = drop.iter().map(|&v| ring.vars()[v].clone()).collect();
    vars.extend(keep.iter().map(|&v| ring.vars()[v].clone()));
    let mut weights: Vec<u32> = drop.iter().map(|&v| ring.weights()[v]).collect();
    weights.extend(keep.iter().map(|&v| ring.weights()[v]));
    let elim_ring = Ring::new(
        ring.modulus(),
        vars,
        weights,
        MonomialOrder::Block { first: drop.len() },
    )?;

    // Where each original variable lands in the elimination ring.
    let mut var_map = vec![0usize; n];
    for (pos, &v) in drop.iter().enumerate() {
        var_map[v] = pos;
    }
    for (pos, &v) in keep.iter().enumerate() {
        var_map[v] = drop.len() + pos;
    }

    let mapped: Vec<Polynomial> =
        i.gens().iter().map(|g| g.map_vars(&elim_ring, &var_map)).collect();
    let gb = Ideal::new(&elim_ring, mapped);
    let gb = gb.groebner_basis_budgeted(&mut Budget::default())?;

    // Survivors: basis elements whose lead (hence every term, by the block
    // order) avoids the dropped block.
    let result_ring = Ring::new(
        ring.modulus(),
        keep.iter().map(|&v| ring.vars()[v].clone()).collect(),
        keep.iter().map(|&v| ring.weights()[v]).collect(),
        MonomialOrder::GrevLex,
    )?;
    let cut = drop.len();
    let mut out = Vec::new();
    for g in gb {
        let lead = g.lead_mono().expect("basis elements are nonzero");
        if (0..cut).all(|v| lead.exp(v) == 0) {
            let terms: Vec<_> = g
                .terms()
                .iter()
                .map(|t| {
                    debug_assert!((0..cut).all(|v| t.mono.exp(v) == 0));
                    let exps: Vec<u32> =
                        (cut..elim_ring.nvars()).map(|v| t.mono.exp(v) as u32).collect();
                    (result_ring.monomial(&exps), t.coeff)
                })
                .collect();
            out.push(Polynomial::from_terms(&result_ring, terms));
        }
    }
    Ok(Ideal::new(&result_ring, out))
}

/// Kernel of the graded ring map `source → target_ring/target`, sending the
/// i-th source variable to `images[i]`. The images must be homogeneous (any
/// degrees); the kernel comes back as an ideal of `source`, with source
/// exponents carried over verbatim.
pub fn ring_map_kernel(
    source: &Ring,
    target: &Ideal,
    images: &[Polynomial],
) -> Result<Ideal, ElimError> {
    let tring = target.ring();
    assert_eq!(images.len(), source.nvars(), "one image per source variable");
    let mut image_degrees = Vec::with_capacity(images.len());
    for im in images {
        assert_eq!(im.ring(), tring, "image outside the target ring");
        let d = im.homogeneous_degree().ok_or(ElimError::InhomogeneousImage)?;
        image_degrees.push(d as u32);
    }
    let total = tring.nvars() + source.nvars();
    if total > fpcore::MAX_VARS {
        return Err(ElimError::TooManyVariables(total));
    }

    // Graph ring: target variables (to be eliminated) first, then the source
    // variables weighted by their image degrees so the graph is homogeneous.
    let mut vars: Vec<String> = tring.vars().to_vec();
    vars.extend(source.vars().iter().cloned());
    let mut weights: Vec<u32> = tring.weights().to_vec();
    weights.extend(image_degrees.iter().copied());
    let graph_ring = Ring::new(
        tring.modulus(),
        vars,
        weights,
        MonomialOrder::Block { first: tring.nvars() },
    )?;

    let tmap: Vec<usize> = (0..tring.nvars()).collect();
    let mut gens: Vec<Polynomial> =
        target.gens().iter().map(|g| g.map_vars(&graph_ring, &tmap)).collect();
    for (i, im) in images.iter().enumerate() {
        let t_i = Polynomial::var(&graph_ring, tring.nvars() + i);
        gens.push(t_i.sub(&im.map_vars(&graph_ring, &tmap)));
    }

    let graph = Ideal::new(&graph_ring, gens);
    let gb = graph.groebner_basis_budgeted(&mut Budget::default())?;

    let cut = tring.nvars();
    let mut out = Vec::new();
    for g in gb {
        let lead = g.lead_mono().expect("basis elements are nonzero");
        if (0..cut).all(|v| lead.exp(v) == 0) {
            let terms: Vec<_> = g
                .terms()
                .iter()
                .map(|t| {
                    debug_assert!((0..cut).all(|v| t.mono.exp(v) == 0));
                    let exps: Vec<u32> =
                        (cut..graph_ring.nvars()).map(|v| t.mono.exp(v) as u32).collect();
                    (source.monomial(&exps), t.coeff)
                })
                .collect();
            out.push(Polynomial::from_terms(source, terms));
        }
    }
    Ok(Ideal::new(source, out))
}
