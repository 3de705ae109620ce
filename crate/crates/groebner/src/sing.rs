//! Jacobian-criterion singularity tests for projective schemes.
//!
//! Over a field, `V(I)` of pure codimension `c` is singular exactly where
//! the `c×c` minors of the Jacobian of any generating set vanish along with
//! `I`. Emptiness of a projective scheme means its affine cone is at most
//! the origin, i.e. Krull dimension ≤ 0.

use crate::gb::GbError;
use crate::ideal::Ideal;
use crate::matrix::{jacobian, minor_count, minors_batch};

/// True iff `Proj(R/I)` has no points: the cone dimension is at most zero.
pub fn is_projectively_empty(i: &Ideal) -> Result<bool, GbError> {
    Ok(i.krull_dim()? <= 0)
}

/// The singular locus `I + (c×c minors of Jac(I))` with `c` the affine
/// codimension of `V(I)`.
pub fn singular_locus(i: &Ideal) -> Result<Ideal, GbError> {
    let ring = i.ring();
    let dim = i.krull_dim()?;
    let c = ring.nvars() as i64 - dim;
    assert!(c >= 0, "codimension cannot be negative");
    let jac = jacobian(ring, i.gens());
    let mins = crate::matrix::minors(ring, &jac, c as usize);
    Ok(i.plus_gens(mins))
}

/// Smoothness of `Proj(R/I)`, streaming Jacobian minors in batches with an
/// early exit: once a partial minor set already cuts the locus down to
/// nothing, the full singular locus is empty too.
pub fn is_smooth_projective(i: &Ideal) -> Result<bool, GbError> {
    let ring = i.ring();
    let dim = i.krull_dim()?;
    if dim <= 0 {
        // Nothing there to be singular.
        return Ok(true);
    }
    let c = (ring.nvars() as i64 - dim) as usize;
    let jac = jacobian(ring, i.gens());
    let total = minor_count(&jac, c);
    let batch = 16;
    let mut locus = i.clone();
    let mut start = 0;
    while start < total {
        let extra = minors_batch(ring, &jac, c, start, batch);
        start += batch;
        locus = locus.plus_gens(extra);
        if is_projectively_empty(&locus)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fpcore::{Polynomial, Ring};

    fn poly(r: &Ring, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(
            r,
            terms
                .iter()
                .map(|&(c, e)| (r.monomial(e), r.field().from_i64(c)))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn smooth_conic_vs_nodal_cubic() {
        let r = Ring::standard(32003, 3).unwrap();
        // x z − y² is a smooth conic.
        let conic = Ideal::new(&r, vec![poly(&r, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])])]);
        assert!(is_smooth_projective(&conic).unwrap());
        // y²z − x²(x + z) has a node at (0 : 0 : 1).
        let nodal = Ideal::new(
            &r,
            vec![poly(
                &r,
                &[(1, &[0, 2, 1]), (-1, &[3, 0, 0]), (-1, &[2, 0, 1])],
            )],
        );
        assert!(!is_smooth_projective(&nodal).unwrap());
        // Saturating the singular locus by the irrelevant ideal exposes the
        // node as the reduced point (0 : 0 : 1), i.e. the ideal (x, y).
        let sing = singular_locus(&nodal).unwrap();
        let irrelevant = Ideal::new(
            &r,
            (0..3).map(|i| poly(&r, &[(1, &[(i == 0) as u32, (i == 1) as u32, (i == 2) as u32])])).collect(),
        );
        let node = crate::ops::saturate(&sing, &irrelevant).unwrap();
        let xy = Ideal::new(&r, vec![poly(&r, &[(1, &[1, 0, 0])]), poly(&r, &[(1, &[0, 1, 0])])]);
        assert!(node.equals(&xy).unwrap());
    }

    #[test]
    fn emptiness() {
        let r = Ring::standard(32003, 2).unwrap();
        let irrelevant =
            Ideal::new(&r, vec![poly(&r, &[(1, &[1, 0])]), poly(&r, &[(1, &[0, 1])])]);
        assert!(is_projectively_empty(&irrelevant).unwrap());
        let point = Ideal::new(&r, vec![poly(&r, &[(1, &[1, 0])])]);
        assert!(!is_projectively_empty(&point).unwrap());
    }

    #[test]
    fn smooth_complete_intersection_curve() {
        let r = Ring::standard(32003, 4).unwrap();
        // Two generic-looking quadrics cutting a smooth elliptic curve.
        let q1 = poly(&r, &[(1, &[2, 0, 0, 0]), (1, &[0, 2, 0, 0]), (1, &[0, 0, 2, 0]), (1, &[0, 0, 0, 2])]);
        let q2 = poly(&r, &[(1, &[2, 0, 0, 0]), (2, &[0, 2, 0, 0]), (3, &[0, 0, 2, 0]), (5, &[0, 0, 0, 2])]);
        let i = Ideal::new(&r, vec![q1, q2]);
        assert!(is_smooth_projective(&i).unwrap());
    }
}
