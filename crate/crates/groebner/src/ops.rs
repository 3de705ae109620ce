//! Ideal intersection, quotient, and saturation, all phrased as syzygy
//! computations on stacked module columns.
//!
//! For `I ∩ J`: a combination `f·(1,1) + Σ aᵢ(gᵢ,0) + Σ bⱼ(0,hⱼ) = 0` forces
//! `f ∈ I` (row one) and `f ∈ J` (row two), and every element of the
//! intersection appears as such an `f`. For `I : J` with `J = (h₁,…,hₛ)`:
//! stack the column `(h₁,…,hₛ)` against per-row copies of `I`'s generators,
//! so a vanishing combination's first coefficient multiplies every `hⱼ` into
//! `I` at once. Saturation iterates the quotient until it stabilizes.

use fpcore::Polynomial;

use crate::gb::{syzygy_coordinate_zero, Budget, GbError, ModPoly};
use crate::ideal::Ideal;

/// Intersection `I ∩ J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal, GbError> {
    let ring = i.ring();
    assert_eq!(ring, j.ring(), "ideals in different rings");
    let one = Polynomial::one(ring);
    let mut cols: Vec<ModPoly> =
        vec![ModPoly::from_components(ring, &[(0, one.clone()), (1, one)])];
    for g in i.gens() {
        cols.push(ModPoly::from_poly(ring, 0, g));
    }
    for h in j.gens() {
        cols.push(ModPoly::from_poly(ring, 1, h));
    }
    let gens = syzygy_coordinate_zero(ring, 2, &cols, &mut Budget::default())?;
    Ok(Ideal::new(ring, gens))
}

/// Ideal quotient `I : J`.
pub fn quotient(i: &Ideal, j: &Ideal) -> Result<Ideal, GbError> {
    let ring = i.ring();
    assert_eq!(ring, j.ring(), "ideals in different rings");
    if j.gens().is_empty() {
        // I : (0) is the whole ring.
        return Ok(Ideal::new(ring, vec![Polynomial::one(ring)]));
    }
    let s = j.gens().len() as u32;
    let stacked: Vec<(u32, Polynomial)> = j
        .gens()
        .iter()
        .enumerate()
        .map(|(row, h)| (row as u32, h.clone()))
        .collect();
    let mut cols: Vec<ModPoly> = vec![ModPoly::from_components(ring, &stacked)];
    for row in 0..s {
        for g in i.gens() {
            cols.push(ModPoly::from_poly(ring, row, g));
        }
    }
    let gens = syzygy_coordinate_zero(ring, s, &cols, &mut Budget::default())?;
    Ok(Ideal::new(ring, gens))
}

/// Saturation `I : J^∞`: quotients by `J` until the reduced Gröbner basis
/// stops changing.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Ideal, GbError> {
    let mut cur = i.clone();
    loop {
        let next = quotient(&cur, j)?;
        if next.equals(&cur)? {
            return Ok(next);
        }
        cur = next;
    }
}
