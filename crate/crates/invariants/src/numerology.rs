//! The closed-form integer invariants of a general triple plane: the
//! b-indexed table, ramification intersection numbers, cusp-count
//! feasibility, Chern classes of the Tschirnhausen-derived bundle, and
//! moduli dimension counts.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("no general triple plane has b = {0}: K² = (b²−15b+42)/2 leaves the window −7..=9")]
    BOutsideTable(i64),
    #[error("cusp count 3h = {cusps} violates the hard bounds 2b²/3 ≤ 3h < 2b² at b = {b}")]
    CuspCountInfeasible { b: i64, cusps: i64 },
    #[error("Chern data needs b ≥ 5, got {0}")]
    BTooSmallForBundle(i64),
    #[error("moduli dimensions are tabulated for 5 ≤ b ≤ 8, got {0}")]
    ModuliOutOfRange(i64),
    #[error("the b = 8 moduli strata are indexed by alpha1, which was not given")]
    MissingAlpha1,
}

/// One row of the numerical classification: a general triple plane with
/// branch curve of degree 2b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriplePlaneInvariants {
    /// Half the branch degree.
    pub b: i64,
    /// c₂ of the Tschirnhausen bundle; the branch curve has 3h cusps.
    pub h: i64,
    /// Self-intersection of the canonical class of the covering surface.
    pub k2: i64,
    /// Sectional genus g(H).
    pub sectional_genus: i64,
}

impl TriplePlaneInvariants {
    pub fn branch_degree(&self) -> i64 {
        2 * self.b
    }

    pub fn cusp_count(&self) -> i64 {
        3 * self.h
    }
}

/// The unique invariant row for the given b. Surfaces with χ(O) = 1 force
/// −7 ≤ K² ≤ 9, which pins b to 2..=13.
pub fn invariant_table(b: i64) -> Result<TriplePlaneInvariants, InvariantError> {
    if !(2..=13).contains(&b) {
        return Err(InvariantError::BOutsideTable(b));
    }
    Ok(TriplePlaneInvariants {
        b,
        h: (b * b - 3 * b + 4) / 2,
        k2: (b * b - 15 * b + 42) / 2,
        sectional_genus: b - 2,
    })
}

/// Intersection numbers of the ramification divisor R, its conjugate
/// R₀ = f*B − 2R, the canonical class, and the hyperplane class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RamificationNumbers {
    /// R²
    pub r2: i64,
    /// R·R₀
    pub rr0: i64,
    /// R₀²
    pub r02: i64,
    /// K·R
    pub kr: i64,
    /// H·R
    pub hr: i64,
    /// K·H
    pub kh: i64,
}

pub fn ramification_numbers(b: i64, h: i64) -> RamificationNumbers {
    RamificationNumbers {
        r2: 2 * b * b - 3 * h,
        rr0: 6 * h,
        r02: 4 * b * b - 12 * h,
        kr: 2 * b * b - 6 * b - 3 * h,
        hr: 2 * b,
        kh: 2 * b - 9,
    }
}

/// How a cusp count compares to the classical bound 3h ≤ b².
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BronowskiVerdict {
    /// The classical inequality holds.
    ClassicalOk,
    /// The classical inequality fails while the hard bounds still hold —
    /// the configuration refutes the classical claim.
    Counterexample,
}

/// Checks the hard cusp bounds 2b²/3 ≤ 3h < 2b² and classifies the pair
/// against the classical inequality 3h ≤ b².
pub fn bronowski_check(b: i64, h: i64) -> Result<BronowskiVerdict, InvariantError> {
    let cusps = 3 * h;
    if 3 * cusps < 2 * b * b || cusps >= 2 * b * b {
        return Err(InvariantError::CuspCountInfeasible { b, cusps });
    }
    Ok(if cusps <= b * b {
        BronowskiVerdict::ClassicalOk
    } else {
        BronowskiVerdict::Counterexample
    })
}

pub(crate) fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Chern classes (c₁, c₂) of the rank-2 bundle presented by the
/// (b−2) × (b−4) matrix of linear forms, and the degree of the associated
/// scroll in P⁵.
pub fn chern_and_scroll(b: i64) -> Result<(i64, i64, i64), InvariantError> {
    if b < 5 {
        return Err(InvariantError::BTooSmallForBundle(b));
    }
    Ok((b - 4, choose2(b - 3), choose2(b - 4)))
}

/// Expected dimensions (dim N, dim M) of the space of building sections
/// and of the moduli family: dim N = (stratum dimension) + h⁰(S³F(6−b)) − 1,
/// and dim M = dim N − 8. The stratum dimension is (b−1)(b−5) for
/// 5 ≤ b ≤ 7 and 21 − α₁ for b = 8, where the strata are indexed by the
/// number of unstable lines.
pub fn moduli_dimensions(
    b: i64,
    h0_s3: i64,
    alpha1: Option<i64>,
) -> Result<(i64, i64), InvariantError> {
    if !(5..=8).contains(&b) {
        return Err(InvariantError::ModuliOutOfRange(b));
    }
    let stratum = if b == 8 {
        21 - alpha1.ok_or(InvariantError::MissingAlpha1)?
    } else {
        (b - 1) * (b - 5)
    };
    let dim_n = stratum + h0_s3 - 1;
    Ok((dim_n, dim_n - 8))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows_match_the_published_values() {
        let first = invariant_table(2).unwrap();
        assert_eq!((first.h, first.k2, first.sectional_genus), (1, 8, 0));
        let seven = invariant_table(8).unwrap();
        assert_eq!((seven.h, seven.k2, seven.sectional_genus), (22, -7, 6));
        assert_eq!(seven.branch_degree(), 16);
        assert_eq!(seven.cusp_count(), 66);
        let last = invariant_table(13).unwrap();
        assert_eq!((last.h, last.k2, last.sectional_genus), (67, 8, 11));
        assert!(matches!(invariant_table(1), Err(InvariantError::BOutsideTable(1))));
        assert!(matches!(invariant_table(14), Err(InvariantError::BOutsideTable(14))));
    }

    #[test]
    fn table_identities_hold_exactly() {
        for b in 2..=13 {
            let row = invariant_table(b).unwrap();
            assert_eq!(2 * row.h, b * b - 3 * b + 4);
            assert_eq!(b * b - 15 * b + 42 - 2 * row.k2, 0);
            assert_eq!(row.sectional_genus, b - 2);
            assert!((-7..=9).contains(&row.k2), "b = {b}");
        }
    }

    #[test]
    fn ramification_numbers_match_known_cases() {
        // Smallest case: R² = 5.
        assert_eq!(ramification_numbers(2, 1).r2, 5);
        // b = 8 row: R₀² = 256 − 264 < 0.
        assert_eq!(ramification_numbers(8, 22).r02, -8);
        // b = 6 row: 33 cusps.
        assert_eq!(invariant_table(6).unwrap().cusp_count(), 33);
        assert_eq!(ramification_numbers(6, 11).kh, 3);
        assert_eq!(ramification_numbers(8, 22).kh, 7);
        assert_eq!(ramification_numbers(8, 22).hr, 16);
    }

    #[test]
    fn cusp_verdicts_flip_at_b_eight() {
        for b in 2..=13 {
            let row = invariant_table(b).unwrap();
            let verdict = bronowski_check(b, row.h).unwrap();
            if b <= 7 {
                assert_eq!(verdict, BronowskiVerdict::ClassicalOk, "b = {b}");
            } else {
                assert_eq!(verdict, BronowskiVerdict::Counterexample, "b = {b}");
            }
        }
        assert!(matches!(
            bronowski_check(8, 1),
            Err(InvariantError::CuspCountInfeasible { b: 8, cusps: 3 })
        ));
        assert!(matches!(
            bronowski_check(2, 100),
            Err(InvariantError::CuspCountInfeasible { .. })
        ));
    }

    #[test]
    fn chern_numbers_and_scroll_degrees() {
        assert_eq!(chern_and_scroll(8).unwrap(), (4, 10, 6));
        assert_eq!(chern_and_scroll(6).unwrap(), (2, 3, 1));
        assert_eq!(chern_and_scroll(5).unwrap(), (1, 1, 0));
        assert!(matches!(
            chern_and_scroll(4),
            Err(InvariantError::BTooSmallForBundle(4))
        ));
    }

    #[test]
    fn moduli_counts_match_the_tabulated_dimensions() {
        assert_eq!(moduli_dimensions(5, 24, None).unwrap(), (23, 15));
        assert_eq!(moduli_dimensions(6, 20, None).unwrap(), (24, 16));
        assert_eq!(moduli_dimensions(7, 12, None).unwrap(), (23, 15));
        for alpha1 in 1..=7 {
            assert_eq!(
                moduli_dimensions(8, alpha1, Some(alpha1)).unwrap(),
                (20, 12),
                "alpha1 = {alpha1}"
            );
        }
        assert!(matches!(
            moduli_dimensions(8, 3, None),
            Err(InvariantError::MissingAlpha1)
        ));
        assert!(matches!(
            moduli_dimensions(9, 3, None),
            Err(InvariantError::ModuliOutOfRange(9))
        ));
    }
}
