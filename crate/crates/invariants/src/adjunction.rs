//! Adjunction bookkeeping: the intersection matrix of a polarized surface
//! and the update rule of the adjunction map, with Hodge-index pruning.

use thiserror::Error;

use crate::numerology::{invariant_table, InvariantError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AdjunctionError {
    #[error("alpha counts blown-down points and cannot be {0}")]
    NegativeAlpha(i64),
    #[error(
        "state (D², K·D, K²) = ({d2}, {kd}, {k2}) violates the index bound D²·K² ≤ (K·D)²"
    )]
    HodgeInfeasible { d2: i64, kd: i64, k2: i64 },
}

/// The intersection matrix of a polarized surface (Xᵢ, Dᵢ) along the
/// adjunction sequence: D², K·D on the off-diagonal, K².
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjunctionState {
    pub d2: i64,
    pub kd: i64,
    pub k2: i64,
    /// How many adjunction maps have been applied.
    pub step: u32,
}

impl AdjunctionState {
    pub fn new(d2: i64, kd: i64, k2: i64) -> Self {
        AdjunctionState { d2, kd, k2, step: 0 }
    }

    /// Start of the adjunction sequence for the covering surface of a
    /// general triple plane, polarized by the hyperplane class H itself:
    /// H² = 3, K·H = 2b − 9.
    pub fn initial_hyperplane(b: i64) -> Result<Self, InvariantError> {
        let row = invariant_table(b)?;
        Ok(AdjunctionState::new(3, 2 * b - 9, row.k2))
    }

    /// Start polarized by K + 2H, the very ample divisor used for the
    /// small-b cases: D² = K² + 4K·H + 12, K·D = K² + 2K·H.
    pub fn initial_k_plus_2h(b: i64) -> Result<Self, InvariantError> {
        let row = invariant_table(b)?;
        let kh = 2 * b - 9;
        Ok(AdjunctionState::new(row.k2 + 4 * kh + 12, row.k2 + 2 * kh, row.k2))
    }

    /// Index-theorem feasibility for a surface carrying an effective
    /// ample-ish D: the matrix may not be positive definite, so
    /// D²·K² ≤ (K·D)².
    pub fn hodge_feasible(&self) -> bool {
        self.d2 * self.k2 - self.kd * self.kd <= 0
    }

    /// Equality in the index bound: K is numerically dependent on D.
    pub fn k_numerically_dependent(&self) -> bool {
        self.d2 * self.k2 - self.kd * self.kd == 0
    }

    /// (K + D)², the D² of the next state; adjoint linear systems of the
    /// surfaces in this classification cannot have negative self-
    /// intersection.
    pub fn adjoint_square(&self) -> i64 {
        self.d2 + 2 * self.kd + self.k2
    }
}

/// One adjunction map: (D², K·D) ↦ ((K+D)², K·(K+D)) and K² grows by the
/// number α of exceptional curves contracted. Rejects states whose
/// intersection matrix violates the index bound, which is the pruning
/// signal used by the case enumerator.
pub fn adjunction_step(
    s: &AdjunctionState,
    alpha: i64,
) -> Result<AdjunctionState, AdjunctionError> {
    if alpha < 0 {
        return Err(AdjunctionError::NegativeAlpha(alpha));
    }
    let next = AdjunctionState {
        d2: s.d2 + 2 * s.kd + s.k2,
        kd: s.kd + s.k2,
        k2: s.k2 + alpha,
        step: s.step + 1,
    };
    if !next.hodge_feasible() {
        return Err(AdjunctionError::HodgeInfeasible {
            d2: next.d2,
            kd: next.kd,
            k2: next.k2,
        });
    }
    Ok(next)
}
