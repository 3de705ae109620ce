//! Case enumeration for the triple planes with b = 8: run the adjunction
//! iteration with index-bound pruning, attach the classical case labels,
//! and record the curated geometric exclusions.

use crate::adjunction::{adjunction_step, AdjunctionState};
use crate::numerology::choose2;

/// The (α₁, α₂) pairs realized by the rank-2 bundle construction.
const CONSTRUCTED: [(i64, i64); 7] =
    [(1, 15), (2, 10), (3, 6), (4, 3), (5, 1), (6, 0), (7, 0)];

/// One surviving sub-case of the b = 8 classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeVIICase {
    /// Case tag such as "VII.4b": the first blow-down count, with a letter
    /// when several second counts survive for it.
    pub label: String,
    pub alpha1: i64,
    pub alpha2: i64,
    /// Whether an explicit surface with these blow-down counts is known.
    pub exists_constructed: bool,
}

impl TypeVIICase {
    /// K² of the minimal model X₂ reached after both blow-down rounds:
    /// K²_{X₀} = −7 plus the contracted-curve counts.
    pub fn k2_x2(&self) -> i64 {
        -7 + self.alpha1 + self.alpha2
    }
}

/// A pair that survives the arithmetic pruning but is ruled out by a
/// geometric fact about the adjoint image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcludedCase {
    pub alpha1: i64,
    pub alpha2: i64,
    pub reason: &'static str,
}

/// Output of the enumerator: labeled survivors and geometric exclusions.
/// Pairs killed purely by the index bound or by a negative adjoint square
/// are pruned silently — they never name a surface to exclude.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeVIIEnumeration {
    pub cases: Vec<TypeVIICase>,
    pub excluded: Vec<ExcludedCase>,
}

impl TypeVIIEnumeration {
    pub fn case(&self, label: &str) -> Option<&TypeVIICase> {
        self.cases.iter().find(|c| c.label == label)
    }

    /// The constructed case for a given first blow-down count, if any.
    pub fn constructed_case(&self, alpha1: i64) -> Option<&TypeVIICase> {
        self.cases
            .iter()
            .find(|c| c.alpha1 == alpha1 && c.exists_constructed)
    }
}

/// Geometric facts that kill arithmetically legal pairs. Each reason is a
/// statement about the surface the adjoint linear system would have to
/// produce.
fn geometric_exclusion(alpha1: i64, alpha2: i64) -> Option<&'static str> {
    match (alpha1, alpha2) {
        (0, _) => Some(
            "the adjoint system would embed a surface of degree 3 spanning P^5, \
             but a non-degenerate surface in P^5 has degree at least 4",
        ),
        (5, 2) => Some(
            "one more adjunction step would force a smooth quartic surface in P^3, \
             which has geometric genus 1, while these covering surfaces have \
             geometric genus 0",
        ),
        (6, 1) => Some(
            "one more adjunction step would force a smooth surface of degree 7 \
             in P^4 with K^2 = 0, but the only smooth non-degenerate surface of \
             that degree in P^4 has K^2 = -2",
        ),
        _ => None,
    }
}

/// Enumerate the b = 8 sub-cases by running the adjunction iteration.
///
/// Starting from the hyperplane polarization (H² = 3, K·H = 7, K² = −7),
/// every first blow-down count α₁ with an index-legal successor is tried;
/// α₁ = 7 reaches a minimal surface with numerically trivial canonical
/// class and stops there. For the others, a second count α₂ survives the
/// arithmetic pruning when the successor state is index-legal and its
/// adjoint square (K+D)² is non-negative — the adjoint system must keep
/// mapping to a surface. Survivors then pass through the curated
/// geometric exclusions and the rest get their classical labels.
pub fn type_vii_enumerate() -> TypeVIIEnumeration {
    let start = AdjunctionState::initial_hyperplane(8).expect("b = 8 is in the table");
    let mut cases = Vec::new();
    let mut excluded = Vec::new();

    let mut alpha1 = 0;
    while let Ok(s1) = adjunction_step(&start, alpha1) {
        let survivors = if s1.kd == 0 && s1.k2 == 0 {
            // K_{X₁} is numerically trivial, so X₁ is already minimal and
            // the iteration terminates with no second blow-down.
            vec![0]
        } else {
            let mut kept = Vec::new();
            let mut alpha2 = 0;
            while let Ok(s2) = adjunction_step(&s1, alpha2) {
                if s2.adjoint_square() >= 0 {
                    match geometric_exclusion(alpha1, alpha2) {
                        Some(reason) => excluded.push(ExcludedCase { alpha1, alpha2, reason }),
                        None => kept.push(alpha2),
                    }
                }
                alpha2 += 1;
            }
            kept
        };

        let lettered = survivors.len() > 1;
        for (i, &alpha2) in survivors.iter().enumerate() {
            let label = if lettered {
                format!("VII.{}{}", alpha1, (b'a' + i as u8) as char)
            } else {
                format!("VII.{alpha1}")
            };
            cases.push(TypeVIICase {
                label,
                alpha1,
                alpha2,
                exists_constructed: CONSTRUCTED.contains(&(alpha1, alpha2)),
            });
        }
        alpha1 += 1;
    }

    TypeVIIEnumeration { cases, excluded }
}

/// Recover the second blow-down count from a measured K² of the minimal
/// model: α₂ = K²_{X₂} − K²_{X₁} = K²_{X₂} + 7 − α₁. Used to interpret
/// construction output. Expects 1 ≤ α₁ ≤ 7.
pub fn alpha2_from_k2_x2(alpha1: i64, k2_x2: i64) -> i64 {
    debug_assert!((1..=7).contains(&alpha1));
    k2_x2 + 7 - alpha1
}

/// The conjectural closed form for the second count of the constructed
/// cases: α₂ = C(7 − α₁, 2).
pub fn conjectured_alpha2(alpha1: i64) -> i64 {
    choose2(7 - alpha1)
}
