//! The adjunction iteration replayed against the intersection matrices
//! printed in the classification arguments, and the pruning ranges the
//! enumerator must reproduce.

use invariants::{
    adjunction_step, type_vii_enumerate, AdjunctionError, AdjunctionState,
};

fn step(s: AdjunctionState, alpha: i64) -> AdjunctionState {
    adjunction_step(&s, alpha).expect("chain states stay index-legal")
}

fn matrix(s: &AdjunctionState) -> (i64, i64, i64) {
    (s.d2, s.kd, s.k2)
}

#[test]
fn type_vii_chains_reproduce_the_printed_matrices() {
    let start = AdjunctionState::initial_hyperplane(8).unwrap();
    assert_eq!(matrix(&start), (3, 7, -7));

    // First blow-down round: the same matrix shape for every alpha1.
    for alpha1 in 0..=7 {
        let s1 = step(start, alpha1);
        assert_eq!(matrix(&s1), (10, 0, -7 + alpha1));
    }

    // Second round, case by case.
    for (alpha1, alpha2) in [(1, 14), (1, 15), (2, 10), (3, 6), (4, 2), (4, 3), (4, 4), (5, 0), (5, 1), (6, 0)] {
        let s2 = step(step(start, alpha1), alpha2);
        assert_eq!(
            matrix(&s2),
            (3 + alpha1, -7 + alpha1, -7 + alpha1 + alpha2),
            "alpha = ({alpha1}, {alpha2})"
        );
    }

    // Third round: the terminal states the proofs identify.
    // VII.4b ends on (P², O(1)) after contracting 9 more curves.
    let s2 = step(step(start, 4), 3);
    assert_eq!(matrix(&s2), (7, -3, 0));
    assert_eq!(matrix(&step(s2, 9)), (1, -3, 9));

    // VII.5a ends on (P¹×P¹, O(1,1)) after contracting 10 more.
    let s2 = step(step(start, 5), 0);
    assert_eq!(matrix(&s2), (8, -2, -2));
    assert_eq!(matrix(&step(s2, 10)), (2, -4, 8));

    // VII.5b ends on a cubic surface after contracting 4 more.
    let s2 = step(step(start, 5), 1);
    assert_eq!(matrix(&s2), (8, -2, -1));
    assert_eq!(matrix(&step(s2, 4)), (3, -3, 3));

    // The excluded (5, 2) branch would continue as (4, -2, ·): a degree-4
    // image in P³, killed on geometric-genus grounds, not arithmetic ones.
    let s2 = step(step(start, 5), 2);
    assert_eq!(matrix(&s2), (8, -2, 0));
    assert_eq!(matrix(&step(s2, 0)), (4, -2, 0));

    // VII.6 ends on a Bordiga surface (degree 6 in P⁴, K² = −1) with no
    // further contractions.
    let s2 = step(step(start, 6), 0);
    assert_eq!(matrix(&s2), (9, -1, -1));
    assert_eq!(matrix(&step(s2, 0)), (6, -2, -1));

    // The excluded (6, 1) branch would continue as a degree-7 image in P⁴.
    let s2 = step(step(start, 6), 1);
    assert_eq!(matrix(&s2), (9, -1, 0));
    assert_eq!(matrix(&step(s2, 0)), (7, -1, 0));

    // alpha1 = 7 reaches K numerically trivial: minimal, nothing to step.
    let s1 = step(start, 7);
    assert_eq!(matrix(&s1), (10, 0, 0));
    assert!(s1.k_numerically_dependent());
}

#[test]
fn type_iv_chain_terminates_on_a_scroll_or_the_plane() {
    let start = AdjunctionState::initial_k_plus_2h(5).unwrap();
    assert_eq!(matrix(&start), (12, -2, -4));
    // One step, any alpha1: (4, -6, -4 + alpha1).
    assert_eq!(matrix(&step(start, 12)), (4, -6, 8)); // rational scroll
    assert_eq!(matrix(&step(start, 13)), (4, -6, 9)); // (P², O(2))
    // The index bound caps alpha1 at 13.
    assert!(matches!(
        adjunction_step(&start, 14),
        Err(AdjunctionError::HodgeInfeasible { d2: 4, kd: -6, k2: 10 })
    ));
    // (P², O(2)) sits exactly on the index-equality locus.
    assert!(step(start, 13).k_numerically_dependent());
}

#[test]
fn type_v_chain_terminates_on_a_cubic_surface() {
    let start = AdjunctionState::initial_k_plus_2h(6).unwrap();
    assert_eq!(matrix(&start), (18, 0, -6));
    let s1 = step(start, 9);
    assert_eq!(matrix(&s1), (12, -6, 3));
    // Second step with no contractions lands on the cubic surface.
    assert_eq!(matrix(&step(s1, 0)), (3, -3, 3));
    // alpha1 = 8 would land on (2, -4, 2): a degree-2 image in P³ is a
    // quadric, whose K² is 8, not 2 — the branch dies geometrically.
    assert_eq!(matrix(&step(step(start, 8), 0)), (2, -4, 2));
}

#[test]
fn pruning_reproduces_the_stated_alpha_ranges() {
    let start = AdjunctionState::initial_hyperplane(8).unwrap();

    // 0 ≤ alpha1 ≤ 7.
    for alpha1 in 0..=7 {
        assert!(adjunction_step(&start, alpha1).is_ok(), "alpha1 = {alpha1}");
    }
    assert!(adjunction_step(&start, 8).is_err());

    // Candidate alpha2 ranges per alpha1, before geometric exclusions:
    // index-legal successor with non-negative adjoint square.
    let want: [&[i64]; 7] = [
        &[18, 19, 20, 21, 22, 23],
        &[14, 15],
        &[10],
        &[6],
        &[2, 3, 4],
        &[0, 1, 2],
        &[0, 1],
    ];
    for (alpha1, want_range) in (0..=6).zip(want) {
        let s1 = adjunction_step(&start, alpha1).unwrap();
        let mut got = Vec::new();
        let mut alpha2 = 0;
        while let Ok(s2) = adjunction_step(&s1, alpha2) {
            if s2.adjoint_square() >= 0 {
                got.push(alpha2);
            }
            alpha2 += 1;
        }
        assert_eq!(got, want_range, "alpha1 = {alpha1}");
    }

    // The enumerator's labeled cases plus exclusions account for exactly
    // those candidates.
    let e = type_vii_enumerate();
    let candidate_count: usize = want.iter().map(|r| r.len()).sum();
    assert_eq!(e.cases.len() + e.excluded.len(), candidate_count + 1); // +1: the terminal alpha1 = 7
}
