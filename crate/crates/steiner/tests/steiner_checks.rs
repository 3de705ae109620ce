//! End-to-end checks of the presentation generators against the known
//! geometry: logarithmic bundles of line arrangements, exhaustive
//! unstable-line searches over a small field, the Schwarzenberger conic,
//! section-count profiles, symmetric powers, and the schemes cut out by
//! flipped tensors and generic sections.

use std::collections::HashSet;

use fpcore::{Ring, Rng};
use steiner::{
    fliptensor, gen_logarithmic_matrix, gen_schwarzenberger_matrix, gen_steiner_matrix,
    is_locally_free, section_counts, section_scheme_ideal, sheaf_sections,
    splitting_type, sym_power_module, unstable_lines, unstable_locus_is_consistent,
    veronese_rank, LineInDualPlane, LineSearch, SplittingType,
};

use groebner::{minors, Ideal};

fn ring3(prime: u32) -> Ring {
    Ring::standard(prime, 3).unwrap()
}

fn random_lines(ring: &Ring, n: usize, seed: u64) -> Vec<LineInDualPlane> {
    let mut rng = Rng::new(seed);
    let p = ring.modulus();
    (0..n)
        .map(|_| LineInDualPlane::new(ring.field(), [1, rng.uniform(p), rng.uniform(p)]))
        .collect()
}

#[test]
fn logarithmic_b8_has_the_prescribed_shape_and_lines() {
    let r = ring3(32003);
    let p = gen_logarithmic_matrix(&r, 8, 41).unwrap();
    assert_eq!(p.matrix().len(), 6);
    assert!(p.matrix().iter().all(|row| row.len() == 4));
    assert!(is_locally_free(&p).unwrap());
    let candidates = p.candidates().to_vec();
    assert_eq!(candidates.len(), 7);
    assert_eq!(candidates.iter().collect::<HashSet<_>>().len(), 7);
    for line in &candidates {
        assert_eq!(splitting_type(&p, line).unwrap(), SplittingType(0, 4));
    }
    assert!(unstable_locus_is_consistent(&p, &candidates));
}

#[test]
fn logarithmic_b5_is_unstable_on_every_line() {
    let r = ring3(32003);
    let p = gen_logarithmic_matrix(&r, 5, 12).unwrap();
    assert_eq!(p.matrix().len(), 3);
    assert!(p.matrix().iter().all(|row| row.len() == 1));
    for line in p.candidates() {
        assert_eq!(splitting_type(&p, line).unwrap(), SplittingType(0, 1));
    }
    for line in random_lines(&r, 10, 99) {
        assert_eq!(splitting_type(&p, &line).unwrap(), SplittingType(0, 1));
    }
}

#[test]
fn exhaustive_search_recovers_the_arrangement() {
    let r = ring3(101);
    let p = gen_logarithmic_matrix(&r, 8, 5).unwrap();
    let found = unstable_lines(&p, LineSearch::Exhaustive).unwrap();
    let found_set: HashSet<_> = found.iter().copied().collect();
    let expected: HashSet<_> = p.candidates().iter().copied().collect();
    assert_eq!(found_set, expected);
    assert_eq!(found.len(), 7);
    assert!(unstable_locus_is_consistent(&p, &found));
}

#[test]
fn schwarzenberger_unstable_locus_is_a_conic() {
    let r = ring3(101);
    let p = gen_schwarzenberger_matrix(&r, 7).unwrap();
    let found = unstable_lines(&p, LineSearch::Exhaustive).unwrap();
    // The unstable locus is a smooth conic of the dual plane: one rational
    // point per element of P¹(F_101).
    assert_eq!(found.len(), 102);
    assert_eq!(veronese_rank(r.field(), &found), 5);
    assert!(found.len() > 6);
    assert!(unstable_locus_is_consistent(&p, &found));
}

#[test]
fn generic_bundles_are_balanced_on_random_lines() {
    let r = ring3(32003);
    let p = gen_steiner_matrix(&r, 8, 0, 2).unwrap();
    for line in random_lines(&r, 10, 7) {
        assert_eq!(splitting_type(&p, &line).unwrap(), SplittingType(2, 2));
    }
}

#[test]
fn prescribed_layouts_split_as_recorded() {
    let r = ring3(32003);
    for alpha in [1u32, 2, 4, 6] {
        let p = gen_steiner_matrix(&r, 8, alpha, 31 + alpha as u64).unwrap();
        let unstable = unstable_lines(&p, LineSearch::Candidates).unwrap();
        assert_eq!(unstable.len(), alpha as usize);
        for line in random_lines(&r, 3, 1000 + alpha as u64) {
            let t = splitting_type(&p, &line).unwrap();
            assert_eq!(t.0 + t.1, 4);
        }
    }
}

#[test]
fn section_counts_match_the_steiner_profile() {
    for (b, seed) in [(5u32, 1u64), (7, 2), (8, 3)] {
        let r = ring3(32003);
        let p = gen_steiner_matrix(&r, b, 0, seed).unwrap();
        let counts = section_counts(&p).unwrap();
        assert_eq!(counts.h0_twist_minus_one, 0, "b = {b}");
        assert_eq!(counts.h0, b as i64 - 2, "b = {b}");
        assert_eq!(counts.h1_twist_minus_two, b as i64 - 4, "b = {b}");
        assert!(counts.matches_steiner(b));
    }
}

#[test]
fn flipped_tensor_cuts_a_degree_six_threefold() {
    let r = ring3(32003);
    let p = gen_steiner_matrix(&r, 8, 1, 13).unwrap();
    let s = Ring::standard(32003, 6).unwrap();
    let n = fliptensor(p.matrix(), &r, &s).unwrap();
    assert_eq!(n.len(), 3);
    assert!(n.iter().all(|row| row.len() == 4));
    let ideal = Ideal::new(&s, minors(&s, &n, 3));
    let data = ideal.hilbert_data().unwrap();
    assert_eq!(data.dim, 4);
    assert_eq!(data.degree, 6);
}

#[test]
fn generic_section_vanishes_on_c2_points() {
    let r = ring3(32003);
    let p = gen_steiner_matrix(&r, 8, 0, 19).unwrap();
    let mut rng = Rng::new(77);
    let ideal = section_scheme_ideal(&p, &mut rng).unwrap();
    let data = ideal.hilbert_data().unwrap();
    assert_eq!(data.dim, 1);
    assert_eq!(data.degree, p.c2());
}

#[test]
fn symmetric_cube_sections_at_b7() {
    let r = ring3(32003);
    let p = gen_steiner_matrix(&r, 7, 0, 29).unwrap();
    let s3 = sym_power_module(&p, 3).unwrap();
    assert_eq!(sheaf_sections(&s3, -1).unwrap(), 12);
}
