//! Cross-checks tying the pipeline to the closed-form invariants and to
//! duality: symmetric-cube section counts against the published moduli
//! dimensions, and the canonical module computed from the ideal against
//! the one computed from the quotient ring.

use fpcore::Ring;
use graded::{ext_module, GradedModule};
use groebner::{syzygies, Budget, ModPoly};
use invariants::moduli_dimensions;
use steiner::{gen_steiner_matrix, sheaf_sections, sym_power_module};
use triplane::{construct_type_vii, PipelineConfig};

#[test]
fn symmetric_cube_sections_match_the_moduli_dimensions() {
    let ring = Ring::standard(32003, 3).unwrap();
    let mut measured = Vec::new();
    for b in [5u32, 6] {
        let p = gen_steiner_matrix(&ring, b, 1, 3).unwrap();
        let s3 = sym_power_module(&p, 3).unwrap();
        measured.push(sheaf_sections(&s3, 6 - b as i64).unwrap());
    }
    assert_eq!(measured, [24, 20]);

    // exp-dim N_b = (b−1)(b−5) + h⁰(S³F(6−b)) − 1, and M_b loses the
    // eight dimensions of PGL₃.
    assert_eq!(moduli_dimensions(5, 24, None).unwrap(), (23, 15));
    assert_eq!(moduli_dimensions(6, 20, None).unwrap(), (24, 16));
    assert_eq!(moduli_dimensions(7, 12, None).unwrap(), (23, 15));
    for alpha1 in 1..=7 {
        // At b = 8 the stratum with alpha1 unstable lines has dimension
        // 21 − alpha1 while h⁰(S³F(−2)) = alpha1, so every stratum sits
        // over a 20-dimensional family: dim M = 12 across all of type VII.
        assert_eq!(moduli_dimensions(8, alpha1, Some(alpha1)).unwrap(), (20, 12));
    }
}

/// From 0 → I → R → R/I → 0 and the vanishing of Ext^i(R, ·) for i ≥ 1,
/// the canonical module of a codimension-3 quotient can be computed
/// either as Ext³(R/I, R(−6)) or as Ext²(I, R(−6)). Both routes must
/// agree on an actual adjoint-surface ideal.
#[test]
fn canonical_module_agrees_between_ideal_and_quotient() {
    let run = construct_type_vii(&PipelineConfig::new(1, 32003, 1)).unwrap();
    assert!(run.report.is_pass(), "the alpha1 = 1 reference run must pass");
    let state = run.state.expect("pass leaves full state");
    let ix2 = state.x2_ideal.expect("b = 8 builds X2");
    let vring = state.target_ring.expect("b = 8 builds the target ring");

    let gens = ix2.gens();
    let gen_degs: Vec<i64> =
        gens.iter().map(|g| g.homogeneous_degree().unwrap() as i64).collect();
    let cols: Vec<ModPoly> =
        gens.iter().map(|g| ModPoly::from_poly(&vring, 0, g)).collect();
    let mut budget = Budget::default();
    let syz = syzygies(&vring, 1, &cols, &mut budget).unwrap();
    let rel_degs: Vec<i64> = syz
        .iter()
        .map(|s| {
            (0..gens.len() as u32)
                .find_map(|i| {
                    let entry = s.component(&vring, i);
                    entry.homogeneous_degree().map(|d| d as i64 + gen_degs[i as usize])
                })
                .expect("a syzygy has a nonzero component")
        })
        .collect();
    let presentation: Vec<Vec<fpcore::Polynomial>> = (0..gens.len())
        .map(|i| syz.iter().map(|s| s.component(&vring, i as u32)).collect())
        .collect();
    let ideal_module =
        GradedModule::new(&vring, gen_degs, rel_degs, presentation).unwrap();

    let quotient_module = GradedModule::quotient(&vring, gens).unwrap();
    let from_ideal = ext_module(2, &ideal_module, -6).unwrap();
    let from_quotient = ext_module(3, &quotient_module, -6).unwrap();

    assert_eq!(
        from_ideal.euler_characteristic().unwrap(),
        from_quotient.euler_characteristic().unwrap()
    );
    for d in -3..=3 {
        assert_eq!(
            from_ideal.graded_piece_dim(d).unwrap(),
            from_quotient.graded_piece_dim(d).unwrap(),
            "canonical-module graded piece in degree {d}"
        );
    }
}
