//! Sequential vs data-parallel minor expansion on Jacobian-shaped
//! matrices: the dominant cost of singular-locus and smoothness checks.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fpcore::{random_homogeneous, Ring, Rng};
use groebner::{jacobian, minors_par, minors_seq, PolyMatrix};

/// A Jacobian of random cubics in six variables, the shape the smoothness
/// check of a surface in P⁵ produces.
fn cubic_jacobian(ring: &Ring, gens: usize) -> PolyMatrix {
    let mut rng = Rng::new(17);
    let cubics: Vec<_> = (0..gens).map(|_| random_homogeneous(ring, 3, &mut rng)).collect();
    jacobian(ring, &cubics)
}

fn bench_minor_kernels(c: &mut Criterion) {
    let ring = Ring::standard(32003, 6).unwrap();
    let mut group = c.benchmark_group("minors");
    group.sample_size(10);
    for gens in [6usize, 8] {
        let jac = cubic_jacobian(&ring, gens);
        group.bench_with_input(BenchmarkId::new("seq", gens), &jac, |bench, jac| {
            bench.iter(|| minors_seq(&ring, jac, 3));
        });
        group.bench_with_input(BenchmarkId::new("par", gens), &jac, |bench, jac| {
            bench.iter(|| minors_par(&ring, jac, 3));
        });
    }
    group.finish();
}

criterion_group!(benches, bench_minor_kernels);
criterion_main!(benches);
