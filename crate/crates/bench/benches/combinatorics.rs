use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use glmn_bench::{principal_family, weight_family};
use glmn_core::dimension::{cauchy_symmetric_decomposition, projective_dim_bounds, weyl_dim_g0};
use glmn_core::ehrhart::count_lattice_points;
use glmn_core::invariants::{variety_dims, ModuleKind};
use glmn_core::suzhang::build_s;
use glmn_core::weight::{atypicality, length};
use glmn_core::SuperParams;

fn classify(c: &mut Criterion) {
    let weights = weight_family(4, 3, 6, 200);
    c.bench_function("atypicality gl(4|3) x200", |b| {
        b.iter(|| weights.iter().map(|w| atypicality(black_box(w)).unwrap().atypicality).sum::<usize>())
    });
    let principal = principal_family(4, 8, 200);
    c.bench_function("length gl(4|4) principal x200", |b| {
        b.iter(|| principal.iter().map(|w| length(black_box(w)).unwrap()).sum::<i64>())
    });
    c.bench_function("variety_dims gl(4|3) x200", |b| {
        b.iter(|| {
            weights
                .iter()
                .map(|w| variety_dims(ModuleKind::Simple, black_box(w)).unwrap().complexity)
                .sum::<usize>()
        })
    });
}

fn dimensions(c: &mut Criterion) {
    let weights = weight_family(4, 4, 5, 50);
    c.bench_function("weyl_dim_g0 gl(4|4) x50", |b| {
        b.iter(|| weights.iter().map(|w| weyl_dim_g0(black_box(w)).unwrap().bits()).sum::<u64>())
    });
    c.bench_function("projective_dim_bounds gl(4|4) x50", |b| {
        b.iter(|| weights.iter().map(|w| projective_dim_bounds(black_box(w)).unwrap().upper.bits()).sum::<u64>())
    });
    c.bench_function("cauchy k=3 d=8", |b| b.iter(|| cauchy_symmetric_decomposition(3, black_box(8)).unwrap().len()));
}

fn lattice(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_lattice_points k=2");
    for d in [20u64, 60, 120] {
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| b.iter(|| count_lattice_points(2, d).unwrap()));
    }
    g.finish();
    let params = SuperParams::new(3, 2).unwrap();
    c.bench_function("build_s gl(3|2) k=2 d=20", |b| b.iter(|| build_s(params, 2, black_box(20)).unwrap().pairs.len()));
}

criterion_group!(benches, classify, dimensions, lattice);
criterion_main!(benches);
