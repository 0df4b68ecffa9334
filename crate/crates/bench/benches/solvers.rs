use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use leafspan_bench::transform_fixture;
use leafspan_core::construct::{gen_gk, gen_platonic, gen_torus_grid, PlatonicSolid};
use leafspan_core::corpus;
use leafspan_core::exchange::transform_sequence;
use leafspan_core::spectrum::{
    enumerate_spanning_trees, find_hist, kirchhoff_tree_count, min_connected_dominating_set,
};

fn bench_transform(c: &mut Criterion) {
    let mut group = c.benchmark_group("transform_sequence");
    for &n in &[16usize, 32, 64] {
        let (g, a, b) = transform_fixture(n, 3 * n, 0xFEED + n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| transform_sequence(black_box(&g), black_box(&a), black_box(&b)).unwrap())
        });
    }
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let petersen = corpus::petersen();
    c.bench_function("enumerate_petersen", |b| {
        b.iter(|| {
            let mut leaves_seen = 0usize;
            enumerate_spanning_trees(black_box(&petersen), 1 << 20, |t| {
                leaves_seen += t.leaf_count();
            })
            .unwrap();
            leaves_seen
        })
    });
    c.bench_function("kirchhoff_petersen", |b| {
        b.iter(|| kirchhoff_tree_count(black_box(&petersen)))
    });
}

fn bench_cds(c: &mut Criterion) {
    let torus = gen_torus_grid(3, 3).unwrap().graph;
    c.bench_function("min_cds_torus_3x3", |b| {
        b.iter(|| min_connected_dominating_set(black_box(&torus), 1 << 24).unwrap())
    });
}

fn bench_hist(c: &mut Criterion) {
    let ico = gen_platonic(PlatonicSolid::Icosahedron).graph;
    c.bench_function("hist_icosahedron", |b| {
        b.iter(|| find_hist(black_box(&ico), 1 << 24).unwrap())
    });
}

fn bench_generators(c: &mut Criterion) {
    c.bench_function("gen_gk_60", |b| b.iter(|| gen_gk(black_box(60)).unwrap()));
}

criterion_group!(
    benches,
    bench_transform,
    bench_enumeration,
    bench_cds,
    bench_hist,
    bench_generators
);
criterion_main!(benches);
