use std::hint::black_box;

use carc::{build_scheme, gen_random, verify_scheme};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_scheme");
    group.sample_size(10);
    for n in [250, 500, 1000, 2000] {
        let model = gen_random(n, 1).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &model, |b, m| {
            b.iter(|| build_scheme(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_scheme");
    group.sample_size(10);
    for n in [64, 256] {
        let model = gen_random(n, 1).unwrap();
        let graph = model.intersection_graph();
        let scheme = build_scheme(&model).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &scheme, |b, s| {
            b.iter(|| verify_scheme(&graph, black_box(s)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, build, verify);
criterion_main!(benches);
