//! Recurrence tables and plan synthesis.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hanoi_bench::instance;
use hanoi_core::solver::{compare_exact, frame_stewart_count, frame_stewart_plan};

fn bench_count(c: &mut Criterion) {
    let mut group = c.benchmark_group("frame_stewart_count");
    for (k, n) in [(4u8, 30u8), (8, 40)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("k{k}_n{n}")),
            &(k, n),
            |b, &(k, n)| b.iter(|| frame_stewart_count(black_box(n), black_box(k)).unwrap()),
        );
    }
    group.finish();
}

fn bench_plan(c: &mut Criterion) {
    let mut group = c.benchmark_group("frame_stewart_plan");
    for (k, n) in [(3u8, 12u8), (4, 12), (6, 15)] {
        let params = instance(k, n);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("k{k}_n{n}")),
            &params,
            |b, &p| b.iter(|| frame_stewart_plan(black_box(p), 0, 1).unwrap()),
        );
    }
    group.finish();
}

fn bench_compare(c: &mut Criterion) {
    let mut group = c.benchmark_group("compare_exact");
    group.sample_size(10);
    for (k, n) in [(4u8, 8u8), (5, 6)] {
        let params = instance(k, n);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("k{k}_n{n}")),
            &params,
            |b, &p| b.iter(|| compare_exact(black_box(p), 0, 1).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_count, bench_plan, bench_compare);
criterion_main!(benches);
