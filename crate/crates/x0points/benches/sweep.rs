//! Criterion benchmarks comparing the data-parallel sweep and range
//! classification against their sequential fallbacks.
//!
//! With the default `parallel` feature the sweep fans out over levels via
//! rayon; `--no-default-features` leaves only the sequential path.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use x0points::classify::Engine;
use x0points::ingest::LmfdbClient;

fn prepared() -> Engine {
    let mut client = LmfdbClient::offline();
    Engine::prepare(&mut client).expect("bundled data loads")
}

fn bench_sweep(c: &mut Criterion) {
    let engine = prepared();
    let mut group = c.benchmark_group("pentaelliptic_sweep_467");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(engine.sweep_pentaelliptic_sequential(467)))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(engine.sweep_pentaelliptic(467)))
    });
    group.finish();
}

fn bench_classify_range(c: &mut Criterion) {
    let engine = prepared();
    let mut group = c.benchmark_group("classify_range_1_191");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let out: Vec<_> = (1..=191u64).map(|n| engine.classify(n).unwrap()).collect();
            black_box(out)
        })
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(engine.classify_range(1, 191).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, bench_sweep, bench_classify_range);
criterion_main!(benches);
