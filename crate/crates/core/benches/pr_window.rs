//! Sequential vs data-parallel window scans. Run with
//! `cargo bench -p apractical` (the `parallel` feature is on by default;
//! without it only the sequential lanes run).

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use apractical::arith::FactorSieve;
use apractical::pr::pr_window_sequential;
use apractical::rule::SetRule;

fn bench_pr_window(c: &mut Criterion) {
    let mut group = c.benchmark_group("pr_window");
    group.sample_size(20);
    for &n in &[2_000u64, 20_000, 100_000] {
        let sieve = FactorSieve::new(n).unwrap();
        let a = SetRule::smooth_closure([2, 3]).unwrap().materialize(n);
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, _| {
            b.iter(|| black_box(pr_window_sequential(&a, &sieve)))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, _| {
            b.iter(|| black_box(apractical::pr::pr_window_parallel(&a, &sieve)))
        });
    }
    group.finish();
}

fn bench_practical_sieve(c: &mut Criterion) {
    let mut group = c.benchmark_group("practical_sieve");
    group.sample_size(20);
    for &n in &[10_000u64, 100_000] {
        let sieve = FactorSieve::new(n).unwrap();
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, _| {
            b.iter(|| black_box(sieve.practical_sieve_sequential(n)))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, _| {
            b.iter(|| black_box(sieve.practical_sieve_parallel(n)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_pr_window, bench_practical_sieve);
criterion_main!(benches);
