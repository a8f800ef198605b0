use std::hint::black_box;

use bernstir::bell::{bell_partition_sum, bell_recurrence};
use bernstir::series::bell_egf_coeff;
use bernstir::{BernoulliEngine, StirlingTable};
use bernstir_bench::{sample_args, timed_methods, BERNOULLI_SIZES};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bernoulli_methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("bernoulli");
    let max = *BERNOULLI_SIZES.iter().max().unwrap();
    let engine = BernoulliEngine::new(max);
    for n in BERNOULLI_SIZES {
        for method in timed_methods(n) {
            group.bench_with_input(BenchmarkId::new(method.name(), n), &n, |b, &n| {
                b.iter(|| engine.compute(black_box(n), method).unwrap())
            });
        }
    }
    group.finish();
}

fn stirling_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("stirling_table");
    for max_n in [40, 80, 160] {
        group.bench_with_input(BenchmarkId::from_parameter(max_n), &max_n, |b, &m| {
            b.iter(|| StirlingTable::new(black_box(m)))
        });
    }
    group.finish();
}

fn bell_evaluators(c: &mut Criterion) {
    let mut group = c.benchmark_group("bell");
    let (n, k) = (14, 5);
    let args = sample_args(n - k + 1);
    group.bench_function("partition_sum", |b| {
        b.iter(|| bell_partition_sum(black_box(n), k, &args).unwrap())
    });
    group.bench_function("recurrence", |b| {
        b.iter(|| bell_recurrence(black_box(n), k, &args).unwrap())
    });
    group.bench_function("egf", |b| {
        b.iter(|| bell_egf_coeff(black_box(n), k, &args).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bernoulli_methods, stirling_table, bell_evaluators);
criterion_main!(benches);
