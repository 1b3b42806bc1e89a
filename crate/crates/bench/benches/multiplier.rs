use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use superschur_bench::fixtures;
use superschur_core::{schur_multiplier, schur_multiplier_cochain_oracle};

fn engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("multiplier");
    group.sample_size(20);
    for (name, l) in fixtures() {
        group.bench_with_input(BenchmarkId::new("chain", &name), &l, |b, l| {
            b.iter(|| schur_multiplier(black_box(l)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("cochain", &name), &l, |b, l| {
            b.iter(|| schur_multiplier_cochain_oracle(black_box(l)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, engines);
criterion_main!(benches);
