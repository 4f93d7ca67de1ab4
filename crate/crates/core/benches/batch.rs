use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use sytq::genfun::{stanley, syt_gf};
use sytq::par;
use sytq::tableau::enumerate_straight;
use sytq::verify::staircase_like;
use sytq::Partition;

fn agrees(p: &Partition) -> bool {
    let mut c = vec![0u64; p.size() * p.size() / 2 + 1];
    for t in enumerate_straight(p).unwrap() {
        c[t.maj()] += 1;
    }
    let f = syt_gf(p);
    c.iter().enumerate().all(|(k, &v)| f.coeff(k) == v.into())
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("stanley-vs-enumeration");
    group.sample_size(10);
    for n in [8usize, 10, 11] {
        let shapes: Vec<Partition> = (1..=n).flat_map(Partition::all).collect();
        group.bench_with_input(BenchmarkId::new("sequential", n), &shapes, |b, s| {
            b.iter(|| black_box(par::map_sequential(s, agrees)))
        });
        group.bench_with_input(BenchmarkId::new("parallel", n), &shapes, |b, s| {
            b.iter(|| black_box(par::map(s, agrees)))
        });
    }
    group.finish();
}

fn parity(c: &mut Criterion) {
    let mut group = c.benchmark_group("parity-unimodal");
    group.sample_size(10);
    let shapes: Vec<Partition> = (1..=18).flat_map(Partition::all).collect();
    let check = |p: &Partition| syt_gf(p).is_parity_unimodal();
    group.bench_function("sequential", |b| b.iter(|| black_box(par::map_sequential(&shapes, check))));
    group.bench_function("parallel", |b| b.iter(|| black_box(par::map(&shapes, check))));
    group.finish();
}

fn expand(c: &mut Criterion) {
    let mut group = c.benchmark_group("expand");
    group.sample_size(10);
    for size in [100usize, 200] {
        let p = staircase_like(size);
        let product = stanley(&p);
        group.bench_with_input(BenchmarkId::new("cyclotomic-passes", size), &product, |b, f| {
            b.iter(|| black_box(f.expand().unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("multiply-and-divide", size), &product, |b, f| {
            b.iter(|| black_box(f.expand_by_multiplication().unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, sweep, parity, expand);
criterion_main!(benches);
