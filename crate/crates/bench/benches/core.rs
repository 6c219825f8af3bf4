use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use powerful::enumerate::{census_with, CensusConfig};
use powerful::{canonical_form, is_powerful, min_members, reconstruct, zeta_transform};
use powerful_bench::{order_eight, order_eleven};

fn zeta(c: &mut Criterion) {
    let mut group = c.benchmark_group("zeta");
    for (name, set) in [("order8", order_eight()), ("order11", order_eleven())] {
        group.bench_with_input(BenchmarkId::new("transform", name), &set, |b, s| {
            b.iter(|| zeta_transform(black_box(s)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("is_powerful", name), &set, |b, s| {
            b.iter(|| is_powerful(black_box(s)).unwrap())
        });
    }
    group.finish();
}

fn clutter(c: &mut Criterion) {
    let mut group = c.benchmark_group("reconstruct");
    for (name, set) in [("order8", order_eight()), ("order11", order_eleven())] {
        let clutter = min_members(&set);
        group.bench_with_input(BenchmarkId::from_parameter(name), &clutter, |b, cl| {
            b.iter(|| reconstruct(black_box(cl)).unwrap())
        });
    }
    group.finish();
}

fn canon(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for (name, set) in [("order8", order_eight()), ("order11", order_eleven())] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &set, |b, s| {
            b.iter(|| canonical_form(black_box(s)).unwrap())
        });
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for n in [4, 5] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| census_with(n, &CensusConfig::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, zeta, clutter, canon, census);
criterion_main!(benches);
