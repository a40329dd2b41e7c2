use std::time::Duration;

use alexhodge::boundary::boundary_alexander;
use alexhodge::census::census;
use alexhodge::cyclotomic::factor_roots_of_unity;
use alexhodge::milnor::{milnor_dim, milnor_dim_bruteforce, steenbrink_infinity, top_degree};
use alexhodge::report::build_report;
use alexhodge::CyclotomicFactorization;
use alexhodge_bench::sample_specs;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn milnor(c: &mut Criterion) {
    let mut group = c.benchmark_group("milnor_dim");
    for (n, d) in [(1, 12), (3, 7), (5, 9)] {
        group.bench_with_input(
            BenchmarkId::new("closed_form", format!("{n}/{d}")),
            &(n, d),
            |b, &(n, d)| {
                b.iter(|| {
                    (0..=top_degree(n, d))
                        .map(|m| milnor_dim(n, d, m))
                        .sum::<u64>()
                })
            },
        );
    }
    group.bench_function("bruteforce/3/7", |b| {
        b.iter(|| {
            (0..=top_degree(3, 7))
                .map(|m| milnor_dim_bruteforce(3, 7, m).unwrap())
                .sum::<u64>()
        })
    });
    group.bench_function("steenbrink/3/8", |b| {
        b.iter(|| steenbrink_infinity(black_box(3), 8))
    });
    group.finish();
}

fn factorization(c: &mut Criterion) {
    let f =
        CyclotomicFactorization::from_factors([(1, 6), (2, 3), (3, 4), (6, 2), (12, 1), (15, 2)]);
    let p = f.expand().unwrap();
    c.bench_function("factor_roots_of_unity", |b| {
        b.iter(|| factor_roots_of_unity(black_box(&p)).unwrap())
    });
}

fn reports(c: &mut Criterion) {
    let mut group = c.benchmark_group("report");
    for (name, spec) in sample_specs() {
        group.bench_with_input(BenchmarkId::new("delta_M", name), &spec, |b, s| {
            b.iter(|| boundary_alexander(s).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("full", name), &spec, |b, s| {
            b.iter(|| build_report(s).unwrap())
        });
    }
    group.finish();
}

fn census_bench(c: &mut Criterion) {
    c.bench_function("census/7", |b| {
        b.iter(|| census(black_box(7), None).unwrap())
    });
}

criterion_group!(
    name = benches;
    config = Criterion::default().warm_up_time(Duration::from_millis(500)).measurement_time(Duration::from_secs(2)).sample_size(20);
    targets = milnor, factorization, reports, census_bench
);
criterion_main!(benches);
