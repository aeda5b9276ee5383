use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use regbound_bench::{dense_cubics, powers, sparse_monomials, twisted_cubic};
use regbound_core::hilbert::{hilbert_numerator, hilbert_series};
use regbound_core::oracle::{monomial_regularity, regularity_exact};
use regbound_core::{analyze, AnalyzeOptions, OracleBudget, PivotStrategy, PolyRing};

fn groebner(c: &mut Criterion) {
    c.bench_function("groebner/dense_cubics", |b| {
        b.iter(|| {
            let ideal = dense_cubics();
            black_box(ideal.groebner_basis().len())
        })
    });
}

fn hilbert(c: &mut Criterion) {
    let m = sparse_monomials(5, 4);
    c.bench_function("hilbert/series", |b| b.iter(|| hilbert_series(black_box(&m))));
    let mut group = c.benchmark_group("hilbert/pivot");
    for (name, strategy) in [("most_frequent", PivotStrategy::MostFrequent), ("first_variable", PivotStrategy::FirstVariable)] {
        group.bench_function(name, |b| b.iter(|| hilbert_numerator(black_box(&m), strategy)));
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let budget = OracleBudget::default();
    let ci = powers(3, 3);
    c.bench_function("oracle/koszul_ci", |b| b.iter(|| regularity_exact(black_box(&ci), &budget).unwrap()));
    let m = sparse_monomials(4, 3);
    c.bench_function("oracle/monomial", |b| {
        b.iter(|| monomial_regularity(black_box(&m), PolyRing::DEFAULT_PRIME))
    });
}

fn pipeline(c: &mut Criterion) {
    let ideal = twisted_cubic();
    let options = AnalyzeOptions { exact: true, ..AnalyzeOptions::default() };
    c.bench_function("analyze/twisted_cubic", |b| b.iter(|| analyze(black_box(&ideal), &options).unwrap()));
}

criterion_group!(benches, groebner, hilbert, oracle, pipeline);
criterion_main!(benches);
