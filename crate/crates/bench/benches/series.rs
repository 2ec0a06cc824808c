use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tube_torsion::enumeration::{
    lagrange_coefficient, refined_q, refined_table, series_p, series_torsion, torsion_count,
};

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for order in [12, 24] {
        g.bench_with_input(BenchmarkId::new("P", order), &order, |b, &o| {
            b.iter(|| series_p(black_box(o)))
        });
        g.bench_with_input(BenchmarkId::new("torsion", order), &order, |b, &o| {
            b.iter(|| series_torsion(black_box(o)))
        });
    }
    g.finish();
}

fn formulas(c: &mut Criterion) {
    let mut g = c.benchmark_group("closed forms");
    g.bench_function("T_200", |b| b.iter(|| torsion_count(black_box(200))));
    g.bench_function("refined table n=30", |b| b.iter(|| refined_table(black_box(30))));
    g.bench_function("Lagrange n=16", |b| b.iter(|| lagrange_coefficient(black_box(16))));
    g.bench_function("q-count n=12 (2,1,1)", |b| b.iter(|| refined_q(black_box(12), 2, 1, 1)));
    g.finish();
}

criterion_group!(benches, series, formulas);
criterion_main!(benches);
