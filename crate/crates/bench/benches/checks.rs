use criterion::{criterion_group, criterion_main, Criterion};
use nvk_bench::{lift6, nn2, zero};
use nvk_core::check_profile;
use nvk_core::construct::manin_from_bialgebra;
use nvk_core::ybe::{eval_nybe, search_nybe, triangular_bialgebra, SearchOptions};
use nvk_core::Scalar;

fn profiles(c: &mut Criterion) {
    let spec = nn2();
    c.bench_function("nn-bialgebra dim 2", |b| b.iter(|| check_profile(&spec, "nn-bialgebra").unwrap()));
    let (lift, r) = lift6();
    let tri = triangular_bialgebra(&lift, &r).unwrap().into_inner();
    c.bench_function("nn-bialgebra dim 6", |b| b.iter(|| check_profile(&tri, "nn-bialgebra").unwrap()));
    c.bench_function("manin dim 2", |b| b.iter(|| manin_from_bialgebra(&spec).unwrap()));
}

fn nybe(c: &mut Criterion) {
    let (lift, r) = lift6();
    c.bench_function("eval_nybe dim 6", |b| b.iter(|| eval_nybe(&lift, &r).unwrap()));
    let grid: Vec<Scalar> = (-2..=2).map(Scalar::from_int).collect();
    let z3 = zero(3);
    c.bench_function("search dim 3 grid 5", |b| {
        b.iter(|| search_nybe(&z3, &grid, SearchOptions::default()).unwrap())
    });
    let z4 = zero(4);
    let small: Vec<Scalar> = (0..=1).map(Scalar::from_int).collect();
    c.bench_function("search dim 4 grid 2", |b| {
        b.iter(|| search_nybe(&z4, &small, SearchOptions::default()).unwrap())
    });
}

criterion_group!(benches, profiles, nybe);
criterion_main!(benches);
