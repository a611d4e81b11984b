use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use stralg::artheory::full_catalog;
use stralg::decomp::{decompose, DecomposeOptions};
use stralg::fixtures;
use stralg::homalg::{hom_basis, middle_census, CensusLimits};
use stralg::linalg::char_poly;
use stralg::repmod::parse_module;
use stralg::runs::{test_modules, verify_main_theorem};
use stralg_bench::{gp_witness, random_matrix};

fn linalg(c: &mut Criterion) {
    let m = random_matrix(32003, 120, 1);
    c.bench_function("char_poly 120x120", |b| b.iter(|| char_poly(black_box(&m))));
}

fn hom_and_decompose(c: &mut Criterion) {
    let w = gp_witness(11, 23);
    c.bench_function("hom_basis End(M') p=11", |b| b.iter(|| hom_basis(black_box(&w.glued), &w.glued).unwrap().dim()));
    let opts = DecomposeOptions::default();
    c.bench_function("decompose M' p=11", |b| b.iter(|| decompose(black_box(&w.glued), &opts).unwrap().count()));
    let p = Arc::new(fixtures::a3nr());
    let cat = full_catalog(&p).unwrap();
    let sum = cat.modules().iter().fold(cat.modules()[0].clone(), |acc, m| acc.direct_sum(m).unwrap());
    c.bench_function("decompose a3nr catalog sum", |b| b.iter(|| decompose(black_box(&sum), &opts).unwrap().count()));
}

fn census(c: &mut Criterion) {
    let p = Arc::new(fixtures::d4sub());
    let m = parse_module(&p, fixtures::D4SUB_M2111).unwrap();
    let s = parse_module(&p, fixtures::D4SUB_S0).unwrap();
    let opts = DecomposeOptions::default();
    c.bench_function("middle_census d4sub", |b| {
        b.iter(|| middle_census(&m, &s, CensusLimits::default(), &opts).unwrap())
    });
    let a3 = Arc::new(fixtures::a3());
    let mods = test_modules(&a3, 4, false).unwrap();
    c.bench_function("verify_main_theorem a3", |b| {
        b.iter(|| verify_main_theorem(&mods, CensusLimits::default(), &opts).unwrap())
    });
}

criterion_group!(benches, linalg, hom_and_decompose, census);
criterion_main!(benches);
