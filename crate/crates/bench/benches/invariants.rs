use bieberbach::linalg::{hermite_normal_form, smith_normal_form};
use bieberbach::{abelianization, catalog, decompose, fixed_torus, FiniteGroup};
use bieberbach_bench::{dense_matrix, dim3_groups};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn homology(c: &mut Criterion) {
    let hw = catalog::hantzsche_wendt();
    c.bench_function("abelianization/hw", |b| {
        b.iter(|| abelianization(black_box(&hw)))
    });
    c.bench_function("fixed_torus/hw", |b| b.iter(|| fixed_torus(black_box(&hw))));
}

fn reduction(c: &mut Criterion) {
    let groups = dim3_groups();
    c.bench_function("decompose/dim3_catalog", |b| {
        b.iter(|| {
            for g in &groups {
                black_box(decompose(g).unwrap());
            }
        })
    });
    c.bench_function("catalog/load", |b| b.iter(catalog::list));
}

fn normal_forms(c: &mut Criterion) {
    for n in [4, 8, 12] {
        let m = dense_matrix(n);
        c.bench_function(&format!("smith/{n}x{n}"), |b| {
            b.iter(|| smith_normal_form(black_box(&m)))
        });
        c.bench_function(&format!("hermite/{n}x{n}"), |b| {
            b.iter(|| hermite_normal_form(black_box(&m)))
        });
    }
}

fn finite_groups(c: &mut Criterion) {
    let g = FiniteGroup::semidirect_cyclic(7, 3, 2).unwrap();
    c.bench_function("subgroups/F21", |b| {
        b.iter(|| black_box(&g).all_subgroups().unwrap())
    });
    c.bench_function("coprime_class/F21", |b| {
        b.iter(|| black_box(&g).in_coprime_class().unwrap())
    });
}

criterion_group!(benches, homology, reduction, normal_forms, finite_groups);
criterion_main!(benches);
