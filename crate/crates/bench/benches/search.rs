use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use w6free::chain_lab::{enumerate_graphs, enumerate_splits, line_graph};
use w6free::{canonical_form, construct, find_hamiltonian_cycle, has_minor, special, Family};

fn canonical(c: &mut Criterion) {
    let petersen = special("petersen").unwrap();
    let square = construct(Family::Square(12)).unwrap();
    c.bench_function("canonical_form/petersen", |b| {
        b.iter(|| canonical_form(black_box(&petersen)))
    });
    c.bench_function("canonical_form/c2_12", |b| {
        b.iter(|| canonical_form(black_box(&square)))
    });
}

fn minors(c: &mut Criterion) {
    let w6 = construct(Family::Wheel(6)).unwrap();
    let mut group = c.benchmark_group("has_minor_w6");
    for n in [8, 9, 12] {
        let g = construct(Family::Square(n)).unwrap();
        group.bench_with_input(BenchmarkId::new("square", n), &g, |b, g| {
            b.iter(|| has_minor(g, &w6))
        });
    }
    let lcube = line_graph(&special("cube").unwrap()).unwrap();
    group.bench_function("line_graph_of_cube", |b| b.iter(|| has_minor(&lcube, &w6)));
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    group.bench_function("graphs_7", |b| {
        b.iter(|| enumerate_graphs(black_box(7), 0).unwrap())
    });
    let k6e = special("K6_minus_e").unwrap();
    group.bench_function("splits_k6_minus_e", |b| {
        b.iter(|| enumerate_splits(&k6e, true))
    });
    group.finish();
}

fn hamilton(c: &mut Criterion) {
    let petersen = special("petersen").unwrap();
    let square = construct(Family::Square(16)).unwrap();
    c.bench_function("hamilton/petersen", |b| {
        b.iter(|| find_hamiltonian_cycle(black_box(&petersen)))
    });
    c.bench_function("hamilton/c2_16", |b| {
        b.iter(|| find_hamiltonian_cycle(black_box(&square)))
    });
}

criterion_group!(benches, canonical, minors, enumeration, hamilton);
criterion_main!(benches);
