use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use relcenter::center::{component_product_via_convolution, irrep_degrees, simple_objects, DEFAULT_SEED};
use relcenter::class_fusion::{build_ring, verify_ring_axioms};
use relcenter::corpus::{corpus_forms, klein_tensor_instance};
use relcenter::group::Family;
use relcenter::pointed::{center_fpdim_report, relative_tensor, PointedBraidedCategory};
use relcenter_bench::named;

fn fixtures() -> Vec<(&'static str, Family, usize)> {
    vec![
        ("S4", Family::Symmetric, 4),
        ("A5", Family::Alternating, 5),
        ("D12", Family::Dihedral, 12),
    ]
}

fn class_fusion(c: &mut Criterion) {
    let mut group = c.benchmark_group("class_fusion");
    for (name, family, n) in fixtures() {
        let g = named(family, n);
        group.bench_with_input(BenchmarkId::new("build_ring", name), &g, |b, g| b.iter(|| build_ring(black_box(g))));
        let ring = build_ring(&g);
        group.bench_with_input(BenchmarkId::new("verify_ring_axioms", name), &ring, |b, r| {
            b.iter(|| verify_ring_axioms(black_box(r)))
        });
    }
    group.finish();
}

fn degrees(c: &mut Criterion) {
    let mut group = c.benchmark_group("degrees");
    group.sample_size(20);
    for (name, family, n) in fixtures() {
        let g = named(family, n);
        group.bench_with_input(BenchmarkId::new("irrep_degrees", name), &g, |b, g| {
            b.iter(|| irrep_degrees(black_box(g), DEFAULT_SEED).unwrap())
        });
    }
    let s4 = named(Family::Symmetric, 4);
    group.bench_function("simple_objects/S4", |b| b.iter(|| simple_objects(black_box(&s4), DEFAULT_SEED).unwrap()));
    group.finish();
}

fn convolution(c: &mut Criterion) {
    let a5 = named(Family::Alternating, 5);
    let reps: Vec<usize> = a5.conjugacy_classes().iter().map(|k| k.representative).collect();
    c.bench_function("convolution/A5 all class pairs", |b| {
        b.iter(|| {
            for &x in &reps {
                for &y in &reps {
                    black_box(component_product_via_convolution(&a5, x, y, 1, 1).unwrap());
                }
            }
        })
    });
}

fn pointed(c: &mut Criterion) {
    let t = klein_tensor_instance();
    c.bench_function("pointed/klein relative tensor", |b| {
        b.iter(|| relative_tensor(&t.c1, &t.c2, &t.d, &t.iota1, &t.iota2).unwrap())
    });
    let categories: Vec<PointedBraidedCategory> =
        corpus_forms().into_iter().map(|(_, m)| PointedBraidedCategory::new(m)).collect();
    c.bench_function("pointed/fpdim reports over corpus forms", |b| {
        b.iter(|| categories.iter().map(center_fpdim_report).filter(|r| r.all_hold()).count())
    });
}

criterion_group!(benches, class_fusion, degrees, convolution, pointed);
criterion_main!(benches);
