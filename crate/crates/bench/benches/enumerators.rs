use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use stopset_bench::fixtures;
use stopset_core::decoder::{iterative_decode, ReceivedWord};
use stopset_core::{catalog, construct, stopsets, BitVector, Subset};

fn enumerators(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerators");
    for (label, code, h) in fixtures() {
        group.bench_with_input(BenchmarkId::new("stopping", label), &h, |b, h| {
            b.iter(|| stopsets::stopping_set_enumerator(black_box(h)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("dead_end", label), &h, |b, h| {
            b.iter(|| stopsets::dead_end_enumerator(black_box(h)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("incorrigible", label), &code, |b, code| {
            b.iter(|| stopsets::incorrigible_enumerator(black_box(code)).unwrap())
        });
    }
    group.finish();
}

fn optimal(c: &mut Criterion) {
    let rm = catalog::rm_8_4_4();
    c.bench_function("optimal_enumerators/rm_8_4_4", |b| {
        b.iter(|| stopsets::optimal_enumerators(black_box(&rm)).unwrap())
    });
    c.bench_function("complete_matrix/rm_8_4_4", |b| {
        b.iter(|| construct::complete_matrix(black_box(&rm)).unwrap())
    });
}

fn linear_algebra(c: &mut Criterion) {
    let golay = catalog::golay_24_12_8();
    let h = golay.parity_basis().clone();
    c.bench_function("rank/golay", |b| b.iter(|| black_box(&h).rank()));
    c.bench_function("null_space/golay", |b| b.iter(|| black_box(&h).null_space_basis()));
}

fn peeling(c: &mut Criterion) {
    let h = catalog::matrix("H14").unwrap();
    let sent = BitVector::zeros(8).unwrap();
    let erased = Subset::from_one_based(8, [1, 2, 3, 7, 8]).unwrap();
    let r = ReceivedWord::erase(&sent, &erased).unwrap();
    c.bench_function("iterative_decode/H14", |b| {
        b.iter(|| iterative_decode(black_box(&h), black_box(&r)).unwrap())
    });
}

criterion_group!(benches, enumerators, optimal, linear_algebra, peeling);
criterion_main!(benches);
