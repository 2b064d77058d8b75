use criterion::{criterion_group, criterion_main, Criterion};

use lame_bench::catalog;
use lame_core::classify::{classify_all, standard_amalgams, verify_appendix_a2};
use lame_core::permgrp::prime_factors;
use lame_core::treegrp::enumerate_normalizer_trees;

fn trees(c: &mut Criterion) {
    c.bench_function("normalizer trees n_cap 30", |b| {
        b.iter(|| enumerate_normalizer_trees(&[2, 2, 2, 3], 2, 30).unwrap())
    });
}

fn sylow(c: &mut Criterion) {
    let (cat, _) = catalog();
    c.bench_function("sylow subgroups of order-48 groups", |b| {
        b.iter(|| {
            cat.of_order(48)
                .map(|r| prime_factors(r.group.order() as u64).into_iter().map(|p| r.group.sylow(p).unwrap().1).sum::<usize>())
                .sum::<usize>()
        })
    });
    c.bench_function("five-Sylow counts of order-60 groups", |b| b.iter(|| verify_appendix_a2(&cat)));
}

fn classification(c: &mut Criterion) {
    let (cat, integ) = catalog();
    let amalgams = standard_amalgams().unwrap();
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    for genus in [5u64, 6] {
        g.bench_function(format!("genus {genus}"), |b| b.iter(|| classify_all(&cat, &integ, &amalgams, &[genus])));
    }
    g.finish();
}

criterion_group!(benches, trees, sylow, classification);
criterion_main!(benches);
