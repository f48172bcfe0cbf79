use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use frey_core::algebra::{int, rat};
use frey_core::classifier::{cross_validate, Signature};
use frey_core::local::WeightInterval;
use frey_core::pipelines::{
    pipeline_35p, pipeline_odd_good_reduction, pipeline_ppr_even, Case35, PprCase,
};

fn pipelines(c: &mut Criterion) {
    let w = WeightInterval::positive();
    c.bench_function("ppr-even v_neg, r = 5", |b| {
        b.iter(|| pipeline_ppr_even(PprCase::VNeg, black_box(5), &w))
    });
    c.bench_function("35p v_neg", |b| {
        b.iter(|| pipeline_35p(black_box(Case35::VNeg)))
    });
    c.bench_function("odd good reduction (1, 7/4), r = 3", |b| {
        b.iter(|| pipeline_odd_good_reduction(&int(1), black_box(&rat(7, 4)), 3))
    });
    c.bench_function("cross-validate ppr-odd r = 7, t = 3/512", |b| {
        b.iter(|| cross_validate(Signature::PprOdd, 7, black_box(&rat(3, 512))))
    });
}

criterion_group!(benches, pipelines);
criterion_main!(benches);
