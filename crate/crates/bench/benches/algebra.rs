use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use frey_core::algebra::{
    discriminant_poly, rat, resultant, roots_in_gf2k, Domain, Field, Gf2k, Poly, Rat,
};
use frey_core::families::{darmon_f, verify_closed_form_disc, FamilyId};
use frey_core::local::TameElem;

fn polys(c: &mut Criterion) {
    let a = Poly::<Rat>::from_ints(&[3, -1, 4, 1, -5, 9, 2, -6]);
    let b = Poly::<Rat>::from_ints(&[5, 3, -5, 8, 9, -7]);
    c.bench_function("resultant deg 7 x deg 5 over Q", |bch| {
        bch.iter(|| resultant(black_box(&a), black_box(&b)))
    });
    let f = darmon_f(13).unwrap();
    c.bench_function("discriminant of f, r = 13", |bch| {
        bch.iter(|| discriminant_poly(black_box(&f)))
    });
    c.bench_function("symbolic disc of C_plus, r = 5", |bch| {
        bch.iter(|| verify_closed_form_disc(FamilyId::CPlus, black_box(5)))
    });
}

fn finite_fields(c: &mut Criterion) {
    let field = Gf2k::standard(8).unwrap();
    let h = Poly::new((1..=9).map(|i| field.elem(i * 37 % 256)).collect());
    c.bench_function("roots in GF(2^8) of a degree-8 polynomial", |bch| {
        bch.iter(|| roots_in_gf2k(black_box(&h), &field))
    });
}

fn tame(c: &mut Criterion) {
    let a = TameElem::from_coeffs(7, (1..=7).map(|i| rat(i, i + 1)).collect());
    let b = TameElem::from_coeffs(7, (1..=7).map(|i| rat(2 * i - 7, 3)).collect());
    c.bench_function("tame multiply, degree 7", |bch| {
        bch.iter(|| black_box(&a).times(black_box(&b)))
    });
    c.bench_function("tame inverse, degree 7", |bch| {
        bch.iter(|| black_box(&a).inv())
    });
}

criterion_group!(benches, polys, finite_fields, tame);
criterion_main!(benches);
