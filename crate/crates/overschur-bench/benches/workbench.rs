//! Timings for the three cost centers: infinite-product expansion,
//! brute-force family walks, and a full identity check that exercises the
//! row-by-row table formula.

use criterion::{criterion_group, criterion_main, Criterion};
use overschur::enumerate::count_table;
use overschur::{g2_special, poch_infinite, verify, FamilyId, IdentityId, Monomial, Params};

fn series_products(c: &mut Criterion) {
    c.bench_function("poch_infinite d=7 r=2 order 300", |b| {
        b.iter(|| poch_infinite(&[Monomial::minus(2), Monomial::minus(5)], 7, 300).unwrap())
    });
    c.bench_function("g2_special d=7 r=2 order 300", |b| {
        b.iter(|| g2_special(7, 2, 300).unwrap())
    });
}

fn family_walks(c: &mut Criterion) {
    let p = Params::new(7, 2).unwrap();
    c.bench_function("count_table bbar d=7 r=2 to weight 40", |b| {
        b.iter(|| count_table(FamilyId::Bbar, p, 40))
    });
}

fn identity_checks(c: &mut Criterion) {
    let p = Params::new(7, 2).unwrap();
    c.bench_function("verify cbar-sum-eq d=7 r=2 order 200", |b| {
        b.iter(|| verify(IdentityId::CbarSumEq, p, 200))
    });
}

criterion_group!(benches, series_products, family_walks, identity_checks);
criterion_main!(benches);
