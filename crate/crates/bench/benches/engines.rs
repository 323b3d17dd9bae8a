//! Benchmarks for the two hot paths: coset enumeration and stabilizer
//! chains. Run with `cargo bench -p polyforge-bench`.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use polyforge_core::cpr::{build_cpr, CprFamily};
use polyforge_core::families::{build_g, build_h};
use polyforge_core::fp::todd_coxeter;
use polyforge_core::perm::{subgroup_elements, PermGroup};

fn bench_enumeration(c: &mut Criterion) {
    let g1 = build_g(1, 10).unwrap();
    c.bench_function("todd_coxeter G1(10) order 1024", |b| {
        b.iter(|| todd_coxeter(black_box(&g1), &[], 1 << 18).unwrap().num_cosets())
    });
    let h = build_h(11, 3, 4).unwrap();
    c.bench_function("todd_coxeter H(11,3,4) order 2048", |b| {
        b.iter(|| todd_coxeter(black_box(&h), &[], 1 << 18).unwrap().num_cosets())
    });
    let w = g1.relator("r1*r2").unwrap();
    c.bench_function("todd_coxeter G1(10) cyclic subgroup index", |b| {
        b.iter(|| {
            todd_coxeter(black_box(&g1), std::slice::from_ref(&w), 1 << 18)
                .unwrap()
                .num_cosets()
        })
    });
}

fn bench_chain(c: &mut Criterion) {
    let triple = build_cpr(CprFamily::G1, 10).unwrap();
    c.bench_function("stabilizer chain, degree-256 triple of order 1024", |b| {
        b.iter(|| {
            let g = PermGroup::new(black_box(triple.generators().to_vec())).unwrap();
            g.order().unwrap()
        })
    });
    c.bench_function("dihedral closure of 256 elements", |b| {
        let gens = vec![triple.b.clone(), triple.c.clone()];
        b.iter(|| subgroup_elements(black_box(&gens), 1 << 16).unwrap().len())
    });
}

criterion_group!(benches, bench_enumeration, bench_chain);
criterion_main!(benches);
