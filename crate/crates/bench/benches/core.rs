use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sll_core::curvature::{berger_algebra, curvature_solution_space};
use sll_core::lattice::{closure, DEFAULT_MAX_ELEMENTS};
use sll_core::representation::weakly_irreducible_oracle;
use sll_core::sample::{random_curvature, random_matrix, random_two_sum};
use sll_core::twosum::verify_two_sum_identities;
use sll_core::{FieldSpec, OracleBounds};

fn fields() -> [(&'static str, FieldSpec); 2] {
    [("gf5", FieldSpec::Prime(5)), ("q", FieldSpec::Rationals)]
}

fn rref(c: &mut Criterion) {
    let mut g = c.benchmark_group("rref");
    for (name, f) in fields() {
        for n in [4, 8, 16] {
            let m = random_matrix(f, n, n, &mut ChaCha8Rng::seed_from_u64(n as u64));
            g.bench_with_input(BenchmarkId::new(name, n), &m, |b, m| {
                b.iter(|| black_box(m).rref())
            });
        }
    }
    g.finish();
}

fn canonical_split(c: &mut Criterion) {
    let mut g = c.benchmark_group("canonical_split");
    for (name, f) in fields() {
        for n in [4, 8] {
            let dec = random_two_sum(f, n, &mut ChaCha8Rng::seed_from_u64(3));
            g.bench_with_input(BenchmarkId::new(name, n), &dec, |b, d| {
                b.iter(|| black_box(d).canonical_split())
            });
        }
    }
    g.finish();
}

fn two_sum_identities(c: &mut Criterion) {
    let dec = random_two_sum(FieldSpec::Prime(3), 6, &mut ChaCha8Rng::seed_from_u64(5));
    c.bench_function("verify_two_sum_identities/gf3/6", |b| b.iter(|| verify_two_sum_identities(black_box(&dec))));
}

fn lattice_closure(c: &mut Criterion) {
    let mut g = c.benchmark_group("closure");
    for n in [4, 6, 8] {
        let dec = random_two_sum(FieldSpec::Prime(5), n, &mut ChaCha8Rng::seed_from_u64(7));
        let seeds = dec.generators();
        g.bench_with_input(BenchmarkId::new("gf5", n), &seeds, |b, s| {
            b.iter(|| closure(black_box(s), DEFAULT_MAX_ELEMENTS).unwrap())
        });
    }
    g.finish();
}

fn curvature(c: &mut Criterion) {
    let f = FieldSpec::Prime(3);
    let inst = random_curvature(f, 4, &mut ChaCha8Rng::seed_from_u64(11)).unwrap();
    let dec = &inst.decomposition;
    c.bench_function("curvature_solution_space/gf3/4", |b| {
        b.iter(|| {
            curvature_solution_space(f, 4, &[dec.v1(), dec.v2()], Some(black_box(&inst.form)))
                .unwrap()
        })
    });
    let alg = berger_algebra(f, 4, &inst.tensors).unwrap();
    c.bench_function("indecomposability_oracle/gf3/4", |b| {
        b.iter(|| weakly_irreducible_oracle(black_box(&inst.form), &alg, OracleBounds::default()))
    });
}

criterion_group!(benches, rref, canonical_split, two_sum_identities, lattice_closure, curvature);
criterion_main!(benches);
