use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use polyprod::oracle::euler_vectors;
use polyprod::{chi_brute_force, chi_polyhedral_product, h_polynomial, hhat_polynomial, EulerVector};
use polyprod_bench::{complexes, oracle_instances};

fn bench_polynomials(c: &mut Criterion) {
    let mut group = c.benchmark_group("polynomials");
    for (name, l) in complexes() {
        group.bench_function(format!("hhat/{name}"), |b| b.iter(|| hhat_polynomial(black_box(&l))));
        group.bench_function(format!("h/{name}"), |b| b.iter(|| h_polynomial(black_box(&l))));
    }
    group.finish();
}

fn bench_chi(c: &mut Criterion) {
    let mut group = c.benchmark_group("chi");
    for (name, l) in complexes() {
        let m = l.vertex_count();
        let e_a = EulerVector::from_i64s(&(0..m as i64).map(|i| i % 5 - 2).collect::<Vec<_>>());
        let e_b = EulerVector::constant(m, 2);
        group.bench_function(name, |b| b.iter(|| chi_polyhedral_product(black_box(&l), &e_a, &e_b).unwrap()));
    }
    group.finish();
}

fn bench_formula_vs_oracle(c: &mut Criterion) {
    let instances = oracle_instances(5, 100);
    let mut group = c.benchmark_group("100 instances");
    group.bench_function("formula", |b| {
        b.iter(|| {
            for inst in &instances {
                let (e_a, e_b) = euler_vectors(&inst.pairs);
                black_box(chi_polyhedral_product(&inst.complex, &e_a, &e_b).unwrap());
            }
        })
    });
    group.bench_function("brute force", |b| {
        b.iter(|| {
            for inst in &instances {
                black_box(chi_brute_force(&inst.complex, &inst.pairs).unwrap());
            }
        })
    });
    group.finish();
}

criterion_group!(benches, bench_polynomials, bench_chi, bench_formula_vs_oracle);
criterion_main!(benches);
