use std::hint::black_box;

use bergman_eggs::algebra::{chi_poly, rat};
use bergman_eggs::kernel::{e_kernel_core, EKernel, YKernel};
use bergman_eggs::{DomainSpec, Element};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

fn chi_expansion(c: &mut Criterion) {
    let mut group = c.benchmark_group("chi_expand");
    for s in ["I:4,4", "IV:8", "V", "VI"] {
        let spec: DomainSpec = s.parse().unwrap();
        let form = chi_poly(&spec.invariants());
        group.bench_with_input(BenchmarkId::from_parameter(s), &form, |b, f| b.iter(|| f.expand()));
    }
    group.finish();
}

fn lambda_synthesis(c: &mut Criterion) {
    let mut group = c.benchmark_group("e_kernel_core");
    group.sample_size(10);
    for (s, k) in [("I:1,1", rat(1, 1)), ("IV:3", rat(3, 2)), ("I:2,2", rat(2, 1)), ("V", rat(1, 1))] {
        let spec: DomainSpec = s.parse().unwrap();
        group.bench_function(BenchmarkId::new(s, k.to_string()), |b| {
            b.iter(|| e_kernel_core(black_box(&spec), black_box(&k)).unwrap())
        });
    }
    group.finish();
}

fn evaluation(c: &mut Criterion) {
    let spec: DomainSpec = "IV:3".parse().unwrap();
    let k = rat(3, 2);
    let z = Element::from_coords(&spec, &[Complex64::new(0.1, 0.0), Complex64::new(0.0, 0.1), Complex64::new(0.05, 0.0)]).unwrap();
    let w = [Complex64::new(0.2, 0.1)];
    let y = YKernel::new(&spec, &k, 1).unwrap();
    let e = EKernel::new(&spec, &k, 2, 2).unwrap();
    let w1 = [Complex64::new(0.1, 0.0), Complex64::new(0.0, 0.2)];
    let w2 = [Complex64::new(0.1, 0.1), Complex64::new(0.2, 0.0)];
    let mut group = c.benchmark_group("eval");
    group.bench_function("y IV:3", |b| b.iter(|| y.eval(black_box(&w), &z, Some(1.0)).unwrap()));
    group.bench_function("e(2,2) IV:3", |b| b.iter(|| e.eval(black_box(&w1), &w2, &z, Some(1.0)).unwrap()));
    group.bench_function("e(2,2) IV:3 fast", |b| {
        b.iter(|| e.core().eval_fast(black_box(0.9), black_box(0.3)))
    });
    group.finish();
}

criterion_group!(benches, chi_expansion, lambda_synthesis, evaluation);
criterion_main!(benches);
