//! Closure-kernel benchmarks: the data-parallel passes against the
//! sequential fallback on the same inputs.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use weierstrass::exec::{set_mode, Mode};
use weierstrass::{
    enumerate_gamma, generate_h_box, oracle_box_semigroup, CurveParams, DefaultGammaProvider,
};

fn modes() -> Vec<(&'static str, Mode)> {
    let mut out = vec![("sequential", Mode::Sequential)];
    if cfg!(feature = "parallel") {
        out.push(("parallel", Mode::Parallel));
    }
    out
}

fn bench_oracle_closure(c: &mut Criterion) {
    let params = CurveParams::new(5, 7).unwrap();
    let mut group = c.benchmark_group("oracle_box_closure");
    group.sample_size(10);
    for m in [3usize, 4] {
        let bound = vec![35u64; m];
        for (name, mode) in modes() {
            group.bench_with_input(BenchmarkId::new(name, m), &m, |b, &m| {
                set_mode(mode);
                b.iter(|| oracle_box_semigroup(&params, m, &bound).unwrap().member_count());
            });
        }
    }
    group.finish();
    set_mode(Mode::Parallel);
}

fn bench_lub_construction(c: &mut Criterion) {
    let params = CurveParams::new(5, 7).unwrap();
    let mut group = c.benchmark_group("lub_construction");
    group.sample_size(10);
    for m in [4usize, 5] {
        let bound = vec![35u64; m];
        for (name, mode) in modes() {
            group.bench_with_input(BenchmarkId::new(name, m), &m, |b, &m| {
                set_mode(mode);
                let provider = DefaultGammaProvider::new();
                b.iter(|| {
                    generate_h_box(&params, m, &bound, &provider).unwrap().member_count()
                });
            });
        }
    }
    group.finish();
    set_mode(Mode::Parallel);
}

fn bench_closed_form(c: &mut Criterion) {
    let params = CurveParams::hermitian_like(5, 3).unwrap();
    c.bench_function("enumerate_gamma_5_126_m4", |b| {
        b.iter(|| enumerate_gamma(&params, 4).unwrap().len());
    });
}

criterion_group!(benches, bench_oracle_closure, bench_lub_construction, bench_closed_form);
criterion_main!(benches);
