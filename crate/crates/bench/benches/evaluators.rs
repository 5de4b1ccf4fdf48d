use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qecmetro::ecc::{qfi_bitflip, solve_recurrence};
use qecmetro::kernels::round_factor;
use qecmetro::noec::qfi_noec_exact;
use qecmetro::oracle::qfi_numeric;
use qecmetro::{Scenario, SystemParams};
use std::hint::black_box;

fn params(n: u32, rounds: u64, xi: f64, p: f64) -> SystemParams {
    SystemParams {
        n,
        omega: 2.0,
        gamma: 1.0,
        xi,
        p,
        tau: 1e-3,
        rounds,
    }
}

fn kernels(c: &mut Criterion) {
    c.bench_function("round_factor", |b| {
        b.iter(|| round_factor(black_box(2.0), black_box(1.0), black_box(1e-3)))
    });
}

fn recurrence(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_recurrence");
    for rounds in [10u64, 1_000, 1_000_000] {
        group.bench_with_input(BenchmarkId::new("ideal", rounds), &rounds, |b, &r| {
            b.iter(|| solve_recurrence(black_box(&params(25, r, 0.0, 0.0))))
        });
        group.bench_with_input(BenchmarkId::new("general", rounds), &rounds, |b, &r| {
            b.iter(|| solve_recurrence(black_box(&params(25, r, 1e-4, 0.01))))
        });
    }
    group.finish();
}

fn closed_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("closed_form");
    for n in [5u32, 25, 101] {
        group.bench_with_input(BenchmarkId::new("noec", n), &n, |b, &n| {
            b.iter(|| qfi_noec_exact(black_box(&params(n, 1, 0.0, 0.0)), 0.5))
        });
        group.bench_with_input(BenchmarkId::new("bitflip", n), &n, |b, &n| {
            b.iter(|| qfi_bitflip(black_box(&params(n, 1_000, 0.0, 0.0))))
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for n in [1u32, 3, 5] {
        group.bench_with_input(BenchmarkId::new("parity_general", n), &n, |b, &n| {
            b.iter(|| qfi_numeric(black_box(&params(n, 8, 1e-4, 0.06)), Scenario::ParityGeneral))
        });
    }
    group.finish();
}

criterion_group!(benches, kernels, recurrence, closed_forms, oracle);
criterion_main!(benches);
