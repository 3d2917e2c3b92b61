use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pencil_core::pgl2::stabilizer_with;
use pencil_core::wall::{phi_fiber_with, wall_pencil, Rho};
use pencil_core::{Exec, Field};

fn scans(c: &mut Criterion) {
    let field = Field::prime(13).unwrap();
    let p = wall_pencil(&field, &Rho::int(&field, 2));
    let mut g = c.benchmark_group("pgl2_scan_f13");
    g.sample_size(20);
    for exec in [Exec::Parallel, Exec::Sequential] {
        g.bench_with_input(BenchmarkId::new("stabilizer", format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| stabilizer_with(&p, e).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("phi_fiber", format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| phi_fiber_with(&p, e).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, scans);
criterion_main!(benches);
