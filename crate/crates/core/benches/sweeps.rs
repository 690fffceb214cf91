use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jack_laurent::coeff::q;
use jack_laurent::finite_n::jack_poly_n;
use jack_laurent::jack::rational_mode_construct;
use jack_laurent::par::Exec;
use jack_laurent::{Bipartition, Partition};

// Numeric construction is uncached, so every iteration does the full work.
fn construct_sweep(c: &mut Criterion) {
    let alphas = Bipartition::up_to(4);
    let (k0, p00) = (q(-3, 7), q(11, 5));
    let mut g = c.benchmark_group("rational_construct_up_to_4");
    g.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| {
                exec.map(&alphas, |a| {
                    rational_mode_construct(a, &k0, &p00).map(|f| f.len()).unwrap_or(0)
                })
            })
        });
    }
    g.finish();
}

fn finite_sweep(c: &mut Criterion) {
    let parts: Vec<Partition> = (0..=5).flat_map(Partition::all_of).filter(|p| p.len() <= 3).collect();
    let k0 = q(-2, 5);
    let mut g = c.benchmark_group("jack_poly_n3_up_to_5");
    g.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| {
                exec.map(&parts, |p| {
                    jack_poly_n(p, 3, &k0).map(|f| f.terms().count()).unwrap_or(0)
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, construct_sweep, finite_sweep);
criterion_main!(benches);
