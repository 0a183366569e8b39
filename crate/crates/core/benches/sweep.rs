//! Sequential versus pooled population sweeps.
//!
//! Without the `parallel` feature both arms run sequentially, which makes
//! the overhead of the dispatch itself visible.

use adgraph::par::Execution;
use adgraph::verify::{run, Population, Theorem, DEFAULT_SEED};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn sweeps(c: &mut Criterion) {
    let cases = [
        (Theorem::TraceMoments, "exhaustive:6+random:200:10"),
        (Theorem::Clique, "exhaustive:6+random:200:10"),
        (Theorem::Coefficients, "exhaustive:6"),
    ];
    for (theorem, spec) in cases {
        let population = Population::parse(spec, DEFAULT_SEED).expect("valid population");
        let mut group = c.benchmark_group(format!("verify-{}", theorem.id()));
        group.sample_size(10);
        for (name, exec) in [
            ("sequential", Execution::Sequential),
            ("parallel", Execution::Parallel),
        ] {
            group.bench_with_input(BenchmarkId::new(name, spec), &population, |b, pop| {
                b.iter(|| run(theorem, pop, exec))
            });
        }
        group.finish();
    }
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
