use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kordered::gen::{random_anchors, random_connected, rng};
use kordered::general::ordered_hamiltonian;
use kordered::graph::{DistanceTable, Graph};
use kordered::oracle::sweep_pk;
use kordered::par::Exec;
use kordered::verify::verify_batch;

const MODES: [(&str, Exec); 2] = [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)];

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep_pk");
    group.sample_size(10);
    let g = Graph::path(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "P10 k=4"), &g, |b, g| {
            b.iter(|| sweep_pk(g, 4, exec, 12).unwrap())
        });
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_batch");
    let g = random_connected(300, 600, 1).unwrap();
    let mut r = rng(2);
    let certs: Vec<_> = (0..64)
        .map(|_| ordered_hamiltonian(&g, &random_anchors(300, 6, &mut r)).unwrap())
        .collect();
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "64 certificates, n=300"), &certs, |b, certs| {
            b.iter(|| verify_batch(&g, certs, exec))
        });
    }
    group.finish();
}

fn distances(c: &mut Criterion) {
    let mut group = c.benchmark_group("distance_table");
    let g = random_connected(1000, 3000, 3).unwrap();
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "n=1000"), &g, |b, g| {
            b.iter(|| DistanceTable::with_exec(g, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps, verification, distances);
criterion_main!(benches);
