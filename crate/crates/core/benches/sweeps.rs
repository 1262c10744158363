use criterion::{criterion_group, criterion_main, Criterion};
use rayon::ThreadPoolBuilder;

use baxter::lattice::OrderTable;
use baxter::tables::DegreeTable;
use baxter::verify;

fn sweeps(c: &mut Criterion) {
    let single = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let pooled = ThreadPoolBuilder::new().build().unwrap();
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (label, pool) in [("sequential", &single), ("parallel", &pooled)] {
        group.bench_function(format!("class_table_7/{label}"), |b| {
            b.iter(|| pool.install(|| DegreeTable::build(7)))
        });
        group.bench_function(format!("order_table_6/{label}"), |b| {
            b.iter(|| pool.install(|| OrderTable::build(6)))
        });
        group.bench_function(format!("covers_5/{label}"), |b| {
            b.iter(|| pool.install(|| verify::covers(5)).unwrap())
        });
        group.bench_function(format!("hopf_closure_4/{label}"), |b| {
            b.iter(|| pool.install(|| verify::hopf_closure(4)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
