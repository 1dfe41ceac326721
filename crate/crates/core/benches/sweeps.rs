//! Sequential against rayon-parallel execution of the sweeps that dominate
//! the acceptance run. Without the `parallel` feature both arms are
//! sequential.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use apolar::level_hf::enumerate_level_hf;
use apolar::schubert::{dvir_scan, e1_table, lascoux_ranks, RankData};
use apolar::tangent::tangent_sweep;
use apolar::Exec;

const ARMS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn tangent(c: &mut Criterion) {
    let mut g = c.benchmark_group("tangent_sweep t<=3 d<=7");
    g.sample_size(10);
    for (name, exec) in ARMS {
        g.bench_function(name, |b| b.iter(|| tangent_sweep(3, 7, exec).unwrap()));
    }
    g.finish();
}

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_level_hf");
    for (name, exec) in ARMS {
        g.bench_with_input(BenchmarkId::new(name, "t=5 d=24"), &(5, 24), |b, &(t, d)| {
            b.iter(|| enumerate_level_hf(black_box(t), black_box(d), exec))
        });
    }
    g.finish();
}

fn kronecker(c: &mut Criterion) {
    let mut g = c.benchmark_group("dvir_scan weight<=7");
    g.sample_size(10);
    for (name, exec) in ARMS {
        g.bench_function(name, |b| b.iter(|| dvir_scan(black_box(7), exec)));
    }
    g.finish();
}

fn lascoux(c: &mut Criterion) {
    let data = RankData::new(2, 7, 5, 4).unwrap();
    let mut g = c.benchmark_group("lascoux (2,7,5,4)");
    g.sample_size(10);
    for (name, exec) in ARMS {
        g.bench_function(BenchmarkId::new("ranks", name), |b| b.iter(|| lascoux_ranks(data, exec).unwrap()));
        g.bench_function(BenchmarkId::new("e1 m=1", name), |b| {
            b.iter(|| e1_table(data, 1, 12, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, tangent, enumerate, kronecker, lascoux);
criterion_main!(benches);
