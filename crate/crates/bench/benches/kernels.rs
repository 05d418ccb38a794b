use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use sarshadow::{detect_grid_with, detect_row, detect_row_oracle, rotate_to_radar, Execution};
use sarshadow_bench::{hills, low_geometry};

fn row_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("row");
    for n in [512usize, 4096, 32_768] {
        let grid = hills(1, n);
        let geom = low_geometry(&grid);
        let z = grid.row(0);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("scan", n), &z, |b, z| {
            b.iter(|| detect_row(black_box(z), None, &geom).unwrap())
        });
        if n <= 4096 {
            group.bench_with_input(BenchmarkId::new("oracle", n), &z, |b, z| {
                b.iter(|| detect_row_oracle(black_box(z), None, &geom).unwrap())
            });
        }
    }
    group.finish();
}

fn grid_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("grid");
    group.sample_size(10);
    for n in [1024usize, 4096] {
        let grid = hills(n, n);
        let geom = low_geometry(&grid);
        group.throughput(Throughput::Elements((n * n) as u64));
        for (name, exec) in [
            ("sequential", Execution::Sequential),
            ("parallel", Execution::Parallel),
        ] {
            group.bench_with_input(BenchmarkId::new(name, n), &grid, |b, g| {
                b.iter(|| detect_grid_with(black_box(g), &geom, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn rotation(c: &mut Criterion) {
    let mut group = c.benchmark_group("rotate");
    group.sample_size(10);
    let grid = hills(1024, 1024);
    group.throughput(Throughput::Elements(1024 * 1024));
    for az in [90.0, 30.0] {
        group.bench_with_input(BenchmarkId::from_parameter(az), &grid, |b, g| {
            b.iter(|| rotate_to_radar(black_box(g), az))
        });
    }
    group.finish();
}

criterion_group!(benches, row_scan, grid_scan, rotation);
criterion_main!(benches);
