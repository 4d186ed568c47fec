//! Sequential versus rayon paths on the workloads the CLI fans out.

use conformal_em::curvature::{self, Metric};
use conformal_em::exact::ratio;
use conformal_em::{invariants, par, Branch, CompactSolution, Exact};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

type Mapper = fn(&[f64], &(dyn Fn(&f64) -> f64 + Sync)) -> Vec<f64>;

fn seq(items: &[f64], f: &(dyn Fn(&f64) -> f64 + Sync)) -> Vec<f64> {
    par::map_sequential(items, f)
}

fn rayon(items: &[f64], f: &(dyn Fn(&f64) -> f64 + Sync)) -> Vec<f64> {
    par::map_parallel(items, f)
}

const PATHS: [(&str, Mapper); 2] = [("sequential", seq), ("parallel", rayon)];

fn oracle_grid(c: &mut Criterion) {
    let sol = CompactSolution::build(3, ratio(3, 2), ratio(17, 2), Branch::First).unwrap();
    let profile = sol.profile().unwrap();
    let mut group = c.benchmark_group("oracle_grid");
    for n in [64usize, 512] {
        let grid = curvature::sample_grid(&profile, n);
        for (name, path) in PATHS {
            group.bench_with_input(BenchmarkId::new(name, n), &grid, |bch, grid| {
                bch.iter(|| {
                    path(grid, &|&x| {
                        let r = curvature::ricci(&profile, x, Metric::Rescaled).unwrap();
                        r.tracefree_norm + curvature::em_residual(&profile, x).unwrap()
                    })
                })
            });
        }
    }
    group.finish();
}

fn build_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_sweep");
    for n in [64usize, 256] {
        let indices: Vec<f64> = (0..n).map(|i| i as f64).collect();
        for (name, path) in PATHS {
            group.bench_with_input(BenchmarkId::new(name, n), &indices, |bch, indices| {
                bch.iter(|| {
                    path(indices, &|&i| {
                        let b = ratio(21 + 5 * i as i64, 20);
                        let sol = CompactSolution::build(
                            2,
                            Exact::from_integer(1.into()),
                            b,
                            Branch::First,
                        )
                        .unwrap();
                        invariants::report(&sol).unwrap().sv
                    })
                })
            });
        }
    }
    group.finish();
}

fn moduli(c: &mut Criterion) {
    c.bench_function("moduli_scan/omega_d=40", |bch| {
        bch.iter(|| {
            invariants::moduli_scan(black_box(40.0), 1.0)
                .unwrap()
                .component_lower_bound
        })
    });
}

criterion_group!(benches, oracle_grid, build_sweep, moduli);
criterion_main!(benches);
