use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ridgewp::catalog::Execution;
use ridgewp::scan::{self, ScanConfig, ScanMode};
use ridgewp::verify;

fn modes() -> [(&'static str, Execution); 2] {
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)]
}

fn bench_equivalence_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("equivalence_scan");
    group.sample_size(10);
    for n in [4, 5] {
        for (name, exec) in modes() {
            let mut config = ScanConfig::new(ScanMode::Equivalence, vec![1, 2, 3]);
            config.exec = exec;
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| scan::scan_exhaustive(n, false, &config).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_find_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_scan_n6");
    group.sample_size(10);
    for (name, exec) in modes() {
        let mut config = ScanConfig::new(ScanMode::Find, vec![2]);
        config.exec = exec;
        group.bench_function(name, |b| b.iter(|| scan::scan_exhaustive(6, false, &config).unwrap()));
    }
    group.finish();
}

fn bench_catalog_audit(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog_audit_n5");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| verify::audit_catalog(5, &verify::CATALOG_PS, exec)));
    }
    group.finish();
}

criterion_group!(benches, bench_equivalence_scan, bench_find_scan, bench_catalog_audit);
criterion_main!(benches);
