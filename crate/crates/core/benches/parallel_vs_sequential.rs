use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dialgebra::completion::{check_gs, CheckConfig};
use dialgebra::rewrite::enumerate_irr_with;
use dialgebra::{family_reduced, family_rules, Alphabet, Execution, Family};

fn modes() -> [(&'static str, Execution); 2] {
    [
        ("parallel", Execution::Parallel),
        ("sequential", Execution::Sequential),
    ]
}

fn bench_check(c: &mut Criterion) {
    let a = Alphabet::new(["x1", "x2", "x3"]).unwrap();
    let schema = family_rules(Family::Commutative, &a, 4).unwrap();
    let mut group = c.benchmark_group("check_gs/commutative-schema-4");
    group.sample_size(10);
    for (name, exec) in modes() {
        let cfg = CheckConfig {
            exec,
            ..CheckConfig::default()
        };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| check_gs(&schema, &cfg).unwrap())
        });
    }
    group.finish();
}

fn bench_irr(c: &mut Criterion) {
    let a = Alphabet::new(["x1", "x2", "x3"]).unwrap();
    let w = family_reduced(Family::LeftCommutative, &a).unwrap();
    let mut group = c.benchmark_group("enumerate_irr/left-commutative-7");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_irr_with(&w, 7, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_check, bench_irr);
criterion_main!(benches);
