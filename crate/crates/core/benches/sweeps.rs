use asymhollow::appendix::closed_form_sweep;
use asymhollow::asymptotic::{is_asymptotically_hollow, oracle_agreement, Range, TupleA};
use asymhollow::classify::{a_n_family, classify_triples, ClassificationBox};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use itertools::Itertools;
use rayon::ThreadPoolBuilder;

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    vec![
        ("sequential", ThreadPoolBuilder::new().num_threads(1).build().unwrap()),
        ("parallel", ThreadPoolBuilder::new().build().unwrap()),
    ]
}

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    let a9 = a_n_family(9).unwrap();
    let box_ = ClassificationBox::new(10, 60).unwrap();
    let tuples: Vec<TupleA> = (2..=9i64)
        .combinations_with_replacement(3)
        .map(|v| TupleA::new(v).unwrap())
        .collect();
    for (name, pool) in pools() {
        g.bench_with_input(BenchmarkId::new("classify_10_60", name), &box_, |b, bx| {
            b.iter(|| pool.install(|| classify_triples(*bx).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("criterion_a9", name), &a9, |b, a| {
            b.iter(|| pool.install(|| is_asymptotically_hollow(a, Range::Full)))
        });
        g.bench_function(BenchmarkId::new("closed_form_sweep", name), |b| {
            b.iter(|| pool.install(|| closed_form_sweep(2, 8, 300).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("oracle_agreement", name), &tuples, |b, ts| {
            b.iter(|| {
                pool.install(|| {
                    asymhollow::par::map(ts.clone(), |a| oracle_agreement(&a, 50).unwrap())
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
