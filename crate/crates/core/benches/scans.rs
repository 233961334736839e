use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use minram::constructions::{bms_search, BmsBounds};
use minram::par::with_threads;
use minram::permgroup::{find_normalizer_quotient, named_group, AbstractGroup, GammaKind};
use minram::permgroup::subgroups::EnumBudget;

// 1 is a single-worker pool, 0 the default pool. Without the `parallel`
// feature both run sequentially.
const POOLS: [usize; 2] = [1, 0];

fn bms(c: &mut Criterion) {
    let mut g = c.benchmark_group("bms_search");
    g.sample_size(10);
    for threads in POOLS {
        g.bench_with_input(BenchmarkId::new("n4", threads), &threads, |b, &t| {
            b.iter(|| with_threads(t, || bms_search(4, &BmsBounds::default()).unwrap()))
        });
    }
    g.finish();
}

fn nq(c: &mut Criterion) {
    let c2 = AbstractGroup::from_perm_group(&named_group("C2").unwrap()).unwrap().0;
    let mut g = c.benchmark_group("normalizer_quotient");
    g.sample_size(10);
    for threads in POOLS {
        g.bench_with_input(BenchmarkId::new("C2_deg5", threads), &threads, |b, &t| {
            b.iter(|| {
                with_threads(t, || {
                    find_normalizer_quotient(&c2, 2, 5, &[GammaKind::S, GammaKind::A], EnumBudget::default()).unwrap()
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, bms, nq);
criterion_main!(benches);
