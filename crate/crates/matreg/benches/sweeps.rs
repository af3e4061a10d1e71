//! Parallel vs sequential sweeps: matroid enumeration and the regularity
//! a-vector search, the two workloads the rayon feature targets.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use matreg::families::enumerate_all_matroids_opts;
use matreg::regularity::{a_top_search, Budget};
use matreg::Matroid;

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_all_matroids");
    for n in [4usize, 5] {
        for (label, parallel) in [("seq", false), ("par", true)] {
            group.bench_with_input(BenchmarkId::new(label, n), &n, |b, &n| {
                b.iter(|| enumerate_all_matroids_opts(n, parallel).unwrap().len())
            });
        }
    }
    group.finish();
}

fn bench_a_top(c: &mut Criterion) {
    let square =
        Matroid::from_bases(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap();
    let u25 = Matroid::uniform(2, 5).unwrap();
    let cases = [("square-t3", &square, 3u32), ("u25-t2", &u25, 2)];
    let mut group = c.benchmark_group("a_top_search");
    for (name, m, t) in cases {
        for (label, parallel) in [("seq", false), ("par", true)] {
            group.bench_with_input(BenchmarkId::new(label, name), &(), |b, _| {
                b.iter(|| {
                    a_top_search(m, t, 2, None, parallel, &Budget::unlimited())
                        .unwrap()
                        .value
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_enumeration, bench_a_top);
criterion_main!(benches);
