use std::hint::black_box;
use std::sync::Arc;

use chainring::gray::GrayMap;
use chainring::weights::{empirical_distribution, empirical_distribution_parallel, gray_image_distribution};
use chainring::{CodeFamily, Limits, Ring, RingSpec, SimplexCode, WeightKind};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn code(spec: RingSpec, family: CodeFamily, k: u32) -> SimplexCode {
    SimplexCode::new(Arc::new(Ring::new(spec).unwrap()), family, k, &Limits::default()).unwrap()
}

fn distributions(c: &mut Criterion) {
    let l = Limits::default();
    let mut group = c.benchmark_group("hamming_distribution");
    for (name, spec, k) in [
        ("Z4 k=4", RingSpec::zps(2, 2), 4),
        ("Z9 k=3", RingSpec::zps(3, 2), 3),
        ("GR(4,2) k=3", RingSpec::galois(2, 2, 2), 3),
    ] {
        let alpha = code(spec, CodeFamily::Alpha, k);
        group.bench_with_input(BenchmarkId::new("sequential", name), &alpha, |b, c| {
            b.iter(|| empirical_distribution(black_box(c), WeightKind::Hamming, &l).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel4", name), &alpha, |b, c| {
            b.iter(|| empirical_distribution_parallel(black_box(c), WeightKind::Hamming, &l, 4).unwrap())
        });
    }
    group.finish();
}

fn gray(c: &mut Criterion) {
    let l = Limits::default();
    let beta = code(RingSpec::zps(2, 3), CodeFamily::Beta, 3);
    c.bench_function("gray_image Z8 beta k=3", |b| b.iter(|| gray_image_distribution(black_box(&beta), &l).unwrap()));
    let ring = Ring::new(RingSpec::galois(2, 3, 3)).unwrap();
    let map = GrayMap::new(&ring);
    c.bench_function("gray_map GR(8,3) all elements", |b| {
        b.iter(|| ring.elements().map(|x| map.map(black_box(x)).len()).sum::<usize>())
    });
}

fn construction(c: &mut Criterion) {
    let l = Limits::default();
    let ring = Arc::new(Ring::new(RingSpec::zps(3, 2)).unwrap());
    c.bench_function("beta matrix Z9 k=5", |b| {
        b.iter(|| chainring::GeneratorMatrix::beta(black_box(&ring), 5, &l).unwrap())
    });
}

criterion_group!(benches, distributions, gray, construction);
criterion_main!(benches);
