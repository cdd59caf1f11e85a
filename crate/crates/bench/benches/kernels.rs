use bruhatkit::colmat::TriangularMatrix;
use bruhatkit::decomp::bruhat_decompose;
use bruhatkit::oracle::{enumerate_sn, random_invertible, random_upper_triangular};
use bruhatkit::permutation::bruhat_leq;
use bruhatkit::scalar::Ring;
use bruhatkit::schubert::y_sigma_contains;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bruhat_order(c: &mut Criterion) {
    let s5 = enumerate_sn(5).unwrap();
    c.bench_function("bruhat_leq all S_5 pairs", |b| {
        b.iter(|| {
            s5.iter()
                .flat_map(|s| s5.iter().map(move |t| (s, t)))
                .filter(|(s, t)| bruhat_leq(s, t).unwrap())
                .count()
        })
    });
}

fn decomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("bruhat_decompose");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (name, ring) in [("Q", Ring::Rationals), ("F101", Ring::PrimeField(101))] {
        for n in [4, 8, 12] {
            let g = random_invertible(ring, n, &mut rng);
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| bruhat_decompose(black_box(g)).unwrap())
            });
        }
    }
    group.finish();
}

fn triangular_inverse(c: &mut Criterion) {
    let mut group = c.benchmark_group("triangular_inverse");
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in [4, 8, 12] {
        let m = random_upper_triangular(Ring::Rationals, n, false, &mut rng);
        let t = TriangularMatrix::try_from(m).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &t, |b, t| {
            b.iter(|| t.triangular_inverse().unwrap())
        });
    }
    group.finish();
}

fn closure_membership(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let ring = Ring::PrimeField(5);
    let g = random_invertible(ring, 5, &mut rng);
    let s5 = enumerate_sn(5).unwrap();
    c.bench_function("y_sigma_contains S_5 x one F_5 matrix", |b| {
        b.iter(|| s5.iter().filter(|s| y_sigma_contains(s, &g).unwrap()).count())
    });
}

criterion_group!(benches, bruhat_order, decomposition, triangular_inverse, closure_membership);
criterion_main!(benches);
