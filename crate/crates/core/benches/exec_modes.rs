use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hopfseq::classify::enumerate_subalgebra_sequences_with;
use hopfseq::freealg::primitive_space_basis_with;
use hopfseq::lyndon::{enumerate_lyndon_with, GradedAlphabet};
use hopfseq::oracle::{direct_formula_oracle_with, OracleKind};
use hopfseq::{Execution, Sequence};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("literal_sum_oracle");
    let s = Sequence::from_ints([1, -2, 3, 0, 2, -1, 1, 3, -3, 2, 1, -1, 2, 0, 1, 1]);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "h_from_a n=16"), |b| {
            b.iter(|| direct_formula_oracle_with(exec, OracleKind::HFromA, black_box(&s), 16).unwrap())
        });
    }
    g.finish();
}

fn lyndon(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_lyndon");
    let alpha = GradedAlphabet::new(vec![3, 1, 1, 0, 0, 0, 0, 0, 0, 0]);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "(3,1,1) n=10"), |b| {
            b.iter(|| enumerate_lyndon_with(exec, black_box(&alpha), 10).unwrap())
        });
    }
    g.finish();
}

fn subalgebras(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_subalgebra_sequences");
    g.sample_size(10);
    let bell = Sequence::from_ints([1, 2, 5, 15, 52, 203]);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "Bell n=5"), |b| {
            b.iter(|| enumerate_subalgebra_sequences_with(exec, black_box(&bell), 5, 1_000_000).unwrap())
        });
    }
    g.finish();
}

fn primitives(c: &mut Criterion) {
    let mut g = c.benchmark_group("primitive_space_basis");
    g.sample_size(10);
    let alpha = GradedAlphabet::new(vec![2, 1, 0, 0, 0, 0, 0]);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "(2,1) n=7"), |b| {
            b.iter(|| primitive_space_basis_with(exec, black_box(&alpha), 7).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, oracle, lyndon, subalgebras, primitives);
criterion_main!(benches);
