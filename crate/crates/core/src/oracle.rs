//! Literal composition and partition sums for the `(h, a, p)` triple.
//!
//! These evaluate the closed sums term by term over every composition or
//! partition of `n`. They are exponential in `n` and exist to check the
//! recurrences in [`crate::transform`]; nothing in the production path calls
//! them. The Möbius function here is computed from its defining divisor sum
//! rather than by factorization, so it shares no code with the transforms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::SeqError;
use crate::par::{self, Execution};
use crate::seq::{enumerate_compositions, enumerate_partitions, Composition, Sequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleKind {
    /// `h_n = Σ_{β⊨n} a_β`
    HFromA,
    /// `a_n = Σ_{β⊨n} (−1)^{ℓ(β)−1} h_β`
    AFromH,
    /// `h_n = Σ_{λ⊢n} Π_d C(p_d + m_d(λ) − 1, m_d(λ))`
    HFromP,
    /// `a_n = Σ_{λ⊢n} (−1)^{ℓ(λ)−1} Π_d C(p_d, m_d(λ))`
    AFromP,
    /// `p_n = Σ_{d|n} Σ_{β⊨d} d·μ(n/d)·(−1)^{ℓ(β)−1} / (n·ℓ(β)) · h_β`
    PFromH,
    /// `p_n = Σ_{d|n} Σ_{β⊨d} d·μ(n/d) / (n·ℓ(β)) · a_β`
    PFromA,
}

/// `μ(n)` from `Σ_{d|n} μ(d) = [n = 1]`.
fn mobius_by_divisor_sum(n: usize) -> i64 {
    let mut mu = vec![0i64; n + 1];
    mu[1] = 1;
    for k in 2..=n {
        mu[k] = -(1..k).filter(|d| k % d == 0).map(|d| mu[d]).sum::<i64>();
    }
    mu[n]
}

/// Generalized binomial `C(x, m) = x(x−1)⋯(x−m+1) / m!` for rational `x`.
fn binomial(x: &BigRational, m: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..m {
        let i = BigRational::from_integer(BigInt::from(i));
        acc = acc * (x - &i) / (&i + BigRational::one());
    }
    acc
}

fn sign(len: usize) -> BigRational {
    if len % 2 == 1 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn composition_sum<F>(exec: Execution, n: usize, term: F) -> BigRational
where
    F: Fn(&Composition) -> BigRational + Sync + Send,
{
    let comps = enumerate_compositions(n);
    par::map(exec, &comps, term)
        .into_iter()
        .fold(BigRational::zero(), |acc, t| acc + t)
}

/// Evaluates entry `n` of the sequence of type `kind` from `input` by the
/// literal sums.
pub fn direct_formula_oracle(
    kind: OracleKind,
    input: &Sequence,
    n: usize,
) -> Result<BigRational, SeqError> {
    direct_formula_oracle_with(Execution::default(), kind, input, n)
}

pub fn direct_formula_oracle_with(
    exec: Execution,
    kind: OracleKind,
    input: &Sequence,
    n: usize,
) -> Result<BigRational, SeqError> {
    if n == 0 || n > input.len() {
        return Err(SeqError::DegreeOutOfRange {
            n,
            len: input.len(),
        });
    }
    let value = match kind {
        OracleKind::HFromA => composition_sum(exec, n, |b| b.product_of(input)),
        OracleKind::AFromH => {
            composition_sum(exec, n, |b| sign(b.length()) * b.product_of(input))
        }
        OracleKind::HFromP => enumerate_partitions(n)
            .iter()
            .map(|lambda| {
                lambda
                    .multiplicities()
                    .iter()
                    .fold(BigRational::one(), |acc, &(d, m)| {
                        let top = input.at(d) + BigRational::from_integer(BigInt::from(m))
                            - BigRational::one();
                        acc * binomial(&top, m)
                    })
            })
            .fold(BigRational::zero(), |acc, t| acc + t),
        OracleKind::AFromP => enumerate_partitions(n)
            .iter()
            .map(|lambda| {
                sign(lambda.length())
                    * lambda
                        .multiplicities()
                        .iter()
                        .fold(BigRational::one(), |acc, &(d, m)| {
                            acc * binomial(input.at(d), m)
                        })
            })
            .fold(BigRational::zero(), |acc, t| acc + t),
        OracleKind::PFromH | OracleKind::PFromA => {
            let alternating = kind == OracleKind::PFromH;
            let mut total = BigRational::zero();
            for d in (1..=n).filter(|d| n % d == 0) {
                let mu = mobius_by_divisor_sum(n / d);
                if mu == 0 {
                    continue;
                }
                let inner = composition_sum(exec, d, |b| {
                    let weight = BigRational::new(
                        BigInt::from(d as i64 * mu),
                        BigInt::from(n * b.length()),
                    );
                    let s = if alternating {
                        sign(b.length())
                    } else {
                        BigRational::one()
                    };
                    weight * s * b.product_of(input)
                });
                total += inner;
            }
            total
        }
    };
    Ok(value)
}

/// The first `len` entries of the oracle sequence.
pub fn oracle_sequence(kind: OracleKind, input: &Sequence, len: usize) -> Result<Sequence, SeqError> {
    (1..=len)
        .map(|n| direct_formula_oracle(kind, input, n))
        .collect::<Result<Vec<_>, _>>()
        .map(Sequence::new)
}
