//! Explicit Hopf subalgebras of `U(L(a))` with a prescribed generator sequence.
//!
//! The subalgebra is grown one degree at a time. At degree `n` the derived
//! part `[L, L]_n` of the Lie algebra generated so far is spanned by brackets
//! of lower-degree basis elements; the new generators are the first primitive
//! basis elements that are independent of it.

use num_rational::BigRational;

use super::hopf::primitive_space_basis;
use super::opg::OrderedPrimGenSet;
use super::poly::NcPoly;
use crate::error::FreeAlgError;
use crate::linalg::EchelonSpan;
use crate::lyndon::{enumerate_words, GradedAlphabet, Word};
use crate::seq::{fmt_rational, Sequence};
use crate::transform::{a_to_p, invert};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// Generators of the subalgebra, inside the host.
    pub generators: OrderedPrimGenSet,
    /// Graded dimensions of the generated subalgebra, computed by spanning.
    pub dims: Sequence,
    /// Basis sizes of the generated Lie algebra per degree.
    pub lie_dims: Vec<usize>,
}

fn counts_of(s: &Sequence, name: &str, max_degree: usize) -> Result<Vec<usize>, FreeAlgError> {
    if s.len() < max_degree {
        return Err(FreeAlgError::DegreeOutOfRange {
            degree: max_degree,
            max: s.len(),
        });
    }
    s.truncated(max_degree)
        .to_counts()
        .ok_or_else(|| FreeAlgError::InvalidSequence(format!("{name} must be a nonnegative integer sequence, got {s}")))
}

/// Builds generators of a Hopf subalgebra of `U(L(host_a))` isomorphic to
/// `U(L(target_b))`, up to `max_degree`.
pub fn embed_subalgebra(
    host_a: &Sequence,
    target_b: &Sequence,
    max_degree: usize,
) -> Result<Embedding, FreeAlgError> {
    let a = counts_of(host_a, "host", max_degree)?;
    let b = counts_of(target_b, "target", max_degree)?;
    let host_p = a_to_p(&host_a.truncated(max_degree));
    let target_q = a_to_p(&target_b.truncated(max_degree));
    if let Some(n) = target_q.first_exceeding(&host_p) {
        return Err(FreeAlgError::NoEmbeddingExists {
            degree: n,
            host: fmt_rational(host_p.at(n)),
            target: fmt_rational(target_q.at(n)),
        });
    }

    let alphabet = GradedAlphabet::new(a);
    let mut lie_basis: Vec<Vec<NcPoly>> = Vec::with_capacity(max_degree);
    let mut generators: Vec<Vec<NcPoly>> = Vec::with_capacity(max_degree);
    for n in 1..=max_degree {
        let mut span: EchelonSpan<Word> = EchelonSpan::new();
        let mut basis_n = Vec::new();
        for i in 1..=n / 2 {
            let j = n - i;
            for (s, u) in lie_basis[i - 1].iter().enumerate() {
                let start = if i == j { s + 1 } else { 0 };
                for v in &lie_basis[j - 1][start..] {
                    let bracket = u.commutator(v)?;
                    if span.insert(&bracket.to_sparse()) {
                        basis_n.push(bracket);
                    }
                }
            }
        }
        let mut chosen = Vec::with_capacity(b[n - 1]);
        if b[n - 1] > 0 {
            for prim in primitive_space_basis(&alphabet, n)? {
                if chosen.len() == b[n - 1] {
                    break;
                }
                if span.insert(&prim.to_sparse()) {
                    chosen.push(prim);
                }
            }
            if chosen.len() < b[n - 1] {
                return Err(FreeAlgError::Internal(format!(
                    "degree {n}: only {} primitives independent of the derived part, need {}",
                    chosen.len(),
                    b[n - 1]
                )));
            }
        }
        basis_n.extend(chosen.iter().cloned());
        lie_basis.push(basis_n);
        generators.push(chosen);
    }

    let generators = OrderedPrimGenSet::new(&alphabet, generators);
    let dims = generated_dimensions(&generators, max_degree)?;
    let expected = invert(&target_b.truncated(max_degree));
    if dims != expected {
        return Err(FreeAlgError::Internal(format!(
            "generated subalgebra has dimensions {dims}, expected {expected}"
        )));
    }
    Ok(Embedding {
        lie_dims: lie_basis.iter().map(Vec::len).collect(),
        generators,
        dims,
    })
}

/// Dimensions of the subalgebra generated by `gens`, degree by degree, from
/// the span of all generator monomials.
pub fn generated_dimensions(gens: &OrderedPrimGenSet, max_degree: usize) -> Result<Sequence, FreeAlgError> {
    let gen_alpha = GradedAlphabet::new(
        (1..=max_degree).map(|d| gens.degree(d).len()).collect(),
    );
    let mut dims = Vec::with_capacity(max_degree);
    for n in 1..=max_degree {
        let mut span: EchelonSpan<Word> = EchelonSpan::new();
        for m in enumerate_words(&gen_alpha, n)? {
            let mut acc = NcPoly::one(gens.alphabet());
            for l in m.letters() {
                acc = acc.mul_unchecked(&gens.degree(l.degree)[l.index - 1]);
            }
            span.insert(&acc.to_sparse());
        }
        dims.push(BigRational::from_integer(span.dim().into()));
    }
    Ok(Sequence::new(dims))
}
