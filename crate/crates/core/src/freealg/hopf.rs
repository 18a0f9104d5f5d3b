//! Hopf structure of `U(L(a)) = T(CX_a)` with every letter primitive.
//!
//! The coproduct of a word is the sum over all ways of splitting its
//! positions into a left and right subword (the unshuffle coproduct).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{NcPoly, TensorElement};
use crate::error::FreeAlgError;
use crate::linalg::{EchelonSpan, SparseVec};
use crate::lyndon::{enumerate_lyndon, enumerate_words, lyndon_bracketing, GradedAlphabet, LyndonBracket, Word};
use crate::par::{self, Execution};

fn split_by_mask(w: &Word, mask: u64) -> (Word, Word) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i, &l) in w.letters().iter().enumerate() {
        if mask >> i & 1 == 1 {
            left.push(l);
        } else {
            right.push(l);
        }
    }
    (Word::new(left), Word::new(right))
}

fn word_splits(w: &Word, reduced: bool) -> impl Iterator<Item = (Word, Word)> + '_ {
    assert!(w.len() < 64, "word too long for subset enumeration");
    let full = (1u64 << w.len()) - 1;
    (0..=full)
        .filter(move |&m| !reduced || (m != 0 && m != full))
        .map(move |m| split_by_mask(w, m))
}

/// `Δ(w) = Σ_S w|_S ⊗ w|_{S^c}` over position subsets, extended linearly.
pub fn coproduct(f: &NcPoly) -> TensorElement {
    let mut out = TensorElement::zero(f.alphabet());
    for (w, c) in f.terms() {
        for (l, r) in word_splits(w, false) {
            out.add_term(l, r, c.clone());
        }
    }
    out
}

/// `Δ₊(f) = Δ(f) − f ⊗ 1 − 1 ⊗ f` on elements without constant term.
///
/// A constant term `c` contributes `−c·1⊗1`, matching the formula.
pub fn reduced_coproduct(f: &NcPoly) -> TensorElement {
    let mut out = TensorElement::zero(f.alphabet());
    for (w, c) in f.terms() {
        if w.is_empty() {
            out.add_term(Word::empty(), Word::empty(), -c.clone());
            continue;
        }
        for (l, r) in word_splits(w, true) {
            out.add_term(l, r, c.clone());
        }
    }
    out
}

pub fn is_primitive(f: &NcPoly) -> bool {
    reduced_coproduct(f).is_zero()
}

/// A linear combination of `k`-fold tensors of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiTensor {
    alphabet: GradedAlphabet,
    terms: BTreeMap<Vec<Word>, BigRational>,
}

impl MultiTensor {
    pub fn from_poly(f: &NcPoly) -> Self {
        Self {
            alphabet: f.alphabet().clone(),
            terms: f
                .terms()
                .iter()
                .map(|(w, c)| (vec![w.clone()], c.clone()))
                .collect(),
        }
    }

    pub fn from_tensor(t: &TensorElement) -> Self {
        Self {
            alphabet: t.alphabet().clone(),
            terms: t
                .terms()
                .iter()
                .map(|((l, r), c)| (vec![l.clone(), r.clone()], c.clone()))
                .collect(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: Vec<Word>, c: BigRational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn apply_at(&self, position: usize, reduced: bool) -> MultiTensor {
        let mut out = MultiTensor {
            alphabet: self.alphabet.clone(),
            terms: BTreeMap::new(),
        };
        for (key, c) in &self.terms {
            let w = &key[position];
            if reduced && w.is_empty() {
                continue;
            }
            for (l, r) in word_splits(w, reduced) {
                let mut next = Vec::with_capacity(key.len() + 1);
                next.extend_from_slice(&key[..position]);
                next.push(l);
                next.push(r);
                next.extend_from_slice(&key[position + 1..]);
                out.add_term(next, c.clone());
            }
        }
        out
    }

    /// Applies `Δ` to the tensor factor at `position`.
    pub fn coproduct_at(&self, position: usize) -> MultiTensor {
        self.apply_at(position, false)
    }

    /// Applies `Δ₊` to the tensor factor at `position`.
    pub fn reduced_coproduct_at(&self, position: usize) -> MultiTensor {
        self.apply_at(position, true)
    }

    /// Multiplies all factors left to right.
    pub fn multiply_all(&self) -> NcPoly {
        let mut out = NcPoly::zero(&self.alphabet);
        for (key, c) in &self.terms {
            let w = key.iter().fold(Word::empty(), |acc, w| acc.concat(w));
            out.add_term(w, c.clone());
        }
        out
    }
}

/// The Eulerian idempotent
/// `e(f) = f − ½ μΔ₊(f) + ⅓ μ^{(2)}Δ₊^{(2)}(f) − ⋯`.
///
/// `Δ₊^{(k)}` applies `Δ₊` to the last factor of `Δ₊^{(k−1)}`, and
/// `μ^{(k)}` multiplies the `k + 1` factors left to right. On a degree-`n`
/// component the series stops after `n` terms.
pub fn eulerian_idempotent(f: &NcPoly) -> Result<NcPoly, FreeAlgError> {
    let degrees = f.degrees();
    if degrees.contains(&0) {
        return Err(FreeAlgError::DegreeZeroComponent);
    }
    let mut out = NcPoly::zero(f.alphabet());
    for n in degrees {
        let mut iterated = MultiTensor::from_poly(&f.component(n));
        let mut k = 0usize;
        while !iterated.is_zero() {
            let weight = BigRational::new(
                BigInt::from(if k % 2 == 0 { 1 } else { -1 }),
                BigInt::from(k + 1),
            );
            out.add_scaled_unchecked(&iterated.multiply_all(), &weight);
            let last = k;
            iterated = iterated.reduced_coproduct_at(last);
            k += 1;
        }
        debug_assert!(k <= n);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum KernelKey {
    Image(Word, Word),
    Source(Word),
}

/// Basis of the primitives `P(H)_n = ker(Δ₊ : H_n → H ⊗ H)`.
///
/// Columns (words of degree `n`) are reduced in lexicographic order against
/// their images; a column whose image falls in the span of earlier ones
/// yields one kernel vector.
pub fn primitive_space_basis(alphabet: &GradedAlphabet, n: usize) -> Result<Vec<NcPoly>, FreeAlgError> {
    primitive_space_basis_with(Execution::default(), alphabet, n)
}

pub fn primitive_space_basis_with(
    exec: Execution,
    alphabet: &GradedAlphabet,
    n: usize,
) -> Result<Vec<NcPoly>, FreeAlgError> {
    let words = enumerate_words(alphabet, n)?;
    let columns: Vec<SparseVec<KernelKey>> = par::map(exec, &words, |w| {
        let mut v: SparseVec<KernelKey> = SparseVec::new();
        for (l, r) in word_splits(w, true) {
            *v.entry(KernelKey::Image(l, r)).or_insert_with(BigRational::zero) += BigRational::one();
        }
        v.insert(KernelKey::Source(w.clone()), BigRational::one());
        v
    });
    let mut span = EchelonSpan::new();
    let mut basis = Vec::new();
    for col in &columns {
        let rem = span.reduce(col);
        let image_free = rem.keys().all(|k| matches!(k, KernelKey::Source(_)));
        if image_free {
            let mut element = NcPoly::zero(alphabet);
            for (k, c) in rem {
                if let KernelKey::Source(w) = k {
                    element.add_term(w, c);
                }
            }
            basis.push(normalize(element));
        } else {
            span.insert(&rem);
        }
    }
    Ok(basis)
}

// Scales so the lexicographically first word has coefficient 1.
fn normalize(f: NcPoly) -> NcPoly {
    match f.terms().values().next() {
        Some(c) if !c.is_one() => {
            let inv = c.recip();
            f.scale(&inv)
        }
        _ => f,
    }
}

/// Evaluates a bracketing as nested commutators `[u, v] = uv − vu`.
pub fn evaluate_bracket(alphabet: &GradedAlphabet, b: &LyndonBracket) -> NcPoly {
    match b {
        LyndonBracket::Leaf(l) => NcPoly::from_word_unchecked(alphabet, Word::letter(*l), BigRational::one()),
        LyndonBracket::Node(u, v) => {
            let u = evaluate_bracket(alphabet, u);
            let v = evaluate_bracket(alphabet, v);
            let mut out = u.mul_unchecked(&v);
            out.add_scaled_unchecked(&v.mul_unchecked(&u), &-BigRational::one());
            out
        }
    }
}

/// Bracketed Lyndon words of degree `n`, paired with their words, in
/// lexicographic order.
pub fn lyndon_lie_basis_with_words(
    alphabet: &GradedAlphabet,
    n: usize,
) -> Result<Vec<(Word, NcPoly)>, FreeAlgError> {
    enumerate_lyndon(alphabet, n)?
        .into_iter()
        .map(|w| {
            let b = lyndon_bracketing(&w)?;
            Ok((w, evaluate_bracket(alphabet, &b)))
        })
        .collect()
}

/// Bracketed Lyndon words of degree `n` as commutator polynomials.
pub fn lyndon_lie_basis(alphabet: &GradedAlphabet, n: usize) -> Result<Vec<NcPoly>, FreeAlgError> {
    Ok(lyndon_lie_basis_with_words(alphabet, n)?
        .into_iter()
        .map(|(_, p)| p)
        .collect())
}

/// The part of [`lyndon_lie_basis`] coming from words of length at least two:
/// the fixed ordered basis of the derived subalgebra `[P, P]_n`.
pub fn derived_basis(alphabet: &GradedAlphabet, n: usize) -> Result<Vec<NcPoly>, FreeAlgError> {
    Ok(lyndon_lie_basis_with_words(alphabet, n)?
        .into_iter()
        .filter(|(w, _)| w.len() >= 2)
        .map(|(_, p)| p)
        .collect())
}

/// Echelon span of `(H₊²)_n`: all products `u·v` of words with
/// `deg u + deg v = n` and both degrees positive.
pub fn decomposable_span(alphabet: &GradedAlphabet, n: usize) -> Result<EchelonSpan<Word>, FreeAlgError> {
    let mut span = EchelonSpan::new();
    for i in 1..n {
        let left = enumerate_words(alphabet, i)?;
        let right = enumerate_words(alphabet, n - i)?;
        for u in &left {
            for v in &right {
                let mut vec = SparseVec::new();
                vec.insert(u.concat(v), BigRational::one());
                span.insert(&vec);
            }
        }
    }
    Ok(span)
}
