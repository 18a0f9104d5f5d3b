//! Algebra maps out of a free algebra and the default surjection between two
//! ordered primitive generating sets.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::opg::OrderedPrimGenSet;
use super::poly::{NcPoly, TensorElement};
use crate::error::FreeAlgError;
use crate::linalg::Matrix;
use crate::lyndon::{enumerate_words, GradedAlphabet, Letter, Word};

/// An algebra homomorphism `T(CX) → T(CY)`, fixed by the image of each letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    source: GradedAlphabet,
    target: GradedAlphabet,
    images: BTreeMap<Letter, NcPoly>,
}

impl AlgebraMap {
    pub fn new(
        source: &GradedAlphabet,
        target: &GradedAlphabet,
        images: BTreeMap<Letter, NcPoly>,
    ) -> Result<Self, FreeAlgError> {
        for (l, img) in &images {
            if !source.contains(*l) {
                return Err(FreeAlgError::Lyndon(crate::error::LyndonError::UnknownLetter {
                    degree: l.degree,
                    index: l.index,
                }));
            }
            if img.alphabet().letters() != target.letters() {
                return Err(FreeAlgError::AlphabetMismatch);
            }
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn source(&self) -> &GradedAlphabet {
        &self.source
    }

    pub fn target(&self) -> &GradedAlphabet {
        &self.target
    }

    pub fn image_of(&self, l: Letter) -> Option<&NcPoly> {
        self.images.get(&l)
    }

    pub fn apply_word(&self, w: &Word) -> Result<NcPoly, FreeAlgError> {
        let mut acc = NcPoly::one(&self.target);
        for l in w.letters() {
            let img = self.images.get(l).ok_or(FreeAlgError::DegreeOutOfRange {
                degree: l.degree,
                max: self.images.keys().map(|k| k.degree).max().unwrap_or(0),
            })?;
            acc = acc.mul_unchecked(img);
        }
        Ok(acc)
    }

    pub fn apply(&self, f: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        if f.alphabet().letters() != self.source.letters() {
            return Err(FreeAlgError::AlphabetMismatch);
        }
        let mut out = NcPoly::zero(&self.target);
        for (w, c) in f.terms() {
            out.add_scaled_unchecked(&self.apply_word(w)?, c);
        }
        Ok(out)
    }

    /// `(f ⊗ f)(t)`
    pub fn apply_tensor(&self, t: &TensorElement) -> Result<TensorElement, FreeAlgError> {
        let mut out = TensorElement::zero(&self.target);
        for ((l, r), c) in t.terms() {
            let fl = self.apply_word(l)?;
            let fr = self.apply_word(r)?;
            out = out.add(&TensorElement::tensor(&fl, &fr).scale(c));
        }
        Ok(out)
    }
}

/// The map `α_i^{(n)} ↦ β_i^{(n)}` for `i ≤ b_n` and `↦ 0` otherwise, as an
/// algebra map on the letters of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surjection {
    map: AlgebraMap,
    working_degree: usize,
}

// Product of generator elements indexed by the letters of `m`.
fn monomial(
    m: &Word,
    gens: &OrderedPrimGenSet,
    ambient: &GradedAlphabet,
) -> NcPoly {
    let mut acc = NcPoly::one(ambient);
    for l in m.letters() {
        match gens.degree(l.degree).get(l.index - 1) {
            Some(g) => acc = acc.mul_unchecked(g),
            None => return NcPoly::zero(ambient),
        }
    }
    acc
}

impl Surjection {
    pub fn new(host: &OrderedPrimGenSet, target: &OrderedPrimGenSet) -> Result<Self, FreeAlgError> {
        let working_degree = host.max_degree().min(target.max_degree());
        let a = host.counts();
        let b = target.counts();
        for n in 1..=working_degree {
            if a[n - 1] < b[n - 1] {
                return Err(FreeAlgError::NoSurjectionExists {
                    degree: n,
                    host: a[n - 1],
                    target: b[n - 1],
                });
            }
        }
        let h_alpha = host.alphabet().with_truncation(working_degree);
        let k_alpha = target.alphabet();
        let gen_alpha = GradedAlphabet::new(a[..working_degree].to_vec());

        let mut images = BTreeMap::new();
        for d in 1..=working_degree {
            let letters = h_alpha.letters_of_degree(d);
            if letters.is_empty() {
                continue;
            }
            let words = enumerate_words(&h_alpha, d)?;
            let monomials = enumerate_words(&gen_alpha, d)?;
            if monomials.len() != words.len() {
                return Err(FreeAlgError::Internal(format!(
                    "degree {d}: {} generator monomials for a {}-dimensional component",
                    monomials.len(),
                    words.len()
                )));
            }
            let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let mut phi = Matrix::zeros(words.len(), monomials.len());
            for (j, m) in monomials.iter().enumerate() {
                for (w, c) in monomial(m, host, host.alphabet()).terms() {
                    let Some(&i) = index.get(w) else {
                        return Err(FreeAlgError::Internal(format!(
                            "generator monomial {m} leaves degree {d}"
                        )));
                    };
                    phi[(i, j)] = c.clone();
                }
            }
            for l in letters {
                let mut rhs = vec![BigRational::zero(); words.len()];
                rhs[index[&Word::letter(l)]] = BigRational::one();
                let coeffs = phi.solve(&rhs).ok_or_else(|| {
                    FreeAlgError::Internal(format!(
                        "letter {l} is not expressible in the host generators"
                    ))
                })?;
                let mut img = NcPoly::zero(k_alpha);
                for (m, c) in monomials.iter().zip(&coeffs) {
                    if !c.is_zero() {
                        img.add_scaled_unchecked(&monomial(m, target, k_alpha), c);
                    }
                }
                images.insert(l, img);
            }
        }
        let map = AlgebraMap::new(&h_alpha, k_alpha, images)?;
        Ok(Self { map, working_degree })
    }

    pub fn working_degree(&self) -> usize {
        self.working_degree
    }

    pub fn map(&self) -> &AlgebraMap {
        &self.map
    }

    pub fn apply(&self, f: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        self.map.apply(f)
    }

    pub fn apply_tensor(&self, t: &TensorElement) -> Result<TensorElement, FreeAlgError> {
        self.map.apply_tensor(t)
    }
}

/// Builds the surjection determined by `host` and `target` and applies it to
/// `input`.
pub fn build_surjection(
    host: &OrderedPrimGenSet,
    target: &OrderedPrimGenSet,
    input: &NcPoly,
) -> Result<NcPoly, FreeAlgError> {
    Surjection::new(host, target)?.apply(input)
}
