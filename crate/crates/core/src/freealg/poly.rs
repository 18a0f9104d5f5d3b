use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::FreeAlgError;
use crate::linalg::SparseVec;
use crate::lyndon::{GradedAlphabet, Letter, Word};
use crate::seq::{fmt_rational, parse_rational};

/// A rational linear combination of words over a fixed graded alphabet: an
/// element of the tensor algebra `T(CX)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NcPoly {
    alphabet: GradedAlphabet,
    terms: BTreeMap<Word, BigRational>,
}

impl NcPoly {
    pub fn zero(alphabet: &GradedAlphabet) -> Self {
        Self {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &GradedAlphabet) -> Self {
        Self::from_word_unchecked(alphabet, Word::empty(), BigRational::one())
    }

    pub fn letter(alphabet: &GradedAlphabet, letter: Letter) -> Result<Self, FreeAlgError> {
        Self::from_word(alphabet, Word::letter(letter), BigRational::one())
    }

    pub fn from_word(
        alphabet: &GradedAlphabet,
        word: Word,
        coeff: BigRational,
    ) -> Result<Self, FreeAlgError> {
        word.check_in(alphabet)?;
        Ok(Self::from_word_unchecked(alphabet, word, coeff))
    }

    pub(crate) fn from_word_unchecked(
        alphabet: &GradedAlphabet,
        word: Word,
        coeff: BigRational,
    ) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(word, coeff);
        p
    }

    /// Builds from `(word, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(alphabet: &GradedAlphabet, terms: I) -> Result<Self, FreeAlgError>
    where
        I: IntoIterator<Item = (Word, BigRational)>,
    {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            w.check_in(alphabet)?;
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> &GradedAlphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees of the words that occur.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Word::degree).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// The common degree of a nonzero homogeneous element.
    pub fn degree(&self) -> Option<usize> {
        let d = self.degrees();
        if d.len() == 1 {
            d.into_iter().next()
        } else {
            None
        }
    }

    /// Degree `n` component.
    pub fn component(&self, n: usize) -> NcPoly {
        Self {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub(crate) fn add_scaled_unchecked(&mut self, other: &NcPoly, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(w.clone(), v * c);
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero(&self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    fn same_alphabet(&self, other: &NcPoly) -> Result<(), FreeAlgError> {
        if self.alphabet.letters() == other.alphabet.letters() {
            Ok(())
        } else {
            Err(FreeAlgError::AlphabetMismatch)
        }
    }

    pub fn add(&self, other: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        out.add_scaled_unchecked(other, &BigRational::one());
        Ok(out)
    }

    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        self.same_alphabet(other)?;
        let mut out = self.clone();
        out.add_scaled_unchecked(other, &-BigRational::one());
        Ok(out)
    }

    /// Concatenation product, extended bilinearly.
    pub fn mul(&self, other: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        self.same_alphabet(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn scale(&self, c: &BigRational) -> NcPoly {
        let mut out = NcPoly::zero(&self.alphabet);
        out.add_scaled_unchecked(self, c);
        out
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(&-BigRational::one())
    }

    /// `[f, g] = fg − gf`
    pub fn commutator(&self, other: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        self.same_alphabet(other)?;
        let mut out = self.mul_unchecked(other);
        out.add_scaled_unchecked(&other.mul_unchecked(self), &-BigRational::one());
        Ok(out)
    }

    pub(crate) fn to_sparse(&self) -> SparseVec<Word> {
        self.terms.clone()
    }

    /// Same terms, over an alphabet extended to truncation degree `len`.
    pub fn with_truncation(&self, len: usize) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet.with_truncation(len),
            terms: self.terms.clone(),
        }
    }

    /// Parses the text format `±c/d*g1_1.g1_2 ± …`.
    ///
    /// A term is `coefficient*word`, a bare word (coefficient 1) or a bare
    /// coefficient (multiple of the empty word). `0` is the zero element.
    /// Runs of signs combine, so `a + -2*b` is `a - 2*b`.
    pub fn parse(text: &str, alphabet: &GradedAlphabet) -> Result<NcPoly, FreeAlgError> {
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if cleaned.is_empty() {
            return Err(FreeAlgError::Parse("empty polynomial".into()));
        }
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in cleaned.char_indices() {
            if (ch == '+' || ch == '-') && !cleaned[..i].ends_with('*') {
                if current.is_empty() {
                    // leading or repeated sign, as in `a + -2*b`
                    negative ^= ch == '-';
                    continue;
                }
                chunks.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(FreeAlgError::Parse(format!("dangling sign in `{text}`")));
        }
        chunks.push((negative, current));

        let mut out = NcPoly::zero(alphabet);
        for (neg, body) in chunks {
            let (coeff, word) = match body.split_once('*') {
                Some((c, w)) => (
                    parse_rational(c)
                        .ok_or_else(|| FreeAlgError::Parse(format!("bad coefficient `{c}`")))?,
                    w.parse::<Word>()?,
                ),
                None if body.starts_with('g') => (BigRational::one(), body.parse::<Word>()?),
                None => (
                    parse_rational(&body)
                        .ok_or_else(|| FreeAlgError::Parse(format!("bad term `{body}`")))?,
                    Word::empty(),
                ),
            };
            word.check_in(alphabet)?;
            out.add_term(word, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

fn write_terms<'a, K, I>(f: &mut fmt::Formatter<'_>, terms: I, render: impl Fn(&K) -> String) -> fmt::Result
where
    K: 'a,
    I: Iterator<Item = (&'a K, &'a BigRational)>,
{
    let mut first = true;
    for (key, c) in terms {
        let body = render(key);
        let mag = c.abs();
        let coeff = fmt_rational(&mag);
        let text = if body.is_empty() {
            coeff
        } else if mag.is_one() {
            body
        } else {
            format!("{coeff}*{body}")
        };
        match (first, c.is_negative()) {
            (true, false) => write!(f, "{text}")?,
            (true, true) => write!(f, "-{text}")?,
            (false, false) => write!(f, " + {text}")?,
            (false, true) => write!(f, " - {text}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter(), |w: &Word| w.to_string())
    }
}

/// A rational linear combination of pairs of words: an element of `H ⊗ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    alphabet: GradedAlphabet,
    terms: BTreeMap<(Word, Word), BigRational>,
}

impl TensorElement {
    pub fn zero(alphabet: &GradedAlphabet) -> Self {
        Self {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> &GradedAlphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &Word, right: &Word) -> BigRational {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
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

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> TensorElement {
        let mut out = TensorElement::zero(&self.alphabet);
        for ((l, r), v) in &self.terms {
            out.add_term(l.clone(), r.clone(), v * c);
        }
        out
    }

    /// `f ⊗ g`
    pub fn tensor(f: &NcPoly, g: &NcPoly) -> TensorElement {
        let mut out = TensorElement::zero(f.alphabet());
        for (u, a) in f.terms() {
            for (v, b) in g.terms() {
                out.add_term(u.clone(), v.clone(), a * b);
            }
        }
        out
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(&self.alphabet);
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                out.add_term(a.concat(c), b.concat(d), x * y);
            }
        }
        out
    }

    /// `a ⊗ b ↦ b ⊗ a`
    pub fn swap(&self) -> TensorElement {
        let mut out = TensorElement::zero(&self.alphabet);
        for ((a, b), c) in &self.terms {
            out.add_term(b.clone(), a.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |(l, r): &(Word, Word)| {
            let side = |w: &Word| if w.is_empty() { "1".to_string() } else { w.to_string() };
            format!("{} ⊗ {}", side(l), side(r))
        };
        write_terms(f, self.terms.iter(), render)
    }
}
