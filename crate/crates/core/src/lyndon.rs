//! Graded alphabets, words, and Lyndon words.
//!
//! Letters are ordered by `(degree, index)`, and words lexicographically with
//! a proper prefix sorting first. Lyndon enumeration extends prenecklaces one
//! letter at a time (the Fredricksen–Kessler–Maiorana rule) and prunes on the
//! remaining degree, so it never materializes the full word set.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::LyndonError;
use crate::par::{self, Execution};
use crate::seq::Sequence;

/// A letter `g<degree>_<index>`; indices start at 1 within each degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub degree: usize,
    pub index: usize,
}

impl Letter {
    pub const fn new(degree: usize, index: usize) -> Self {
        Self { degree, index }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}_{}", self.degree, self.index)
    }
}

impl FromStr for Letter {
    type Err = LyndonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LyndonError::Parse(s.to_string());
        let rest = s.trim().strip_prefix('g').ok_or_else(bad)?;
        let (d, i) = rest.split_once('_').ok_or_else(bad)?;
        let degree: usize = d.parse().map_err(|_| bad())?;
        let index: usize = i.parse().map_err(|_| bad())?;
        if degree == 0 || index == 0 {
            return Err(bad());
        }
        Ok(Letter { degree, index })
    }
}

/// Letter counts per degree: `counts[d − 1]` letters of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedAlphabet {
    counts: Vec<usize>,
}

impl GradedAlphabet {
    pub fn new(counts: Vec<usize>) -> Self {
        Self { counts }
    }

    pub fn from_sequence(s: &Sequence) -> Result<Self, LyndonError> {
        s.to_counts()
            .map(Self::new)
            .ok_or_else(|| LyndonError::InvalidAlphabet(s.to_string()))
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count_sequence(&self) -> Sequence {
        Sequence::from_ints(self.counts.iter().map(|&c| c as u64))
    }

    pub fn truncation_degree(&self) -> usize {
        self.counts.len()
    }

    /// Number of letters of degree `d` (0 beyond the truncation degree).
    pub fn count(&self, degree: usize) -> usize {
        if degree == 0 {
            0
        } else {
            self.counts.get(degree - 1).copied().unwrap_or(0)
        }
    }

    /// Same letters, truncation degree extended (with zero counts) or cut to `len`.
    pub fn with_truncation(&self, len: usize) -> Self {
        let mut counts = self.counts.clone();
        counts.resize(len, 0);
        Self { counts }
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index >= 1 && letter.index <= self.count(letter.degree)
    }

    /// All letters in canonical order.
    pub fn letters(&self) -> Vec<Letter> {
        self.letters_up_to(self.counts.len())
    }

    pub fn letters_up_to(&self, max_degree: usize) -> Vec<Letter> {
        (1..=max_degree.min(self.counts.len()))
            .flat_map(|d| (1..=self.count(d)).map(move |i| Letter::new(d, i)))
            .collect()
    }

    pub fn letters_of_degree(&self, degree: usize) -> Vec<Letter> {
        (1..=self.count(degree))
            .map(|i| Letter::new(degree, i))
            .collect()
    }

    fn check_degree(&self, n: usize) -> Result<(), LyndonError> {
        if n > self.counts.len() {
            Err(LyndonError::DegreeOutOfRange {
                n,
                len: self.counts.len(),
            })
        } else {
            Ok(())
        }
    }
}

impl FromStr for GradedAlphabet {
    type Err = LyndonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let seq: Sequence = s
            .parse()
            .map_err(|_| LyndonError::InvalidAlphabet(s.to_string()))?;
        Self::from_sequence(&seq)
    }
}

/// A finite string of graded letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Self(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|l| l.degree).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `cyc^k(w)`: move the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            v.rotate_left(k % self.0.len());
        }
        Word(v)
    }

    /// `w[start..end]`
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn check_in(&self, alphabet: &GradedAlphabet) -> Result<(), LyndonError> {
        match self.0.iter().find(|l| !alphabet.contains(**l)) {
            Some(l) => Err(LyndonError::UnknownLetter {
                degree: l.degree,
                index: l.index,
            }),
            None => Ok(()),
        }
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = LyndonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split('.')
            .map(str::parse)
            .collect::<Result<Vec<Letter>, _>>()
            .map(Word)
    }
}

/// True iff `w` is strictly smaller than each of its nontrivial rotations.
pub fn is_lyndon(w: &Word) -> Result<bool, LyndonError> {
    if w.is_empty() {
        return Err(LyndonError::EmptyWord);
    }
    Ok((1..w.len()).all(|k| *w < w.rotate(k)))
}

/// Number of words of degree `n`, by dynamic programming over the first letter.
pub fn count_words(alphabet: &GradedAlphabet, n: usize) -> Result<BigInt, LyndonError> {
    alphabet.check_degree(n)?;
    let mut table: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    table[0] = BigInt::from(1);
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for d in 1..=m {
            let c = alphabet.count(d);
            if c > 0 {
                acc += &table[m - d] * c;
            }
        }
        table[m] = acc;
    }
    Ok(table[n].clone())
}

/// Every word of degree `n`, in lexicographic order.
pub fn enumerate_words(alphabet: &GradedAlphabet, n: usize) -> Result<Vec<Word>, LyndonError> {
    alphabet.check_degree(n)?;
    let letters = alphabet.letters_up_to(n);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(letters: &[Letter], remaining: usize, current: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word(current.clone()));
            return;
        }
        for &l in letters {
            if l.degree <= remaining {
                current.push(l);
                rec(letters, remaining - l.degree, current, out);
                current.pop();
            }
        }
    }
    if n > 0 {
        rec(&letters, n, &mut current, &mut out);
    }
    Ok(out)
}

/// Every Lyndon word of degree `n`, in lexicographic order.
pub fn enumerate_lyndon(alphabet: &GradedAlphabet, n: usize) -> Result<Vec<Word>, LyndonError> {
    enumerate_lyndon_with(Execution::default(), alphabet, n)
}

pub fn enumerate_lyndon_with(
    exec: Execution,
    alphabet: &GradedAlphabet,
    n: usize,
) -> Result<Vec<Word>, LyndonError> {
    alphabet.check_degree(n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let letters = alphabet.letters_up_to(n);
    Ok(par::flat_map(exec, &letters, |&first| {
        let mut out = Vec::new();
        let mut current = vec![first];
        extend_prenecklace(&letters, n - first.degree, 1, &mut current, &mut out);
        out
    }))
}

// `current` is a prenecklace whose longest Lyndon prefix has length `period`.
fn extend_prenecklace(
    letters: &[Letter],
    remaining: usize,
    period: usize,
    current: &mut Vec<Letter>,
    out: &mut Vec<Word>,
) {
    if remaining == 0 {
        if period == current.len() {
            out.push(Word(current.clone()));
        }
        return;
    }
    let reference = current[current.len() - period];
    for &l in letters {
        if l.degree > remaining || l < reference {
            continue;
        }
        let next_period = if l == reference {
            period
        } else {
            current.len() + 1
        };
        current.push(l);
        extend_prenecklace(letters, remaining - l.degree, next_period, current, out);
        current.pop();
    }
}

/// Lyndon words of length `2n` over `{0 < 1}` with exactly `n` of each letter,
/// counted by filtering all balanced words.
pub fn count_balanced_binary_lyndon(n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    let zero = Letter::new(1, 1);
    let one = Letter::new(1, 2);
    let mut count = 0u64;
    let mut current = Vec::with_capacity(2 * n);
    fn rec(
        zeros: usize,
        ones: usize,
        zero: Letter,
        one: Letter,
        current: &mut Vec<Letter>,
        count: &mut u64,
    ) {
        if zeros == 0 && ones == 0 {
            let w = Word(current.clone());
            if is_lyndon(&w).unwrap_or(false) {
                *count += 1;
            }
            return;
        }
        if zeros > 0 {
            current.push(zero);
            rec(zeros - 1, ones, zero, one, current, count);
            current.pop();
        }
        if ones > 0 {
            current.push(one);
            rec(zeros, ones - 1, zero, one, current, count);
            current.pop();
        }
    }
    rec(n, n, zero, one, &mut current, &mut count);
    count
}

/// `w = uv` with `v` the longest proper Lyndon suffix of `w`.
pub fn standard_factorization(w: &Word) -> Result<(Word, Word), LyndonError> {
    if !is_lyndon(w)? {
        return Err(LyndonError::NotLyndon(w.to_string()));
    }
    if w.len() < 2 {
        return Err(LyndonError::TooShort(w.to_string()));
    }
    for split in 1..w.len() {
        let suffix = w.slice(split, w.len());
        if is_lyndon(&suffix)? {
            return Ok((w.slice(0, split), suffix));
        }
    }
    // the last letter is always a Lyndon suffix
    unreachable!("a word of length >= 2 has a one-letter Lyndon suffix")
}

/// Binary bracketing of a Lyndon word by recursive standard factorization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LyndonBracket {
    Leaf(Letter),
    Node(Box<LyndonBracket>, Box<LyndonBracket>),
}

impl LyndonBracket {
    /// Leaves read left to right.
    pub fn frontier(&self) -> Word {
        let mut letters = Vec::new();
        self.collect_leaves(&mut letters);
        Word(letters)
    }

    fn collect_leaves(&self, out: &mut Vec<Letter>) {
        match self {
            LyndonBracket::Leaf(l) => out.push(*l),
            LyndonBracket::Node(left, right) => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }
}

impl fmt::Display for LyndonBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LyndonBracket::Leaf(l) => write!(f, "{l}"),
            LyndonBracket::Node(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

pub fn lyndon_bracketing(w: &Word) -> Result<LyndonBracket, LyndonError> {
    if !is_lyndon(w)? {
        return Err(LyndonError::NotLyndon(w.to_string()));
    }
    if w.len() == 1 {
        return Ok(LyndonBracket::Leaf(w.letters()[0]));
    }
    let (u, v) = standard_factorization(w)?;
    Ok(LyndonBracket::Node(
        Box::new(lyndon_bracketing(&u)?),
        Box::new(lyndon_bracketing(&v)?),
    ))
}
