//! Exact rational sequences and the integer compositions and partitions that
//! index the sums over them.
//!
//! A [`Sequence`] is the prefix `(s_1, …, s_N)` of an infinite sequence; the
//! constant term `s_0 = 1` of the associated generating function
//! `1 + Σ s_n t^n` is implicit and never stored.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SeqError;

/// A 1-indexed finite prefix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Sequence {
    entries: Vec<BigRational>,
}

impl Sequence {
    pub fn new(entries: Vec<BigRational>) -> Self {
        Self { entries }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            entries: vec![BigRational::zero(); len],
        }
    }

    pub fn from_ints<I, T>(values: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self {
            entries: values
                .into_iter()
                .map(|v| BigRational::from_integer(v.into()))
                .collect(),
        }
    }

    /// Truncation degree `N`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry `s_n` for `1 ≤ n ≤ N`.
    ///
    /// Panics when `n` is outside `1..=N`.
    pub fn at(&self, n: usize) -> &BigRational {
        assert!(
            n >= 1 && n <= self.entries.len(),
            "index {n} outside 1..={}",
            self.entries.len()
        );
        &self.entries[n - 1]
    }

    pub fn get(&self, n: usize) -> Option<&BigRational> {
        if n == 0 {
            None
        } else {
            self.entries.get(n - 1)
        }
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigRational> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &BigRational> {
        self.entries.iter()
    }

    pub fn truncated(&self, len: usize) -> Sequence {
        Sequence {
            entries: self.entries.iter().take(len).cloned().collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// First index whose entry is not an integer.
    pub fn first_non_integral(&self) -> Option<usize> {
        self.entries.iter().position(|e| !e.is_integer()).map(|i| i + 1)
    }

    /// First index whose entry is negative.
    pub fn first_negative(&self) -> Option<usize> {
        self.entries.iter().position(|e| e.is_negative()).map(|i| i + 1)
    }

    /// Integer entries, or `None` if any entry has a nontrivial denominator.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|e| e.is_integer().then(|| e.to_integer()))
            .collect()
    }

    /// Nonnegative entries that fit in `usize`, for use as letter counts.
    pub fn to_counts(&self) -> Option<Vec<usize>> {
        self.entries
            .iter()
            .map(|e| {
                if e.is_integer() && !e.is_negative() {
                    usize::try_from(e.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// First index `n` (over the common prefix) with `self_n > other_n`,
    /// i.e. the first witness that `self ≤ other` fails.
    pub fn first_exceeding(&self, other: &Sequence) -> Option<usize> {
        self.entries
            .iter()
            .zip(other.entries.iter())
            .position(|(x, y)| x > y)
            .map(|i| i + 1)
    }

    /// Componentwise `self ≤ other` over the common prefix.
    pub fn dominated_by(&self, other: &Sequence) -> bool {
        self.first_exceeding(other).is_none()
    }

    /// Componentwise difference, over the common prefix.
    pub fn sub(&self, other: &Sequence) -> Sequence {
        Sequence {
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    /// The unit vector `e_k` of length `len`.
    pub fn unit(len: usize, k: usize) -> Sequence {
        let mut s = Sequence::zeros(len);
        s.entries[k - 1] = BigRational::one();
        s
    }
}

impl From<Vec<BigRational>> for Sequence {
    fn from(entries: Vec<BigRational>) -> Self {
        Self { entries }
    }
}

impl FromIterator<BigRational> for Sequence {
    fn from_iter<T: IntoIterator<Item = BigRational>>(iter: T) -> Self {
        Self {
            entries: iter.into_iter().collect(),
        }
    }
}

pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rational(text: &str) -> Option<BigRational> {
    // accept U+2212 as a minus sign
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    if cleaned.is_empty() {
        return None;
    }
    match cleaned.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => cleaned.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(fmt_rational).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Sequence {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Err(SeqError::Parse {
                position: 1,
                token: String::new(),
            });
        }
        s.split(',')
            .enumerate()
            .map(|(i, tok)| {
                parse_rational(tok).ok_or_else(|| SeqError::Parse {
                    position: i + 1,
                    token: tok.trim().to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Sequence::new)
    }
}

impl Serialize for Sequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for e in &self.entries {
            seq.serialize_element(&fmt_rational(e))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Sequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(deserializer)?;
        raw.iter()
            .map(|t| {
                parse_rational(t)
                    .ok_or_else(|| serde::de::Error::custom(format!("bad rational `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Sequence::new)
    }
}

/// A composition `β = (β_1, …, β_ℓ)` of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        (!parts.is_empty() && parts.iter().all(|&p| p > 0)).then_some(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// ℓ(β)
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `c_β = c_{β_1} ⋯ c_{β_ℓ}`.
    pub fn product_of(&self, c: &Sequence) -> BigRational {
        self.parts
            .iter()
            .fold(BigRational::one(), |acc, &p| acc * c.at(p))
    }
}

/// A partition `λ ⊢ n`, parts weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Pairs `(d, m_d(λ))` for every part size `d` that occurs, increasing in `d`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((d, m)) if *d == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

/// All compositions of `n` in lexicographic order of their part lists.
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut current = Vec::new();
    fn rec(remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition {
                parts: current.clone(),
            });
            return;
        }
        for first in 1..=remaining {
            current.push(first);
            rec(remaining - first, current, out);
            current.pop();
        }
    }
    rec(n, &mut current, &mut out);
    out
}

/// All partitions of `n` in reverse-lexicographic order (`(n)` first, `(1^n)` last).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}
