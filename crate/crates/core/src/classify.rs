//! Decisions about free graded connected cocommutative Hopf algebras made
//! from their sequences alone.
//!
//! Every answer is only as strong as the prefixes it was given: the
//! conditions quantify over all degrees, and a certificate records the degree
//! `N` up to which they were checked.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ClassifyError;
use crate::par::{self, Execution};
use crate::seq::{fmt_rational, Sequence};
use crate::transform::{a_to_p, euleri, inverti, p_to_a};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Answer {
    Yes,
    No,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
        })
    }
}

/// Outcome of a decision with the sequences that justify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub question: String,
    pub answer: Answer,
    /// Conditions were checked in degrees `1..=effective_degree`.
    pub effective_degree: usize,
    pub witnesses: BTreeMap<String, Sequence>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failing_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

impl Certificate {
    fn new(question: &str, effective_degree: usize) -> Self {
        Self {
            question: question.to_string(),
            answer: Answer::Yes,
            effective_degree,
            witnesses: BTreeMap::new(),
            failing_index: None,
            reason: None,
        }
    }

    fn witness(mut self, name: &str, s: Sequence) -> Self {
        self.witnesses.insert(name.to_string(), s);
        self
    }

    fn fail(mut self, index: usize, reason: String) -> Self {
        self.answer = Answer::No;
        self.failing_index = Some(index);
        self.reason = Some(reason);
        self
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }

    pub fn witness_of(&self, name: &str) -> Option<&Sequence> {
        self.witnesses.get(name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {} (up to degree {})", self.question, self.answer, self.effective_degree)?;
        for (k, v) in &self.witnesses {
            writeln!(f, "  {k} = ({v})")?;
        }
        if let Some(i) = self.failing_index {
            writeln!(f, "  fails at index {i}")?;
        }
        if let Some(r) = &self.reason {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

fn require_integral(s: &Sequence, argument: &'static str) -> Result<(), ClassifyError> {
    match s.first_non_integral() {
        Some(i) => Err(ClassifyError::InvalidDimensionSequence {
            argument,
            index: i,
            value: fmt_rational(s.at(i)),
        }),
        None => Ok(()),
    }
}

/// Generator counts `a = inverti(h)` of a realizable `h`.
fn generators_of(h: &Sequence, argument: &'static str) -> Result<Sequence, ClassifyError> {
    require_integral(h, argument)?;
    let a = inverti(h);
    match a.first_negative() {
        Some(i) => Err(ClassifyError::NotAnFGCCHA {
            argument,
            index: i,
            value: fmt_rational(a.at(i)),
        }),
        None => Ok(a),
    }
}

/// Is `h` the dimension sequence of some FGCCHA? YES iff `inverti(h) ≥ 0`;
/// the witness is the generator sequence of the representative `U(L(a))`.
pub fn realizable(h: &Sequence) -> Result<Certificate, ClassifyError> {
    require_integral(h, "h")?;
    let a = inverti(h);
    let cert = Certificate::new("realizable", h.len()).witness("a", a.clone());
    Ok(match a.first_negative() {
        Some(i) => cert.fail(i, format!("a_{i} = {} is negative", fmt_rational(a.at(i)))),
        None => cert,
    })
}

/// Is `p` the primitive dimension sequence of some FGCCHA? YES iff
/// `p_to_a(p) ≥ 0`.
pub fn primitive_realizable(p: &Sequence) -> Result<Certificate, ClassifyError> {
    require_integral(p, "p")?;
    let a = p_to_a(p);
    let cert = Certificate::new("primitive_realizable", p.len()).witness("a", a.clone());
    Ok(match a.first_negative() {
        Some(i) => cert.fail(i, format!("a_{i} = {} is negative", fmt_rational(a.at(i)))),
        None => cert,
    })
}

/// Does the FGCCHA with dimensions `host` surject onto the one with
/// dimensions `target`? YES iff the generator sequences satisfy `a ≥ b`.
pub fn surjection_exists(host: &Sequence, target: &Sequence) -> Result<Certificate, ClassifyError> {
    let a = generators_of(host, "host")?;
    let b = generators_of(target, "target")?;
    let n = host.len().min(target.len());
    let (a, b) = (a.truncated(n), b.truncated(n));
    let cert = Certificate::new("surjection", n)
        .witness("a", a.clone())
        .witness("b", b.clone());
    Ok(match b.first_exceeding(&a) {
        Some(i) => cert.fail(
            i,
            format!("a_{i} = {} < b_{i} = {}", fmt_rational(a.at(i)), fmt_rational(b.at(i))),
        ),
        None => cert,
    })
}

/// Is the FGCCHA with dimensions `target` isomorphic to a Hopf subalgebra of
/// the one with dimensions `host`? YES iff `b = inverti(target) ≥ 0` and
/// `a_to_p(b) ≤ euleri(host)`.
pub fn subalgebra_exists(host: &Sequence, target: &Sequence) -> Result<Certificate, ClassifyError> {
    generators_of(host, "host")?;
    require_integral(target, "target")?;
    let n = host.len().min(target.len());
    let b = inverti(&target.truncated(n));
    let mut cert = Certificate::new("subalgebra", n).witness("b", b.clone());
    if let Some(i) = b.first_negative() {
        return Ok(cert.fail(
            i,
            format!("target is not realizable: b_{i} = {} is negative", fmt_rational(b.at(i))),
        ));
    }
    let q = a_to_p(&b);
    let p = euleri(&host.truncated(n));
    cert = cert.witness("q", q.clone()).witness("p", p.clone());
    Ok(match q.first_exceeding(&p) {
        Some(i) => cert.fail(
            i,
            format!("q_{i} = {} > p_{i} = {}", fmt_rational(q.at(i)), fmt_rational(p.at(i))),
        ),
        None => cert,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraEnumeration {
    /// Primitive dimensions of the host, `euleri(h)`.
    pub host_p: Sequence,
    pub max_degree: usize,
    /// Generator sequences `b`, lexicographically ordered.
    pub sequences: Vec<Sequence>,
    /// False when `limit` cut the enumeration short.
    pub exhausted: bool,
}

/// All generator sequences `b ∈ N^max_degree` with `a_to_p(b) ≤ euleri(host)`,
/// in lexicographic order, at most `limit` of them.
///
/// `a_to_p` is monotone in each coordinate, so once a value of `b_k` fails
/// every larger value fails too, and a failing prefix is never extended.
pub fn enumerate_subalgebra_sequences(
    host: &Sequence,
    max_degree: usize,
    limit: usize,
) -> Result<SubalgebraEnumeration, ClassifyError> {
    enumerate_subalgebra_sequences_with(Execution::default(), host, max_degree, limit)
}

pub fn enumerate_subalgebra_sequences_with(
    exec: Execution,
    host: &Sequence,
    max_degree: usize,
    limit: usize,
) -> Result<SubalgebraEnumeration, ClassifyError> {
    generators_of(host, "host")?;
    if max_degree > host.len() {
        return Err(ClassifyError::DegreeOutOfRange {
            requested: max_degree,
            available: host.len(),
        });
    }
    let p = euleri(&host.truncated(max_degree));
    let fits = |b: &[u64]| a_to_p(&Sequence::from_ints(b.iter().copied())).dominated_by(&p);

    let mut firsts = Vec::new();
    if max_degree > 0 {
        let mut c = 0u64;
        loop {
            let mut b = vec![0u64; max_degree];
            b[0] = c;
            if !fits(&b) {
                break;
            }
            firsts.push(c);
            c += 1;
        }
    }
    let cap = limit.saturating_add(1);
    let branches = par::map(exec, &firsts, |&c| {
        let mut b = vec![0u64; max_degree];
        b[0] = c;
        let mut out = Vec::new();
        extend(&mut b, 1, &fits, cap, &mut out);
        out
    });
    let mut sequences: Vec<Sequence> = branches
        .into_iter()
        .flatten()
        .take(cap)
        .map(|b| Sequence::from_ints(b))
        .collect();
    let exhausted = sequences.len() <= limit;
    sequences.truncate(limit);
    Ok(SubalgebraEnumeration {
        host_p: p,
        max_degree,
        sequences,
        exhausted,
    })
}

// `b[..k]` is fixed and `b` (zero-padded) fits.
fn extend<F>(b: &mut Vec<u64>, k: usize, fits: &F, cap: usize, out: &mut Vec<Vec<u64>>)
where
    F: Fn(&[u64]) -> bool,
{
    if out.len() >= cap {
        return;
    }
    if k == b.len() {
        out.push(b.clone());
        return;
    }
    let mut c = 0u64;
    loop {
        b[k] = c;
        if c > 0 && !fits(b) {
            break;
        }
        extend(b, k + 1, fits, cap, out);
        if out.len() >= cap {
            break;
        }
        c += 1;
    }
    b[k] = 0;
}
