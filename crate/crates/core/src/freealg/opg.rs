//! Ordered primitive generating sets and their construction from matrices.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::hopf::{decomposable_span, derived_basis, is_primitive};
use super::poly::NcPoly;
use crate::error::FreeAlgError;
use crate::linalg::Matrix;
use crate::lyndon::{count_words, GradedAlphabet};

/// Per degree `n`, an ordered tuple of homogeneous degree-`n` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPrimGenSet {
    alphabet: GradedAlphabet,
    by_degree: Vec<Vec<NcPoly>>,
}

impl OrderedPrimGenSet {
    /// `by_degree[n − 1]` holds the degree-`n` tuple.
    pub fn new(alphabet: &GradedAlphabet, by_degree: Vec<Vec<NcPoly>>) -> Self {
        let alphabet = alphabet.with_truncation(alphabet.truncation_degree().max(by_degree.len()));
        Self { alphabet, by_degree }
    }

    /// Groups homogeneous elements by degree, keeping their relative order.
    pub fn from_elements(
        alphabet: &GradedAlphabet,
        elements: Vec<NcPoly>,
        max_degree: usize,
    ) -> Result<Self, FreeAlgError> {
        let mut by_degree = vec![Vec::new(); max_degree];
        for e in elements {
            let d = match e.degree() {
                Some(d) => d,
                None if e.is_zero() => {
                    return Err(FreeAlgError::InvalidSequence("zero generator".into()))
                }
                None => return Err(FreeAlgError::NotHomogeneous(e.degrees().into_iter().collect())),
            };
            if d == 0 || d > max_degree {
                return Err(FreeAlgError::DegreeOutOfRange { degree: d, max: max_degree });
            }
            by_degree[d - 1].push(e);
        }
        Ok(Self::new(alphabet, by_degree))
    }

    /// The letters themselves, which are primitive in `U(L(a))`.
    pub fn canonical(alphabet: &GradedAlphabet, max_degree: usize) -> Self {
        let alphabet = alphabet.with_truncation(alphabet.truncation_degree().max(max_degree));
        let by_degree = (1..=max_degree)
            .map(|d| {
                alphabet
                    .letters_of_degree(d)
                    .into_iter()
                    .map(|l| NcPoly::letter(&alphabet, l).expect("letter of its own alphabet"))
                    .collect()
            })
            .collect();
        Self { alphabet, by_degree }
    }

    pub fn alphabet(&self) -> &GradedAlphabet {
        &self.alphabet
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len()
    }

    pub fn degree(&self, n: usize) -> &[NcPoly] {
        if n == 0 || n > self.by_degree.len() {
            &[]
        } else {
            &self.by_degree[n - 1]
        }
    }

    /// Number of elements per degree.
    pub fn counts(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = (usize, &NcPoly)> {
        self.by_degree
            .iter()
            .enumerate()
            .flat_map(|(i, v)| v.iter().map(move |p| (i + 1, p)))
    }
}

impl fmt::Display for OrderedPrimGenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, tuple) in self.by_degree.iter().enumerate() {
            let parts: Vec<String> = tuple.iter().map(|p| format!("({p})")).collect();
            writeln!(f, "degree {}: {}", i + 1, parts.join(", "))?;
        }
        Ok(())
    }
}

/// Per degree `n`, an `a_n × p_n` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MatrixSeq(pub Vec<Matrix>);

impl MatrixSeq {
    pub fn new(matrices: Vec<Matrix>) -> Self {
        Self(matrices)
    }

    pub fn at(&self, n: usize) -> Option<&Matrix> {
        if n == 0 {
            None
        } else {
            self.0.get(n - 1)
        }
    }
}

/// Builds `β_i = Σ_j M_{i,j} α_j + Σ_j M_{i,a_n+j} v_j` in each degree, where
/// `α` are the letters of degree `n` and `v` the bracketed Lyndon words of
/// degree `n` and length at least two.
pub fn opg_from_matrices(
    alphabet: &GradedAlphabet,
    matrices: &MatrixSeq,
    max_degree: usize,
) -> Result<OrderedPrimGenSet, FreeAlgError> {
    let alphabet = alphabet.with_truncation(alphabet.truncation_degree().max(max_degree));
    let mut by_degree = Vec::with_capacity(max_degree);
    for n in 1..=max_degree {
        let letters = alphabet.letters_of_degree(n);
        let a_n = letters.len();
        let derived = derived_basis(&alphabet, n)?;
        let p_n = a_n + derived.len();
        let empty = Matrix::zeros(0, p_n);
        let m = match matrices.at(n) {
            Some(m) => m,
            None if a_n == 0 => &empty,
            None => {
                return Err(FreeAlgError::ShapeMismatch {
                    degree: n,
                    expected_rows: a_n,
                    expected_cols: p_n,
                    rows: 0,
                    cols: 0,
                })
            }
        };
        // a degree with no generators accepts any 0-row matrix
        let shape_ok = m.rows() == a_n && (m.cols() == p_n || a_n == 0);
        if !shape_ok {
            return Err(FreeAlgError::ShapeMismatch {
                degree: n,
                expected_rows: a_n,
                expected_cols: p_n,
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if a_n > 0 && m.leading_block(a_n).determinant().is_zero() {
            return Err(FreeAlgError::NotAGeneratingSet { degree: n });
        }
        let mut tuple = Vec::with_capacity(a_n);
        for i in 0..a_n {
            let mut beta = NcPoly::zero(&alphabet);
            for (j, &l) in letters.iter().enumerate() {
                let alpha = NcPoly::letter(&alphabet, l)?;
                beta.add_scaled_unchecked(&alpha, &m[(i, j)]);
            }
            for (j, v) in derived.iter().enumerate() {
                beta.add_scaled_unchecked(v, &m[(i, a_n + j)]);
            }
            tuple.push(beta);
        }
        by_degree.push(tuple);
    }
    Ok(OrderedPrimGenSet {
        alphabet,
        by_degree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OpgFailure {
    NotHomogeneous { degree: usize, position: usize },
    NotPrimitive { degree: usize, position: usize },
    /// Element `position` lies in the span of decomposables and earlier elements.
    Dependent { degree: usize, position: usize },
    /// Independent modulo decomposables, but too few to span the indecomposables.
    TooFew { degree: usize, found: usize, needed: usize },
}

impl fmt::Display for OpgFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpgFailure::NotHomogeneous { degree, position } => {
                write!(f, "degree {degree}: element {position} is not homogeneous of degree {degree}")
            }
            OpgFailure::NotPrimitive { degree, position } => {
                write!(f, "degree {degree}: element {position} is not primitive")
            }
            OpgFailure::Dependent { degree, position } => write!(
                f,
                "degree {degree}: element {position} is dependent modulo decomposables"
            ),
            OpgFailure::TooFew { degree, found, needed } => write!(
                f,
                "degree {degree}: {found} elements cannot span the {needed}-dimensional indecomposables"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpgVerdict {
    pub valid: bool,
    pub checked_degree: usize,
    pub failure: Option<OpgFailure>,
}

/// Checks, degree by degree up to `max_degree`, that every element is
/// primitive and that the degree-`n` elements descend to a basis of
/// `H_n / (H₊²)_n`.
pub fn verify_opg(candidate: &OrderedPrimGenSet, max_degree: usize) -> Result<OpgVerdict, FreeAlgError> {
    let alphabet = candidate
        .alphabet()
        .with_truncation(candidate.alphabet().truncation_degree().max(max_degree));
    let fail = |failure| {
        Ok(OpgVerdict {
            valid: false,
            checked_degree: max_degree,
            failure: Some(failure),
        })
    };
    for n in 1..=max_degree {
        let elements = candidate.degree(n);
        for (i, e) in elements.iter().enumerate() {
            if e.degree() != Some(n) {
                return fail(OpgFailure::NotHomogeneous { degree: n, position: i + 1 });
            }
            if !is_primitive(e) {
                return fail(OpgFailure::NotPrimitive { degree: n, position: i + 1 });
            }
        }
        let mut span = decomposable_span(&alphabet, n)?;
        let total = count_words(&alphabet, n)?;
        let needed = usize::try_from(total).expect("dimension fits in usize") - span.dim();
        for (i, e) in elements.iter().enumerate() {
            if !span.insert(&e.to_sparse()) {
                return fail(OpgFailure::Dependent { degree: n, position: i + 1 });
            }
        }
        if elements.len() != needed {
            return fail(OpgFailure::TooFew {
                degree: n,
                found: elements.len(),
                needed,
            });
        }
    }
    Ok(OpgVerdict {
        valid: true,
        checked_degree: max_degree,
        failure: None,
    })
}
