//! Exact linear algebra over `Q`: dense row reduction for kernels,
//! determinants and solves, and an incremental echelon basis over sparse
//! vectors keyed by any ordered type.

use std::collections::BTreeMap;
use std::ops::Bound::{Excluded, Unbounded};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type SparseVec<K> = BTreeMap<K, BigRational>;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    /// Builds from rows; all rows must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<BigRational>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Self {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| BigRational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Top-left `k × k` block.
    pub fn leading_block(&self, k: usize) -> Matrix {
        let mut m = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &self[(i, j)] - &factor * &self[(r, j)];
                    self[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : Av = 0}`, one vector per free column in increasing order.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        (0..self.cols)
            .filter(|&c| is_pivot[c].is_none())
            .map(|free| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[free] = BigRational::one();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = -m[(r, free)].clone();
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return BigRational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] / &pivot;
                for j in c..n {
                    let v = &m[(i, j)] - &factor * &m[(c, j)];
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    /// Unique solution of `Ax = b`, or `None` if there is none or it is not unique.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) || pivots.len() != self.cols {
            return None;
        }
        Some((0..self.cols).map(|r| aug[(r, self.cols)].clone()).collect())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = BigRational;

    fn index(&self, (r, c): (usize, usize)) -> &BigRational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigRational {
        &mut self.data[r * self.cols + c]
    }
}

/// An echelon basis of sparse vectors, grown one vector at a time.
///
/// Each stored vector has leading coefficient 1 at its smallest key, and no
/// two stored vectors share a leading key.
#[derive(Clone, Debug)]
pub struct EchelonSpan<K: Ord + Clone> {
    basis: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for EchelonSpan<K> {
    fn default() -> Self {
        Self {
            basis: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> EchelonSpan<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Remainder of `v` after eliminating every leading key of the basis.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        v.retain(|_, c| !c.is_zero());
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().find(|k| self.basis.contains_key(*k)).cloned(),
                Some(last) => v
                    .range((Excluded(last.clone()), Unbounded))
                    .map(|(k, _)| k)
                    .find(|k| self.basis.contains_key(*k))
                    .cloned(),
            };
            let Some(key) = next else { break };
            let factor = v[&key].clone();
            for (k, c) in &self.basis[&key] {
                let entry = v.entry(k.clone()).or_insert_with(BigRational::zero);
                *entry -= &factor * c;
                if entry.is_zero() {
                    v.remove(k);
                }
            }
            cursor = Some(key);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((lead, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = c.recip();
        for value in r.values_mut() {
            *value *= &inv;
        }
        self.basis.insert(lead, r);
        true
    }

    pub fn leading_keys(&self) -> impl Iterator<Item = &K> {
        self.basis.keys()
    }
}
