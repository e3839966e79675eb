//! Dense Gaussian elimination over [`Scalar`].

use std::collections::BTreeMap;

use crate::error::Result;
use crate::freealg::{Element, Word};
use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut Matrix) -> Result<Vec<usize>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse()?;
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = x.try_mul(&inv)?;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = x.try_add(&-f.try_mul(p)?)?;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank(m: &Matrix) -> Result<usize> {
    let mut m = m.clone();
    Ok(rref(&mut m)?.len())
}

/// A solution of `a x = b` with free variables set to zero, or `None`.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug)?;
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Ok(Some(x))
}

/// Basis of the null space `{x : a x = 0}`.
pub fn kernel(a: &Matrix, cols: usize) -> Result<Vec<Vec<Scalar>>> {
    let mut m = a.clone();
    let pivots = rref(&mut m)?;
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -&m[r][free];
        }
        out.push(v);
    }
    Ok(out)
}

/// Assigns row indices to words as they are first seen.
#[derive(Clone, Debug, Default)]
pub struct WordIndex {
    index: BTreeMap<Word, usize>,
    words: Vec<Word>,
}

impl WordIndex {
    pub fn new() -> WordIndex {
        WordIndex::default()
    }

    pub fn from_words(words: impl IntoIterator<Item = Word>) -> WordIndex {
        let mut ix = WordIndex::new();
        for w in words {
            ix.id(&w);
        }
        ix
    }

    pub fn id(&mut self, w: &Word) -> usize {
        if let Some(&i) = self.index.get(w) {
            return i;
        }
        let i = self.words.len();
        self.index.insert(w.clone(), i);
        self.words.push(w.clone());
        i
    }

    pub fn get(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Columns of `elements` as a matrix with one row per indexed word.
    pub fn columns(&mut self, elements: &[Element]) -> Matrix {
        for e in elements {
            for (w, _) in e.terms() {
                self.id(w);
            }
        }
        let mut m = vec![vec![Scalar::zero(); elements.len()]; self.len()];
        for (j, e) in elements.iter().enumerate() {
            for (w, c) in e.terms() {
                m[self.index[w]][j] = c.clone();
            }
        }
        m
    }

    pub fn vector(&mut self, e: &Element) -> Vec<Scalar> {
        for (w, _) in e.terms() {
            self.id(w);
        }
        let mut v = vec![Scalar::zero(); self.len()];
        for (w, c) in e.terms() {
            v[self.index[w]] = c.clone();
        }
        v
    }
}

/// Pads every row of `m` and `b` to the current index size.
pub fn pad(m: &mut Matrix, rows: usize, cols: usize) {
    for r in m.iter_mut() {
        r.resize(cols, Scalar::zero());
    }
    m.resize(rows, vec![Scalar::zero(); cols]);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn solves_a_consistent_system() {
        let a = vec![vec![s(1), s(2)], vec![s(2), s(4)], vec![s(0), s(1)]];
        let x = solve(&a, &[s(5), s(10), s(2)]).unwrap().unwrap();
        assert_eq!(x, vec![s(1), s(2)]);
    }

    #[test]
    fn detects_inconsistency() {
        let a = vec![vec![s(1), s(1)], vec![s(1), s(1)]];
        assert!(solve(&a, &[s(1), s(2)]).unwrap().is_none());
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = vec![vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)]];
        let k = kernel(&a, 3).unwrap();
        assert_eq!(k.len(), 2);
        for v in k {
            let dot: Scalar = a[0].iter().zip(&v).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y));
            assert!(dot.is_zero());
        }
    }
}
