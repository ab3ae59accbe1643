use crate::error::{Error, Result};
use crate::poly::{Poly, Rational};

use super::QMatrix;

/// Matrix with polynomial entries sharing one arity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    arity: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, arity: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            arity,
            entries: vec![Poly::zero(arity); rows * cols],
        }
    }

    pub fn identity(n: usize, arity: usize) -> Self {
        let mut m = Self::zeros(n, n, arity);
        for i in 0..n {
            m.entries[i * n + i] = Poly::one(arity);
        }
        m
    }

    pub fn from_rows(arity: usize, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged polynomial matrix".into()));
        }
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        if let Some(p) = entries.iter().find(|p| p.arity() != arity) {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: p.arity(),
            });
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            arity,
            entries,
        })
    }

    /// `Σ_k A_k · x^k_k`-style constructor: the sum of `coefficient · monomial` terms.
    pub fn from_terms<'a>(
        rows: usize,
        cols: usize,
        arity: usize,
        terms: impl IntoIterator<Item = (&'a QMatrix, &'a crate::poly::Monomial)>,
    ) -> Self {
        let mut m = Self::zeros(rows, cols, arity);
        for (a, mono) in terms {
            assert_eq!((a.rows(), a.cols()), (rows, cols));
            for i in 0..rows {
                for j in 0..cols {
                    let c = &a[(i, j)];
                    m.entries[i * cols + j].add_term(mono.clone(), c.clone());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn checked_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols, self.arity);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Substitutes a rational point into every entry.
    pub fn specialize(&self, point: &[Rational]) -> Result<QMatrix> {
        let rows = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).eval(point))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QMatrix::from_rows(rows))
    }

    pub fn total_terms(&self) -> usize {
        self.entries.iter().map(Poly::len).sum()
    }
}
