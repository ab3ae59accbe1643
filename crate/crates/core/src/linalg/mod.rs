//! Exact dense linear algebra over the rationals.

mod echelon;
mod polymatrix;

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Rational};

pub use echelon::SparseEchelon;
pub use polymatrix::PolyMatrix;

/// Size guards for objects that grow exponentially with the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of entries a dense matrix may have.
    pub max_matrix_entries: usize,
    /// Largest number of terms an expanded polynomial may have.
    pub max_expand_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_matrix_entries: 1 << 20,
            max_expand_terms: 1 << 20,
        }
    }
}

impl Limits {
    pub fn check_entries(&self, what: &'static str, rows: usize, cols: usize) -> Result<()> {
        let size = rows.saturating_mul(cols);
        if size > self.max_matrix_entries {
            return Err(Error::CapExceeded {
                what,
                size,
                cap: self.max_matrix_entries,
                flag: "max-entries",
            });
        }
        Ok(())
    }

    pub fn check_terms(&self, what: &'static str, size: usize) -> Result<()> {
        if size > self.max_expand_terms {
            return Err(Error::CapExceeded {
                what,
                size,
                cap: self.max_expand_terms,
                flag: "max-terms",
            });
        }
        Ok(())
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::poly::rat(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: Vec<Rational>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// True when the matrix is `c·I` for some rational `c`.
    pub fn is_scalar(&self) -> bool {
        self.is_diagonal() && (1..self.rows).all(|i| self[(i, i)] == self[(0, 0)])
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn checked_add(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> QMatrix {
        assert!(self.is_square());
        (0..k).fold(Self::identity(self.rows), |acc, _| {
            acc.checked_mul(self).expect("square matrix")
        })
    }

    /// `x^T · M` for a row vector `x`.
    pub fn left_mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.rows);
        let mut out = vec![Rational::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += xi * a;
                }
            }
        }
        out
    }

    /// `M · x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        self.row_vecs()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce(None)
    }

    /// Some `x` with `M·x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut m = self.clone();
        let mut rhs = b.to_vec();
        let rank = m.row_reduce(Some(&mut rhs));
        if rhs[rank..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        // Reduced row echelon form: each nonzero row has a unit pivot with zeros above
        // and below; free variables are set to zero.
        let mut x = vec![Rational::zero(); self.cols];
        for (i, r) in rhs.iter().enumerate().take(rank) {
            let pivot = (0..self.cols)
                .find(|&j| !m[(i, j)].is_zero())
                .expect("pivot row is nonzero");
            x[pivot] = r.clone();
        }
        Some(x)
    }

    /// A basis of `{x : M·x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let rank = m.row_reduce(None);
        let pivots: Vec<usize> = (0..rank)
            .map(|i| {
                (0..self.cols)
                    .find(|&j| !m[(i, j)].is_zero())
                    .expect("pivot")
            })
            .collect();
        (0..self.cols)
            .filter(|j| !pivots.contains(j))
            .map(|free| {
                let mut x = vec![Rational::zero(); self.cols];
                x[free] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    x[p] = -m[(i, free)].clone();
                }
                x
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut aug = QMatrix::identity(n);
        let rank = m.row_reduce_matrix(&mut aug);
        if rank < n {
            return None;
        }
        Some(aug)
    }

    /// Reduces `self` in place to reduced row echelon form, applying the same
    /// row operations to `rhs`. Returns the rank.
    fn row_reduce(&mut self, mut rhs: Option<&mut Vec<Rational>>) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = self.pivot_row(rank, col) else {
                continue;
            };
            self.swap_rows(rank, p);
            if let Some(r) = rhs.as_deref_mut() {
                r.swap(rank, p);
            }
            let inv = self[(rank, col)].recip();
            self.scale_row(rank, &inv);
            if let Some(r) = rhs.as_deref_mut() {
                r[rank] *= &inv;
            }
            for i in 0..self.rows {
                if i == rank || self[(i, col)].is_zero() {
                    continue;
                }
                let factor = self[(i, col)].clone();
                self.sub_row_multiple(i, rank, &factor);
                if let Some(r) = rhs.as_deref_mut() {
                    let delta = &factor * &r[rank];
                    r[i] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }

    fn row_reduce_matrix(&mut self, aug: &mut QMatrix) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = self.pivot_row(rank, col) else {
                continue;
            };
            self.swap_rows(rank, p);
            aug.swap_rows(rank, p);
            let inv = self[(rank, col)].recip();
            self.scale_row(rank, &inv);
            aug.scale_row(rank, &inv);
            for i in 0..self.rows {
                if i == rank || self[(i, col)].is_zero() {
                    continue;
                }
                let factor = self[(i, col)].clone();
                self.sub_row_multiple(i, rank, &factor);
                aug.sub_row_multiple(i, rank, &factor);
            }
            rank += 1;
        }
        rank
    }

    /// Largest-magnitude nonzero entry in `col` at or below row `from`.
    fn pivot_row(&self, from: usize, col: usize) -> Option<usize> {
        (from..self.rows)
            .filter(|&i| !self[(i, col)].is_zero())
            .max_by(|&a, &b| {
                self[(a, col)]
                    .abs()
                    .cmp(&self[(b, col)].abs())
                    .then(b.cmp(&a))
            })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: &Rational) {
        for x in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            if !x.is_zero() {
                *x *= c;
            }
        }
    }

    /// row[target] -= factor * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Rational) {
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let delta = factor * s;
            self.data[target * self.cols + j] -= delta;
        }
    }

    /// Parses the `rows cols` + row-major entries text format.
    pub fn parse(text: &str) -> Result<QMatrix> {
        let mut tokens = text.split_whitespace();
        let mut dim = |name: &str| -> Result<usize> {
            tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Format {
                    line: 1,
                    msg: format!("expected {name} count"),
                })
        };
        let rows = dim("row")?;
        let cols = dim("column")?;
        let data = tokens
            .map(|t| {
                t.parse::<Rational>().map_err(|_| Error::Format {
                    line: 0,
                    msg: format!("bad rational `{t}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if data.len() != rows * cols {
            return Err(Error::Format {
                line: 0,
                msg: format!("expected {} entries, found {}", rows * cols, data.len()),
            });
        }
        Ok(QMatrix { rows, cols, data })
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Matrix text format: `rows cols` on the first line, then one line per row.
impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for row in self.row_vecs() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// True iff `AB == BA`.
pub fn commute(a: &QMatrix, b: &QMatrix) -> Result<bool> {
    if !a.is_square() || !b.is_square() || a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "commutator of {}x{} and {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    if a.is_scalar() || b.is_scalar() {
        return Ok(true);
    }
    Ok(a.checked_mul(b)? == b.checked_mul(a)?)
}

/// The monic least-degree `p` with `p(A) = 0`, as a univariate polynomial.
///
/// Found as the first linear dependence among `I, A, A², …`.
pub fn minimal_polynomial(a: &QMatrix) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "minimal polynomial of a {}x{} matrix",
            a.rows, a.cols
        )));
    }
    let n = a.rows;
    let mut echelon = SparseEchelon::<usize>::with_tracking();
    let mut power = QMatrix::identity(n);
    for k in 0..=n {
        let v = power
            .data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        if let Some(combo) = echelon.insert_tracked(v) {
            // A^k = Σ combo_i A^i
            let mut p = Poly::term(
                crate::poly::Monomial::var_pow(1, 0, k as u32),
                Rational::one(),
            );
            for (i, c) in combo {
                p.add_term(crate::poly::Monomial::var_pow(1, 0, i as u32), -c);
            }
            return Ok(p);
        }
        power = power.checked_mul(a)?;
    }
    Err(Error::Invariant(
        "no dependence among I, A, ..., A^n (Cayley-Hamilton violated)".into(),
    ))
}

/// Evaluates a univariate polynomial at a square matrix.
pub fn eval_univariate_at(p: &Poly, a: &QMatrix) -> QMatrix {
    assert_eq!(p.arity(), 1);
    let mut out = QMatrix::zeros(a.rows, a.cols);
    for (m, c) in p.terms() {
        out = out
            .checked_add(&a.pow(m.exponent(0)).scale(c))
            .expect("square matrix");
    }
    out
}
