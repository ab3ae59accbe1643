//! Determinant, permanent and palindrome generators, plus the closed-form
//! apolar structure of `Det_n`: the anti-diagonal normal set and the
//! sign-formula multiplication tables.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::abp::{Abp, AbpKind, Layer};
use crate::error::{Error, Result};
use crate::linalg::{PolyMatrix, QMatrix};
use crate::poly::{rat, Monomial, Poly, Rational};

/// `x1_1, x1_2, …, xn_n` in row-major order.
pub fn det_var_names(n: usize) -> Vec<String> {
    (1..=n)
        .flat_map(|i| (1..=n).map(move |j| format!("x{i}_{j}")))
        .collect()
}

/// `x1, …, xn, y1, …, yn`.
pub fn palindrome_var_names(n: usize) -> Vec<String> {
    (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=n).map(|i| format!("y{i}")))
        .collect()
}

fn inversions(p: &[usize]) -> usize {
    p.iter()
        .enumerate()
        .map(|(a, &x)| p[a + 1..].iter().filter(|&&y| y < x).count())
        .sum()
}

fn parity_sign(p: &[usize]) -> i64 {
    if inversions(p).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn permutation_expansion(n: usize, signed: bool) -> Poly {
    let terms = (0..n).permutations(n).map(|p| {
        let mut exps = vec![0; n * n];
        for (i, &j) in p.iter().enumerate() {
            exps[i * n + j] = 1;
        }
        let sign = if signed { parity_sign(&p) } else { 1 };
        (Monomial::from_exponents(exps), rat(sign))
    });
    Poly::from_terms(n * n, terms)
}

/// `Det_n` over `n²` variables.
pub fn det_polynomial(n: usize) -> Poly {
    permutation_expansion(n, true)
}

/// `Perm_n` over `n²` variables.
pub fn perm_polynomial(n: usize) -> Poly {
    permutation_expansion(n, false)
}

/// `(x1 + y1)(x2 + y2)⋯(xn + yn)`, expanded, over [`palindrome_var_names`].
pub fn palindrome(n: usize) -> Poly {
    let terms = (0..n)
        .map(|_| [false, true])
        .multi_cartesian_product()
        .map(|pick| {
            let mut exps = vec![0; 2 * n];
            for (i, &y) in pick.iter().enumerate() {
                exps[if y { n + i } else { i }] = 1;
            }
            (Monomial::from_exponents(exps), rat(1))
        });
    let mut out = Poly::from_terms(2 * n, terms);
    if n == 0 {
        out = Poly::one(0);
    }
    out
}

/// A square minor `X_{S,T}` of the `n × n` symbolic matrix (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinorIndex {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorIndex {
    pub fn new(n: usize, mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<MinorIndex> {
        rows.sort_unstable();
        cols.sort_unstable();
        let ok = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&x| x < n);
        if rows.len() != cols.len() || !ok(&rows) || !ok(&cols) {
            return Err(Error::InvalidPartition(format!(
                "rows {rows:?} and columns {cols:?} do not index a square minor of a {n}x{n} matrix"
            )));
        }
        Ok(MinorIndex { rows, cols })
    }

    /// Every minor, including the empty one.
    pub fn all(n: usize) -> Vec<MinorIndex> {
        (0..=n)
            .flat_map(|k| {
                (0..n).combinations(k).flat_map(move |rows| {
                    (0..n).combinations(k).map(move |cols| MinorIndex {
                        rows: rows.clone(),
                        cols,
                    })
                })
            })
            .collect()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Product of the anti-diagonal entries of the minor.
    pub fn anti_diagonal(&self, n: usize) -> Monomial {
        let k = self.size();
        let mut exps = vec![0; n * n];
        for (a, &r) in self.rows.iter().enumerate() {
            exps[r * n + self.cols[k - 1 - a]] = 1;
        }
        Monomial::from_exponents(exps)
    }

    /// `Det(X_{S,T})` as a polynomial in all `n²` variables.
    pub fn determinant(&self, n: usize) -> Poly {
        let k = self.size();
        let terms = (0..k).permutations(k).map(|p| {
            let mut exps = vec![0; n * n];
            for (a, &b) in p.iter().enumerate() {
                exps[self.rows[a] * n + self.cols[b]] = 1;
            }
            (Monomial::from_exponents(exps), rat(parity_sign(&p)))
        });
        Poly::from_terms(n * n, terms)
    }

    /// Sign of the anti-diagonal term in `Det(X_{S,T})`.
    fn anti_diagonal_sign(&self) -> i64 {
        let k = self.size();
        if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The minor with row `i` and column `j` added, if neither is present.
    fn extend(&self, i: usize, j: usize) -> Option<(MinorIndex, usize, usize)> {
        let ri = self.rows.binary_search(&i).err()?;
        let cj = self.cols.binary_search(&j).err()?;
        let mut rows = self.rows.clone();
        let mut cols = self.cols.clone();
        rows.insert(ri, i);
        cols.insert(cj, j);
        Some((MinorIndex { rows, cols }, ri, cj))
    }
}

fn anti_diagonal_minors(n: usize) -> Vec<(Monomial, MinorIndex)> {
    let mut out: Vec<_> = MinorIndex::all(n)
        .into_iter()
        .map(|m| (m.anti_diagonal(n), m))
        .collect();
    out.sort();
    out
}

/// Anti-diagonal monomials of all square minors, ascending deg-lex;
/// `C(2n, n)` of them.
pub fn det_normal_set(n: usize) -> Vec<Monomial> {
    anti_diagonal_minors(n)
        .into_iter()
        .map(|(m, _)| m)
        .collect()
}

/// Multiplication tables of `Det_n^⊥` over [`det_normal_set`], from the sign
/// formula: row `(S, T)` of `A_{i,j}` is zero when `i ∈ S` or `j ∈ T`, and
/// otherwise `sgn(x_{i,j}·τ_{S,T}) · sgn(τ_{S',T'})` at the position of
/// `τ_{S',T'}`, with `S' = S ∪ {i}`, `T' = T ∪ {j}`. Here `τ` is the
/// anti-diagonal monomial and `sgn` the sign of a term in its minor's
/// determinant.
pub fn det_mult_tables(n: usize) -> Vec<QMatrix> {
    let minors = anti_diagonal_minors(n);
    let position: BTreeMap<&MinorIndex, usize> = minors
        .iter()
        .enumerate()
        .map(|(p, (_, m))| (m, p))
        .collect();
    let w = minors.len();
    let mut tables = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut a = QMatrix::zeros(w, w);
            for (row, (_, minor)) in minors.iter().enumerate() {
                let Some((ext, ri, cj)) = minor.extend(i, j) else {
                    continue;
                };
                // x_{i,j}·τ_{S,T} as a bijection S' -> T': row a of S' goes to
                // column p[a] of T'
                let k = minor.size();
                let mut p = Vec::with_capacity(k + 1);
                for (a, _) in ext.rows.iter().enumerate() {
                    if a == ri {
                        p.push(cj);
                    } else {
                        let old_a = if a < ri { a } else { a - 1 };
                        let old_c = k - 1 - old_a;
                        p.push(if old_c < cj { old_c } else { old_c + 1 });
                    }
                }
                let sign = parity_sign(&p) * ext.anti_diagonal_sign();
                a[(row, position[&ext])] = rat(sign);
            }
            tables.push(a);
        }
    }
    tables
}

/// The four layers `M_{i,j} = I + A_{i,j}·x_{i,j}` of the `Det₂` commutative
/// ROABP, entry for entry as usually printed, over [`det_var_names`]`(2)`.
pub fn det2_golden() -> Vec<PolyMatrix> {
    // nonzero off-diagonal entries as (row, col, sign), 1-based
    let entries: [&[(usize, usize, i64)]; 4] = [
        &[(1, 2, 1), (5, 6, -1)],
        &[(1, 3, 1), (4, 6, 1)],
        &[(1, 4, 1), (3, 6, 1)],
        &[(1, 5, 1), (2, 6, -1)],
    ];
    entries
        .iter()
        .enumerate()
        .map(|(var, list)| {
            let mut rows: Vec<Vec<Poly>> = (0..6)
                .map(|r| {
                    (0..6)
                        .map(|c| if r == c { Poly::one(4) } else { Poly::zero(4) })
                        .collect()
                })
                .collect();
            for &(r, c, s) in *list {
                rows[r - 1][c - 1] = Poly::var(4, var).scale(&rat(s));
            }
            PolyMatrix::from_rows(4, rows).expect("6x6 layer")
        })
        .collect()
}

/// The golden layers packaged as a commutative ROABP computing `Det₂`.
///
/// The `(1, 6)` entry of the layer product is `−Det₂`, so the boundary is
/// `u = e₁`, `v = −e₆`.
pub fn det2_golden_abp() -> Abp {
    let layers = det2_golden()
        .iter()
        .enumerate()
        .map(|(var, m)| {
            let mut a = QMatrix::zeros(6, 6);
            for r in 0..6 {
                for c in 0..6 {
                    if r != c {
                        a[(r, c)] = m.get(r, c).coeff(&Monomial::var(4, var));
                    }
                }
            }
            Layer::univariate(var, [(0, QMatrix::identity(6)), (1, a)])
        })
        .collect();
    let mut u = vec![Rational::from_integer(0.into()); 6];
    let mut v = u.clone();
    u[0] = rat(1);
    v[5] = rat(-1);
    Abp::new(AbpKind::Commutative, det_var_names(2), layers, u, v).expect("golden ABP shape")
}
