//! Nisan matrices and the exact ROABP width/size of a polynomial in a given
//! variable order.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::abp::check_permutation;
use crate::error::{Error, Result};
use crate::linalg::{Limits, QMatrix, SparseEchelon};
use crate::poly::{Monomial, Poly, Rational};

/// Prefix-cut ranks of `f` along an order, with the resulting optimal width and size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NisanCutReport {
    pub order: Vec<usize>,
    pub cut_ranks: Vec<usize>,
    pub width: usize,
    pub size: usize,
}

fn complement(s: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|i| !s.contains(i)).collect()
}

fn check_indices(s: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != s.len() || sorted.iter().any(|&i| i >= n) {
        return Err(Error::InvalidPartition(format!(
            "{s:?} is not a set of variables of 0..{n}"
        )));
    }
    Ok(sorted)
}

/// All exponent tuples over `k` variables with entries `≤ d`, ascending deg-lex.
fn bounded_monomials(k: usize, d: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (0..k)
        .map(|_| 0..=d)
        .multi_cartesian_product()
        .map(Monomial::from_exponents)
        .collect();
    // the empty product yields one empty tuple on some itertools versions, none on others
    if out.is_empty() {
        out.push(Monomial::one(0));
    }
    out.sort();
    out
}

/// The dense `(d+1)^{|S|} × (d+1)^{|T|}` matrix with entry `(m, m')` equal to
/// `coeff_f(m · m')`, where `d` is the individual degree of `f` and `T` is the
/// complement of `S`.
pub fn nisan_matrix(f: &Poly, s: &[usize], limits: &Limits) -> Result<QMatrix> {
    let n = f.arity();
    let s = check_indices(s, n)?;
    let t = complement(&s, n);
    let d = f.max_individual_degree();
    let base = d as usize + 1;
    let rows = base.checked_pow(s.len() as u32).unwrap_or(usize::MAX);
    let cols = base.checked_pow(t.len() as u32).unwrap_or(usize::MAX);
    limits.check_entries("Nisan matrix", rows, cols)?;

    let row_monos = bounded_monomials(s.len(), d);
    let col_monos = bounded_monomials(t.len(), d);
    let row_index: BTreeMap<&Monomial, usize> =
        row_monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let col_index: BTreeMap<&Monomial, usize> =
        col_monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut m = QMatrix::zeros(rows, cols);
    for (mono, c) in f.terms() {
        let r = row_index[&mono.restrict(&s)];
        let k = col_index[&mono.restrict(&t)];
        m[(r, k)] = c.clone();
    }
    Ok(m)
}

/// Rank of the `(S, T)` Nisan matrix, computed from the distinct nonzero rows
/// gathered from the support of `f` without materializing the dense matrix.
pub fn nisan_rank(f: &Poly, s: &[usize], limits: &Limits) -> Result<usize> {
    let n = f.arity();
    let s = check_indices(s, n)?;
    let t = complement(&s, n);
    let mut rows: BTreeMap<Monomial, BTreeMap<Monomial, Rational>> = BTreeMap::new();
    for (mono, c) in f.terms() {
        rows.entry(mono.restrict(&s))
            .or_default()
            .insert(mono.restrict(&t), c.clone());
    }
    let distinct_cols = f.monomials().map(|m| m.restrict(&t)).unique().count();
    limits.check_entries("Nisan submatrix", rows.len(), distinct_cols)?;
    let mut echelon = SparseEchelon::new();
    for row in rows.into_values() {
        echelon.insert(row);
    }
    Ok(echelon.rank())
}

/// Ranks of the prefix cuts `S_i = {σ(1), …, σ(i)}` for `i = 1..n`.
pub fn nisan_width(f: &Poly, order: &[usize], limits: &Limits) -> Result<NisanCutReport> {
    let n = f.arity();
    check_permutation(order, n)?;
    let cut_ranks = (1..=n)
        .map(|i| nisan_rank(f, &order[..i], limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(NisanCutReport {
        order: order.to_vec(),
        width: cut_ranks.iter().copied().max().unwrap_or(0),
        size: cut_ranks.iter().sum(),
        cut_ranks,
    })
}
