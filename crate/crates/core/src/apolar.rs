//! The quotient ring of the apolar ideal `f^⊥`, computed by linear algebra on
//! the derivative pairing instead of Gröbner bases.
//!
//! A polynomial `h` lies in `f^⊥` iff `⟨h, g⟩ = 0` for every derivative `g` of
//! `f`, so the residue `[h]` is determined by the vector of pairings of `h`
//! against a derivative basis. The normal set is the deg-lex-greedy choice of
//! monomials whose pairing vectors are independent.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, SparseEchelon};
use crate::partials::{apply_operator, derivative_basis, eval_vector, pairing, DerivBasis};
use crate::poly::{Monomial, Poly, Rational};

#[derive(Clone, Debug)]
pub struct QuotientStructure {
    basis: DerivBasis,
    normal_set: Vec<Monomial>,
    eval_matrix: QMatrix,
    // (eval_matrix^T)^{-1}: pairing vector -> residue coefficients
    residue_map: QMatrix,
    tables: Vec<QMatrix>,
}

impl QuotientStructure {
    pub fn basis(&self) -> &DerivBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.normal_set.len()
    }

    pub fn arity(&self) -> usize {
        self.basis.arity()
    }

    /// Normal-set monomials `1 = m_1 ≺ m_2 ≺ … ≺ m_w`.
    pub fn normal_set(&self) -> &[Monomial] {
        &self.normal_set
    }

    /// Entry `(i, j)` is `⟨m_i, g_j⟩`.
    pub fn eval_matrix(&self) -> &QMatrix {
        &self.eval_matrix
    }

    /// One table per variable; empty until [`multiplication_tables`] has run.
    pub fn tables(&self) -> &[QMatrix] {
        &self.tables
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.normal_set.binary_search(m).ok()
    }

    /// Coefficients of `[g]` over the normal set.
    pub fn residue_coefficients(&self, g: &Poly) -> Result<Vec<Rational>> {
        if g.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: g.arity(),
            });
        }
        let pairings = self
            .basis
            .basis()
            .iter()
            .map(|b| pairing(g, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.residue_map.mul_vec(&pairings))
    }

    fn residue_of_monomial(&self, m: &Monomial) -> Result<Vec<Rational>> {
        Ok(self.residue_map.mul_vec(&eval_vector(m, &self.basis)?))
    }

    /// `Σ_i c_i · m_i` for coefficients over the normal set.
    pub fn from_coefficients(&self, coeffs: &[Rational]) -> Poly {
        Poly::from_terms(
            self.arity(),
            self.normal_set.iter().cloned().zip(coeffs.iter().cloned()),
        )
    }
}

/// Greedy deg-lex normal set of `f^⊥` for homogeneous `f = basis.source()`.
///
/// Scans candidate monomials in ascending deg-lex and keeps `m` iff its pairing
/// vector is independent of those already kept. Only monomials in the support
/// of some derivative have a nonzero pairing vector, so those are the only
/// candidates scanned.
pub fn normal_set(basis: DerivBasis) -> Result<QuotientStructure> {
    if let Some((low, high)) = basis.source().homogeneity_witness() {
        return Err(Error::NotHomogeneous { low, high });
    }
    let w = basis.dim();
    let mut echelon = SparseEchelon::<usize>::new();
    let mut chosen = Vec::with_capacity(w);
    let mut rows = Vec::with_capacity(w);
    for m in basis.monomials() {
        if chosen.len() == w {
            break;
        }
        let v = eval_vector(m, &basis)?;
        let sparse: BTreeMap<usize, Rational> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        if echelon.insert(sparse) {
            chosen.push(m.clone());
            rows.push(v);
        }
    }
    if chosen.len() != w {
        return Err(Error::Invariant(format!(
            "normal set has {} monomials, derivative space has dimension {w}",
            chosen.len()
        )));
    }
    let eval_matrix = QMatrix::from_rows(rows);
    let residue_map = eval_matrix
        .transpose()
        .inverse()
        .ok_or_else(|| Error::Invariant("evaluation matrix is singular".into()))?;
    Ok(QuotientStructure {
        basis,
        normal_set: chosen,
        eval_matrix,
        residue_map,
        tables: Vec::new(),
    })
}

/// `[g]`: the polynomial supported on the normal set with `g - [g] ∈ f^⊥`.
pub fn reduce_mod_apolar(g: &Poly, q: &QuotientStructure) -> Result<Poly> {
    Ok(q.from_coefficients(&q.residue_coefficients(g)?))
}

/// Fills in `A_ℓ(i, j) = coeff_{m_j}([t_ℓ · m_i])` for every variable `ℓ`.
pub fn multiplication_tables(mut q: QuotientStructure) -> Result<QuotientStructure> {
    let n = q.arity();
    let w = q.dim();
    let mut tables = Vec::with_capacity(n);
    for var in 0..n {
        let t = Monomial::var(n, var);
        let mut rows = Vec::with_capacity(w);
        for m in &q.normal_set {
            rows.push(q.residue_of_monomial(&m.mul(&t))?);
        }
        tables.push(QMatrix::from_rows(rows));
    }
    q.tables = tables;
    Ok(q)
}

/// Derivative basis, normal set and multiplication tables of a nonzero homogeneous `f`.
pub fn quotient_structure(f: &Poly) -> Result<QuotientStructure> {
    if let Some((low, high)) = f.homogeneity_witness() {
        return Err(Error::NotHomogeneous { low, high });
    }
    multiplication_tables(normal_set(derivative_basis(f)?)?)
}

/// `g(A_1, …, A_r)` for commuting square matrices.
pub fn eval_at_tables(g: &Poly, tables: &[QMatrix]) -> Result<QMatrix> {
    if g.arity() != tables.len() {
        return Err(Error::ArityMismatch {
            expected: tables.len(),
            found: g.arity(),
        });
    }
    let w = tables.first().map_or(0, QMatrix::rows);
    let mut out = QMatrix::zeros(w, w);
    for (m, c) in g.terms() {
        let mut prod = QMatrix::identity(w);
        for (var, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                prod = prod.checked_mul(&tables[var].pow(e))?;
            }
        }
        out = out.checked_add(&prod.scale(c))?;
    }
    Ok(out)
}

/// Multiplication table of `t` in `Q[t]/⟨p⟩`: row `i` holds the coefficients of
/// `t^{i+1} mod p` over `1, t, …, t^{d-1}`.
pub fn univariate_mult_table(p: &Poly) -> Result<QMatrix> {
    if p.arity() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: p.arity(),
        });
    }
    let d = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d as usize,
    };
    let lead = p.coeff(&Monomial::var_pow(1, 0, d as u32));
    let mut a = QMatrix::zeros(d, d);
    for i in 0..d - 1 {
        a[(i, i + 1)] = Rational::from_integer(1.into());
    }
    for j in 0..d {
        a[(d - 1, j)] = -p.coeff(&Monomial::var_pow(1, 0, j as u32)) / &lead;
    }
    Ok(a)
}

/// Is `D_h f ≡ 0`?
pub fn apolar_member(h: &Poly, f: &Poly) -> Result<bool> {
    Ok(apply_operator(h, f)?.is_zero())
}
