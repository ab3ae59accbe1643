//! Read-once oblivious ABPs and their structured variants.
//!
//! An ABP computes `uᵀ · M_{σ(1)} ⋯ M_{σ(k)} · v` where each layer `M_j` is a
//! matrix polynomial `Σ A · x_var^power`. ROABP-style kinds have one layer per
//! variable; set-multilinear ABPs have one linear layer per part.

mod format;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{commute, Limits, PolyMatrix, QMatrix};
use crate::poly::{Monomial, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AbpKind {
    General,
    Commutative,
    Diagonal,
    SetMultilinear,
}

impl AbpKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AbpKind::General => "general",
            AbpKind::Commutative => "commutative",
            AbpKind::Diagonal => "diagonal",
            AbpKind::SetMultilinear => "set_multilinear",
        }
    }

    /// One layer per variable (as opposed to one per part).
    pub fn is_read_once(self) -> bool {
        !matches!(self, AbpKind::SetMultilinear)
    }
}

impl fmt::Display for AbpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AbpKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "general" => AbpKind::General,
            "commutative" => AbpKind::Commutative,
            "diagonal" => AbpKind::Diagonal,
            "set_multilinear" => AbpKind::SetMultilinear,
            other => {
                return Err(Error::Format {
                    line: 0,
                    msg: format!("unknown ABP kind `{other}`"),
                })
            }
        })
    }
}

/// One coefficient matrix of a layer: contributes `matrix · x_var^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerTerm {
    pub var: usize,
    pub power: u32,
    pub matrix: QMatrix,
}

/// A matrix polynomial over the variables in `vars`. Terms are kept sorted by
/// `(var, power)`; absent powers are zero matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    pub vars: Vec<usize>,
    pub terms: Vec<LayerTerm>,
}

impl Layer {
    /// A layer reading a single variable, from `(power, matrix)` pairs.
    pub fn univariate(var: usize, coeffs: impl IntoIterator<Item = (u32, QMatrix)>) -> Layer {
        let mut terms: Vec<LayerTerm> = coeffs
            .into_iter()
            .map(|(power, matrix)| LayerTerm { var, power, matrix })
            .collect();
        terms.sort_by_key(|t| (t.var, t.power));
        Layer {
            vars: vec![var],
            terms,
        }
    }

    /// A linear layer `Σ_k A_k · x_k` over the variables of one part.
    pub fn linear(vars: Vec<usize>, coeffs: impl IntoIterator<Item = (usize, QMatrix)>) -> Layer {
        let mut terms: Vec<LayerTerm> = coeffs
            .into_iter()
            .map(|(var, matrix)| LayerTerm {
                var,
                power: 1,
                matrix,
            })
            .collect();
        terms.sort_by_key(|t| (t.var, t.power));
        Layer { vars, terms }
    }

    pub fn as_poly_matrix(&self, width: usize, arity: usize) -> PolyMatrix {
        let monos: Vec<Monomial> = self
            .terms
            .iter()
            .map(|t| Monomial::var_pow(arity, t.var, t.power))
            .collect();
        PolyMatrix::from_terms(
            width,
            width,
            arity,
            self.terms.iter().zip(&monos).map(|(t, m)| (&t.matrix, m)),
        )
    }

    /// `x · M(point)` for a row vector `x`.
    fn apply_row(&self, row: &[Rational], point: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); row.len()];
        for t in &self.terms {
            let scalar = num_traits::pow(point[t.var].clone(), t.power as usize);
            if scalar.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(t.matrix.left_mul_vec(row)) {
                *o += &scalar * x;
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abp {
    kind: AbpKind,
    var_names: Vec<String>,
    order: Vec<usize>,
    layers: Vec<Layer>,
    u: Vec<Rational>,
    v: Vec<Rational>,
}

impl Abp {
    /// Validates the shape (dimensions, read-once layering) but not the
    /// kind-specific structure; see [`Abp::check_kind`].
    pub fn new(
        kind: AbpKind,
        var_names: Vec<String>,
        layers: Vec<Layer>,
        u: Vec<Rational>,
        v: Vec<Rational>,
    ) -> Result<Abp> {
        let order = (0..layers.len()).collect();
        let abp = Abp {
            kind,
            var_names,
            order,
            layers,
            u,
            v,
        };
        abp.validate()?;
        Ok(abp)
    }

    fn validate(&self) -> Result<()> {
        let w = self.u.len();
        let n = self.var_names.len();
        if self.v.len() != w {
            return Err(Error::DimensionMismatch(format!(
                "u has length {w}, v has length {}",
                self.v.len()
            )));
        }
        let mut owner = vec![None; n];
        for (li, layer) in self.layers.iter().enumerate() {
            if self.kind.is_read_once() && layer.vars != [li] {
                return Err(Error::DimensionMismatch(format!(
                    "layer {li} of a read-once ABP must read exactly variable {li}"
                )));
            }
            for &var in &layer.vars {
                if var >= n {
                    return Err(Error::DimensionMismatch(format!(
                        "variable index {var} out of range"
                    )));
                }
                if owner[var].replace(li).is_some() {
                    return Err(Error::InvalidPartition(format!(
                        "variable `{}` is read by more than one layer",
                        self.var_names[var]
                    )));
                }
            }
            for t in &layer.terms {
                if !layer.vars.contains(&t.var) {
                    return Err(Error::DimensionMismatch(format!(
                        "layer {li} has a term in variable `{}` it does not read",
                        self.var_names[t.var]
                    )));
                }
                if t.matrix.rows() != w || t.matrix.cols() != w {
                    return Err(Error::DimensionMismatch(format!(
                        "coefficient matrix is {}x{}, width is {w}",
                        t.matrix.rows(),
                        t.matrix.cols()
                    )));
                }
            }
        }
        if let Some(var) = owner.iter().position(Option::is_none) {
            return Err(Error::InvalidPartition(format!(
                "variable `{}` is not read by any layer",
                self.var_names[var]
            )));
        }
        check_permutation(&self.order, self.layers.len())
    }

    pub fn kind(&self) -> AbpKind {
        self.kind
    }

    pub fn width(&self) -> usize {
        self.u.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn arity(&self) -> usize {
        self.var_names.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn u(&self) -> &[Rational] {
        &self.u
    }

    pub fn v(&self) -> &[Rational] {
        &self.v
    }

    pub fn coefficient_matrices(&self) -> impl Iterator<Item = &QMatrix> {
        self.layers
            .iter()
            .flat_map(|l| l.terms.iter().map(|t| &t.matrix))
    }

    /// `uᵀ · M_{σ(1)}(p) ⋯ M_{σ(k)}(p) · v`, multiplying a row vector through the layers.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: point.len(),
            });
        }
        let mut row = self.u.clone();
        for &li in &self.order {
            row = self.layers[li].apply_row(&row, point);
        }
        Ok(row.iter().zip(&self.v).map(|(a, b)| a * b).sum())
    }

    /// The polynomial computed, by symbolic matrix products.
    pub fn expand(&self, limits: &Limits) -> Result<Poly> {
        let n = self.arity();
        let w = self.width();
        let mut row = PolyMatrix::from_rows(
            n,
            vec![self
                .u
                .iter()
                .map(|c| Poly::constant(n, c.clone()))
                .collect()],
        )?;
        if w == 0 {
            return Ok(Poly::zero(n));
        }
        for &li in &self.order {
            row = row.checked_mul(&self.layers[li].as_poly_matrix(w, n))?;
            limits.check_terms("symbolic expansion", row.total_terms())?;
        }
        let mut out = Poly::zero(n);
        for (j, c) in self.v.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &row.get(0, j).scale(c);
            }
        }
        Ok(out)
    }

    /// Reorders the layers: position `i` of the result holds what was at
    /// position `sigma[i]`. The identity permutation leaves the ABP unchanged.
    pub fn permute_order(&self, sigma: &[usize]) -> Result<Abp> {
        check_permutation(sigma, self.order.len())?;
        let mut out = self.clone();
        out.order = sigma.iter().map(|&i| self.order[i]).collect();
        Ok(out)
    }

    /// Sets the layer order directly (a permutation of layer indices).
    pub fn with_order(mut self, order: Vec<usize>) -> Result<Abp> {
        check_permutation(&order, self.layers.len())?;
        self.order = order;
        Ok(self)
    }

    /// Verifies the structural invariant of the declared kind exactly.
    pub fn check_kind(&self) -> bool {
        match self.kind {
            AbpKind::General => true,
            AbpKind::Commutative => self.all_commute(),
            AbpKind::Diagonal => self.coefficient_matrices().all(QMatrix::is_diagonal),
            AbpKind::SetMultilinear => {
                self.layers
                    .iter()
                    .all(|l| l.terms.iter().all(|t| t.power == 1))
                    && self.all_commute()
            }
        }
    }

    fn all_commute(&self) -> bool {
        let mut seen = HashSet::new();
        let distinct: Vec<&QMatrix> = self
            .coefficient_matrices()
            .filter(|m| !m.is_scalar())
            .filter(|m| seen.insert(*m))
            .collect();
        distinct.iter().enumerate().all(|(i, a)| {
            distinct[i + 1..]
                .iter()
                .all(|b| commute(a, b).unwrap_or(false))
        })
    }
}

pub(crate) fn check_permutation(sigma: &[usize], n: usize) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "expected {n} entries, found {}",
            sigma.len()
        )));
    }
    let mut seen = vec![false; n];
    for &i in sigma {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidPermutation(format!(
                "{sigma:?} is not a permutation of 0..{n}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
