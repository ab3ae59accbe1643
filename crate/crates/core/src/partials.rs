//! The span of all partial derivatives of a polynomial and the pairing
//! `⟨g, h⟩ = Σ_e coeff_g(x^e) · e! · coeff_h(x^e)` between polynomials and
//! derivative operators.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, SparseEchelon};
use crate::poly::{Monomial, Poly, Rational};

/// A basis `g_1, …, g_w` of `span{∂_e f}`, with `g_1 = f`.
#[derive(Clone, Debug)]
pub struct DerivBasis {
    source: Poly,
    basis: Vec<Poly>,
    monomials: Vec<Monomial>,
    matrix: QMatrix,
    echelon: SparseEchelon<Monomial>,
}

impl DerivBasis {
    pub fn source(&self) -> &Poly {
        &self.source
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn arity(&self) -> usize {
        self.source.arity()
    }

    /// Column labels of [`Self::coefficient_matrix`], ascending deg-lex.
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Row `i` holds the coefficients of `g_i` over [`Self::monomials`].
    pub fn coefficient_matrix(&self) -> &QMatrix {
        &self.matrix
    }

    /// Is `g` in the span of the derivatives?
    pub fn contains(&self, g: &Poly) -> bool {
        g.arity() == self.arity() && !self.echelon.is_independent(&sparse(g))
    }
}

fn sparse(p: &Poly) -> BTreeMap<Monomial, Rational> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Breadth-first closure under single-variable derivatives, keeping a
/// derivative only when it is independent of those already kept.
///
/// Within each derivative order the candidates `∂_m f` are visited in
/// ascending deg-lex order of `m`.
pub fn derivative_basis(f: &Poly) -> Result<DerivBasis> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.arity();
    let mut echelon = SparseEchelon::new();
    echelon.insert(sparse(f));
    let mut basis = vec![f.clone()];
    let mut level: BTreeMap<Monomial, Poly> = BTreeMap::from([(Monomial::one(n), f.clone())]);
    while !level.is_empty() {
        let mut candidates = BTreeMap::new();
        for (m, g) in &level {
            for j in 0..n {
                let d = g.derive_var(j);
                if !d.is_zero() {
                    candidates.entry(m.mul(&Monomial::var(n, j))).or_insert(d);
                }
            }
        }
        level = BTreeMap::new();
        for (m, d) in candidates {
            if echelon.insert(sparse(&d)) {
                basis.push(d.clone());
                level.insert(m, d);
            }
        }
    }

    let mut monomials: Vec<Monomial> = basis.iter().flat_map(|g| g.monomials().cloned()).collect();
    monomials.sort();
    monomials.dedup();
    let matrix = QMatrix::from_rows(
        basis
            .iter()
            .map(|g| monomials.iter().map(|m| g.coeff(m)).collect())
            .collect(),
    );
    Ok(DerivBasis {
        source: f.clone(),
        basis,
        monomials,
        matrix,
        echelon,
    })
}

/// Dimension of the span of all partial derivatives; 0 for the zero polynomial.
pub fn dpd(f: &Poly) -> usize {
    match derivative_basis(f) {
        Ok(b) => b.dim(),
        Err(_) => 0,
    }
}

/// `(D_g h)(0) = Σ_e coeff_g(x^e) · e! · coeff_h(x^e)`; symmetric in `g` and `h`.
pub fn pairing(g: &Poly, h: &Poly) -> Result<Rational> {
    if g.arity() != h.arity() {
        return Err(Error::ArityMismatch {
            expected: g.arity(),
            found: h.arity(),
        });
    }
    let (small, large) = if g.len() <= h.len() { (g, h) } else { (h, g) };
    let mut total = Rational::from_integer(0.into());
    for (m, c) in small.terms() {
        let other = large.coeff(m);
        if other != Rational::from_integer(0.into()) {
            total += c * other * Rational::from_integer(m.factorial());
        }
    }
    Ok(total)
}

/// `[⟨m, g_1⟩, …, ⟨m, g_w⟩]`: entry `i` is `e! · coeff_{g_i}(m)` for `m = x^e`.
pub fn eval_vector(m: &Monomial, basis: &DerivBasis) -> Result<Vec<Rational>> {
    if m.arity() != basis.arity() {
        return Err(Error::ArityMismatch {
            expected: basis.arity(),
            found: m.arity(),
        });
    }
    let fact = Rational::from_integer(m.factorial());
    Ok(basis.basis.iter().map(|g| g.coeff(m) * &fact).collect())
}

/// Applies the derivative operator `D_h = Σ_m coeff_h(m) ∂_m` to `f`.
pub fn apply_operator(h: &Poly, f: &Poly) -> Result<Poly> {
    if h.arity() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: h.arity(),
        });
    }
    let mut out = Poly::zero(f.arity());
    for (m, c) in h.terms() {
        for (mono, coeff) in f.derive(m).terms() {
            out.add_term(mono.clone(), c * coeff);
        }
    }
    Ok(out)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat};

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn det2() -> Poly {
        parse_poly(
            "x1_1*x2_2 - x1_2*x2_1",
            &names(&["x1_1", "x1_2", "x2_1", "x2_2"]),
        )
        .unwrap()
    }

    #[test]
    fn basis_of_x1x2() {
        let f = parse_poly("x1*x2", &names(&["x1", "x2"])).unwrap();
        let b = derivative_basis(&f).unwrap();
        assert_eq!(b.dim(), 4);
        assert_eq!(b.basis()[0], f);
        assert_eq!(b.basis()[1], Poly::var(2, 1));
        assert_eq!(b.basis()[2], Poly::var(2, 0));
        assert_eq!(b.basis()[3], Poly::one(2));
        assert_eq!(b.coefficient_matrix().rank(), 4);
    }

    #[test]
    fn univariate_power_and_determinants() {
        for d in 0..6 {
            let f = Poly::var(1, 0).pow(d);
            assert_eq!(dpd(&f), d as usize + 1);
        }
        assert_eq!(dpd(&det2()), 6);
        assert_eq!(dpd(&crate::det::det_polynomial(3)), 20);
    }

    #[test]
    fn dpd_edge_cases() {
        assert_eq!(dpd(&Poly::zero(3)), 0);
        assert_eq!(dpd(&Poly::constant(2, rat(5))), 1);
        assert!(matches!(
            derivative_basis(&Poly::zero(1)),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn pairing_examples() {
        let v = names(&["t1", "t2"]);
        let t1t2 = parse_poly("t1*t2", &v).unwrap();
        let t1sq = parse_poly("t1^2", &v).unwrap();
        assert_eq!(pairing(&t1t2, &t1t2).unwrap(), rat(1));
        assert_eq!(pairing(&t1sq, &t1t2).unwrap(), rat(0));
        assert_eq!(pairing(&det2(), &det2()).unwrap(), rat(2));
        // e! weighting: <t1^2, 3 t1^2> = 2 * 3
        assert_eq!(pairing(&t1sq, &t1sq.scale(&rat(3))).unwrap(), rat(6));
        assert!(pairing(&t1t2, &Poly::var(3, 0)).is_err());
    }

    #[test]
    fn eval_vector_examples() {
        let f = parse_poly("x1*x2", &names(&["x1", "x2"])).unwrap();
        let b = derivative_basis(&f).unwrap();
        let r = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
        assert_eq!(
            eval_vector(&Monomial::one(2), &b).unwrap(),
            r(&[0, 0, 0, 1])
        );
        assert_eq!(
            eval_vector(&Monomial::from_exponents(vec![1, 1]), &b).unwrap(),
            r(&[1, 0, 0, 0])
        );
        assert_eq!(
            eval_vector(&Monomial::from_exponents(vec![2, 0]), &b).unwrap(),
            r(&[0, 0, 0, 0])
        );
        assert!(eval_vector(&Monomial::one(3), &b).is_err());
    }

    #[test]
    fn operator_application() {
        let v = names(&["t1", "t2"]);
        let f = parse_poly("t1^2*t2", &v).unwrap();
        let h = parse_poly("t1*t2 - t1^2", &v).unwrap();
        // ∂1∂2 f - ∂1² f = 2 t1 - 2 t2
        assert_eq!(
            apply_operator(&h, &f).unwrap(),
            parse_poly("2*t1 - 2*t2", &v).unwrap()
        );
    }
}
