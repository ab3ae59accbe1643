//! Sparse multivariate polynomials with exact rational coefficients.

mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use monomial::{deglex_compare, factorial, monomials_up_to_degree, Monomial, MonomialDisplay};
pub use parse::{parse_poly, print_poly, PolyFile};

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A polynomial in a fixed number of variables. Terms are kept in ascending
/// deg-lex order and no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(arity: usize) -> Self {
        Poly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::term(Monomial::one(arity), c)
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn var(arity: usize, index: usize) -> Self {
        Self::term(Monomial::var(arity, index), Rational::one())
    }

    pub fn term(mono: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero(mono.arity());
        p.add_term(mono, c);
        p
    }

    /// Builds a polynomial from possibly repeated terms; repeated monomials are summed.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero(arity);
        for (m, c) in terms {
            assert_eq!(m.arity(), arity, "term arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending deg-lex order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.keys()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn trailing_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest exponent of variable `index` over the support.
    pub fn individual_degree(&self, index: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(index))
            .max()
            .unwrap_or(0)
    }

    pub fn max_individual_degree(&self) -> u32 {
        (0..self.arity)
            .map(|i| self.individual_degree(i))
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity_witness().is_none()
    }

    /// Lowest and highest degrees present, if they differ.
    pub(crate) fn homogeneity_witness(&self) -> Option<(u32, u32)> {
        let low = self.terms.keys().map(Monomial::degree).min()?;
        let high = self.terms.keys().map(Monomial::degree).max()?;
        (low != high).then_some((low, high))
    }

    fn check_arity(&self, other: &Poly) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = Poly::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.arity);
        }
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Poly {
        Poly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(self.arity), |acc, _| &acc * self)
    }

    /// Iterated partial derivative `∂_m f`; `derive(f, 1) == f`.
    pub fn derive(&self, mono: &Monomial) -> Poly {
        assert_eq!(mono.arity(), self.arity, "derivative arity mismatch");
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            if let Some(rest) = mono.quotient_of(m) {
                let falling = m.factorial() / rest.factorial();
                out.add_term(rest, c * Rational::from_integer(falling));
            }
        }
        out
    }

    pub fn derive_var(&self, index: usize) -> Poly {
        self.derive(&Monomial::var(self.arity, index))
    }

    /// Exact value at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    value *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Components indexed by degree `0..=deg(f)`; empty for the zero polynomial.
    pub fn homogeneous_components(&self) -> Vec<Poly> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let mut comps = vec![Poly::zero(self.arity); deg as usize + 1];
        for (m, c) in &self.terms {
            comps[m.degree() as usize]
                .terms
                .insert(m.clone(), c.clone());
        }
        comps
    }

    /// `f(αx_1, …, αx_n)`.
    pub fn scale_variables(&self, alpha: &Rational) -> Poly {
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(
                m.clone(),
                c * num_traits::pow(alpha.clone(), m.degree() as usize),
            );
        }
        out
    }

    /// Re-indexes variables: variable `i` of `self` becomes variable `map[i]` of the result.
    pub fn remap_variables(&self, new_arity: usize, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.arity);
        let mut out = Poly::zero(new_arity);
        for (m, c) in &self.terms {
            let mut exps = vec![0; new_arity];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[map[i]] += e;
            }
            out.add_term(Monomial::from_exponents(exps), c.clone());
        }
        out
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

impl Monomial {
    pub fn into_poly(self) -> Poly {
        Poly::term(self, Rational::one())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

/// Leading term first, e.g. `x1*x2^2 - 3/2*x3`.
pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.display(self.names))?;
            } else {
                write!(f, "{mag}*{}", m.display(self.names))?;
            }
        }
        Ok(())
    }
}
