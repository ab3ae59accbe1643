use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A power product `x^e` over a fixed number of variables.
///
/// The derived `Ord` is deg-lex for the ascending variable chain
/// `x_0 ≺ x_1 ≺ … ≺ x_{n-1}`: total degree first, then the exponent of the
/// highest variable, then the next highest, and so on. `1` is the least
/// monomial and the order refines divisibility.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
        }
    }

    pub fn var(arity: usize, index: usize) -> Self {
        Self::var_pow(arity, index, 1)
    }

    pub fn var_pow(arity: usize, index: usize, power: u32) -> Self {
        assert!(
            index < arity,
            "variable {index} out of range for arity {arity}"
        );
        let mut exps = vec![0; arity];
        exps[index] = power;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.arity() == other.arity() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        })
    }

    /// `e! = e_1! e_2! ⋯ e_n!`.
    pub fn factorial(&self) -> BigInt {
        self.exps.iter().map(|&e| factorial(e)).product()
    }

    /// Keeps only the listed coordinates, in the listed order.
    pub fn restrict(&self, indices: &[usize]) -> Monomial {
        Monomial {
            exps: indices.iter().map(|&i| self.exps[i]).collect(),
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
            .then_with(|| self.arity().cmp(&other.arity()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Deg-lex comparison with an explicit arity check.
pub fn deglex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            expected: a.arity(),
            found: b.arity(),
        });
    }
    Ok(a.cmp(b))
}

/// All monomials of total degree at most `max_degree`, ascending deg-lex.
pub fn monomials_up_to_degree(arity: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut exps = vec![0u32; arity];
        of_degree(&mut exps, 0, d, &mut out);
    }
    out.sort();
    out
}

fn of_degree(exps: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos == exps.len() {
        if remaining == 0 {
            out.push(Monomial::from_exponents(exps.clone()));
        }
        return;
    }
    for e in 0..=remaining {
        exps[pos] = e;
        of_degree(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn one_is_least_and_chain_ascends() {
        assert_eq!(
            deglex_compare(&m(&[0, 0]), &m(&[1, 0])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            deglex_compare(&m(&[1, 0]), &m(&[0, 1])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn degree_two_tie_break() {
        // Degree-2 monomials in two variables, ascending: t1^2, t1*t2, t2^2.
        let all: Vec<_> = monomials_up_to_degree(2, 2)
            .into_iter()
            .filter(|x| x.degree() == 2)
            .collect();
        assert_eq!(all, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        assert_eq!(
            deglex_compare(&m(&[0, 2]), &m(&[1, 1])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        assert!(deglex_compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn total_order_refines_divisibility() {
        let all = monomials_up_to_degree(3, 4);
        assert_eq!(all[0], Monomial::one(3));
        for a in &all {
            for b in &all {
                if a.divides(b) {
                    assert!(a <= b, "{a:?} divides {b:?}");
                }
                // multiplicative
                let c = m(&[1, 0, 2]);
                assert_eq!(a.cmp(b), a.mul(&c).cmp(&b.mul(&c)));
            }
        }
        for w in all.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(m(&[3, 0, 2]).factorial(), BigInt::from(12));
        assert_eq!(factorial(0), BigInt::one());
    }
}
