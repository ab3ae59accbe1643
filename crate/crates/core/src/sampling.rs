//! Seeded random points, permutations and polynomials.
//!
//! Everything here is driven by a ChaCha8 generator so that a seed reproduces
//! the same draws on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{rat, Monomial, Poly, Rational};

pub type SeededRng = ChaCha8Rng;

pub const POINT_RANGE: i64 = 1_000_000;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer-valued rational point with coordinates in `[-10^6, 10^6]`.
pub fn random_point(rng: &mut SeededRng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| rat(rng.gen_range(-POINT_RANGE..=POINT_RANGE)))
        .collect()
}

pub fn random_permutation(rng: &mut SeededRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn random_coefficient(rng: &mut SeededRng) -> Rational {
    loop {
        let c = rng.gen_range(-5i64..=5);
        if c != 0 {
            return rat(c);
        }
    }
}

fn random_monomial_of_degree(rng: &mut SeededRng, n: usize, d: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..d {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(exps)
}

/// Up to `max_terms` terms of total degree exactly `d`; never zero when `max_terms > 0`.
pub fn random_homogeneous(rng: &mut SeededRng, n: usize, d: u32, max_terms: usize) -> Poly {
    loop {
        let terms = rng.gen_range(1..=max_terms);
        let p = Poly::from_terms(
            n,
            (0..terms).map(|_| {
                (
                    random_monomial_of_degree(rng, n, d),
                    random_coefficient(rng),
                )
            }),
        );
        if !p.is_zero() {
            return p;
        }
    }
}

/// Up to `max_terms` terms of total degree at most `d` (may be zero).
pub fn random_poly_up_to_degree(rng: &mut SeededRng, n: usize, d: u32, max_terms: usize) -> Poly {
    let terms = rng.gen_range(1..=max_terms.max(1));
    Poly::from_terms(
        n,
        (0..terms).map(|_| {
            let deg = rng.gen_range(0..=d);
            (
                random_monomial_of_degree(rng, n, deg),
                random_coefficient(rng),
            )
        }),
    )
}

/// A nonzero polynomial of degree exactly `d` with at least two distinct
/// degrees present (so it is not homogeneous), for `d ≥ 1`.
pub fn random_non_homogeneous(rng: &mut SeededRng, n: usize, d: u32, max_terms: usize) -> Poly {
    assert!(d >= 1);
    loop {
        let top = random_homogeneous(rng, n, d, max_terms.max(2) / 2);
        let low_deg = rng.gen_range(0..d);
        let rest = random_poly_up_to_degree(rng, n, low_deg, max_terms.max(2) / 2);
        let p = &top + &rest;
        if p.degree() == Some(d) && !p.is_homogeneous() {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible() {
        let a = random_point(&mut seeded(7), 5);
        let b = random_point(&mut seeded(7), 5);
        assert_eq!(a, b);
        let p = random_homogeneous(&mut seeded(3), 3, 2, 6);
        assert!(p.is_homogeneous() && p.degree() == Some(2));
        let q = random_non_homogeneous(&mut seeded(3), 3, 3, 6);
        assert!(!q.is_homogeneous() && q.degree() == Some(3));
        let mut perm = random_permutation(&mut seeded(1), 6);
        perm.sort();
        assert_eq!(perm, (0..6).collect::<Vec<_>>());
    }
}
