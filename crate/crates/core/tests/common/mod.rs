//! Shared corpora and independent oracles for the integration tests.
#![allow(dead_code)]

use num_rational::BigRational;
use roabp::poly::{rat, Poly};
use roabp::sampling::{random_homogeneous, random_non_homogeneous, seeded};

/// 50 homogeneous polynomials with n ≤ 4, d ≤ 3, at most 8 terms.
pub fn homogeneous_corpus() -> Vec<Poly> {
    let mut rng = seeded(2024);
    (0..50)
        .map(|i| {
            let n = 1 + i % 4;
            let d = 1 + ((i / 4) % 3) as u32;
            random_homogeneous(&mut rng, n, d, 8)
        })
        .collect()
}

/// 25 polynomials with at least two nonzero homogeneous components.
pub fn non_homogeneous_corpus() -> Vec<Poly> {
    let mut rng = seeded(7);
    (0..25)
        .map(|i| random_non_homogeneous(&mut rng, 1 + i % 3, 1 + (i % 3) as u32 + 1, 6))
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return rat(1);
    }
    let mut total = rat(0);
    for j in 0..n {
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}
