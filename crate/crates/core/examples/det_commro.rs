//! Commutative ROABPs for the determinant: width C(2n, n), layers I + A x.
//!
//! Run with `cargo run --example det_commro -- 3`.

use roabp::construct::build_commro;
use roabp::det::{det_polynomial, det_var_names};
use roabp::linalg::Limits;
use roabp::partials::dpd;
use roabp::sampling::{random_point, seeded};

fn main() -> roabp::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let f = det_polynomial(n);
    let names = det_var_names(n);
    let abp = build_commro(&f, &names, &Limits::default())?;
    println!("Det_{n}: dpd = {}, ROABP width = {}", dpd(&f), abp.width());

    if n == 2 {
        for layer in abp.layers() {
            let var = &names[layer.vars[0]];
            println!("A for {var}:\n{}", layer.terms[1].matrix);
        }
        println!(
            "u = {:?}",
            abp.u().iter().map(ToString::to_string).collect::<Vec<_>>()
        );
        println!(
            "v = {:?}",
            abp.v().iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }

    let mut rng = seeded(1);
    let reversed: Vec<usize> = (0..n * n).rev().collect();
    let flipped = abp.permute_order(&reversed)?;
    for _ in 0..3 {
        let p = random_point(&mut rng, n * n);
        let (a, b, c) = (abp.eval(&p)?, flipped.eval(&p)?, f.eval(&p)?);
        println!("forward {a}  reversed {b}  Det {c}");
        assert!(a == c && b == c);
    }
    Ok(())
}
