//! Commutative set-multilinear ABP for Det_n with one linear layer per row.

use roabp::construct::build_smabp;
use roabp::det::{det_polynomial, det_var_names};
use roabp::linalg::Limits;
use roabp::sampling::{random_point, seeded};

fn main() -> roabp::Result<()> {
    let n = 3;
    let f = det_polynomial(n);
    let names = det_var_names(n);
    let rows: Vec<Vec<usize>> = (0..n).map(|i| (i * n..(i + 1) * n).collect()).collect();
    let abp = build_smabp(&f, &names, &rows, &Limits::default())?;
    println!(
        "Det_{n} smABP: width {}, {} layers, commuting: {}",
        abp.width(),
        abp.layers().len(),
        abp.check_kind()
    );

    let mut rng = seeded(12);
    for _ in 0..3 {
        let p = random_point(&mut rng, n * n);
        let shuffled = abp.permute_order(&[2, 0, 1])?;
        println!(
            "{} == {} == {}",
            abp.eval(&p)?,
            shuffled.eval(&p)?,
            f.eval(&p)?
        );
    }
    let text = abp.to_string();
    for line in text.lines().take(6) {
        println!("{line}");
    }
    Ok(())
}
