//! Univariate quotient Q[t]/<p>: the multiplication table and its minimal polynomial.

use roabp::apolar::{eval_at_tables, univariate_mult_table};
use roabp::linalg::minimal_polynomial;
use roabp::poly::parse_poly;

fn main() -> roabp::Result<()> {
    let t = vec!["t".to_string()];
    let p = parse_poly("t^5 - 10*t^4 - 7*t^3 + 2*t^2 - 3", &t)?;
    let a = univariate_mult_table(&p)?;
    println!("table of t modulo {}:\n{a}", p.display(&t));
    println!(
        "minimal polynomial: {}",
        minimal_polynomial(&a)?.display(&t)
    );

    // the first row of g(A) is the residue of g
    let g = parse_poly("t^7 + t", &t)?;
    let ga = eval_at_tables(&g, std::slice::from_ref(&a))?;
    let row: Vec<String> = ga.row(0).iter().map(ToString::to_string).collect();
    println!(
        "[{}] has coefficients {} over 1, t, ..., t^4",
        g.display(&t),
        row.join(" ")
    );
    Ok(())
}
