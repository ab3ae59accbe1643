//! The apolar quotient of a form: derivative basis, normal set, tables, reduction.
//!
//! Run with `cargo run --example apolar_quotient -- "x^3 + 2*x*y^2 - y^3"`.

use roabp::apolar::{apolar_member, quotient_structure, reduce_mod_apolar};
use roabp::poly::parse_poly;

fn main() -> roabp::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "x^3 + 2*x*y^2 - y^3".into());
    let names = vec!["x".to_string(), "y".to_string()];
    let f = parse_poly(&text, &names)?;
    let q = quotient_structure(&f)?;

    println!("f = {}", f.display(&names));
    println!("derivative basis ({}):", q.dim());
    for g in q.basis().basis() {
        println!("  {}", g.display(&names));
    }
    let normal: Vec<String> = q
        .normal_set()
        .iter()
        .map(|m| m.display(&names).to_string())
        .collect();
    println!("normal set: {}", normal.join(", "));
    for (name, table) in names.iter().zip(q.tables()) {
        println!("multiplication by {name}:\n{table}");
    }

    for probe in ["x^2*y", "y^3", "x^4", "x*y - 3"] {
        let h = parse_poly(probe, &names)?;
        let r = reduce_mod_apolar(&h, &q)?;
        println!(
            "[{probe}] = {}   (in f-perp: {})",
            r.display(&names),
            apolar_member(&h, &f)?
        );
    }
    Ok(())
}
