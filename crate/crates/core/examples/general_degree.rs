//! Non-homogeneous input: a direct sum of one commutative ROABP per degree.

use roabp::construct::build_commro_general;
use roabp::linalg::Limits;
use roabp::partials::dpd;
use roabp::poly::parse_poly;

fn main() -> roabp::Result<()> {
    let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    for text in ["x*y + 1", "x^2 + x", "x*y*z - 2*x^2 + y - 5"] {
        let f = parse_poly(text, &names)?;
        let abp = build_commro_general(&f, &names, &Limits::default())?;
        let d = f.degree().unwrap_or(0) as usize;
        let components: Vec<usize> = f
            .homogeneous_components()
            .iter()
            .filter(|h| !h.is_zero())
            .map(dpd)
            .collect();
        println!(
            "{text}: width {} = sum of component dpds {:?}; bound (d+1)^2 dpd = {}",
            abp.width(),
            components,
            (d + 1) * (d + 1) * dpd(&f)
        );
        assert_eq!(abp.expand(&Limits::default())?, f);
    }
    Ok(())
}
