//! Diagonal ROABP for x1...xn from its sign Waring decomposition.
//!
//! Run with `cargo run --example waring_diagro -- 4`.

use roabp::construct::{build_diagro_from_waring, default_var_names, waring_of_monomial};
use roabp::linalg::{Limits, QMatrix};

fn main() -> roabp::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let w = waring_of_monomial(n)?;
    print!("{w}");
    let names = default_var_names(n);
    let abp = build_diagro_from_waring(&w, &names, &Limits::default())?;
    let bound = w.terms.len() * (n * n + 1);
    println!("width {} (bound s(nd+1) = {bound})", abp.width());
    println!(
        "all layers diagonal: {}",
        abp.coefficient_matrices().all(QMatrix::is_diagonal)
    );
    let f = abp.expand(&Limits::default())?;
    println!("expands to {}", f.display(&names));
    Ok(())
}
