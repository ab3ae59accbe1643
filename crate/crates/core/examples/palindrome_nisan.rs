//! Nisan cut ranks of (x1+y1)...(xn+yn): width 2 interleaved, 2^n separated.

use roabp::det::{palindrome, palindrome_var_names};
use roabp::linalg::Limits;
use roabp::nisan::nisan_width;
use roabp::partials::dpd;

fn main() -> roabp::Result<()> {
    let limits = Limits::default();
    for n in 1..=6 {
        let f = palindrome(n);
        let interleaved: Vec<usize> = (0..n).flat_map(|i| [i, n + i]).collect();
        let separated: Vec<usize> = (0..2 * n).collect();
        let a = nisan_width(&f, &interleaved, &limits)?;
        let b = nisan_width(&f, &separated, &limits)?;
        println!(
            "n = {n}: interleaved width {} (size {}), separated width {} (size {}), dpd {}",
            a.width,
            a.size,
            b.width,
            b.size,
            dpd(&f)
        );
    }
    let names = palindrome_var_names(3);
    let r = nisan_width(&palindrome(3), &[0, 1, 2, 3, 4, 5], &limits)?;
    println!("cuts along {}: {:?}", names.join(","), r.cut_ranks);
    Ok(())
}
