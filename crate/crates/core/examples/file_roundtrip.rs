//! The text formats used by the `roabp` binary: polynomial file in, ABP file
//! out, parsed back and verified.

use roabp::abp::Abp;
use roabp::construct::build_commro_general;
use roabp::linalg::Limits;
use roabp::poly::PolyFile;

const INPUT: &str = "\
# a cubic in three variables
vars: a b c
a^2*b - 3/2*b*c^2
  + a*b*c
";

fn main() -> roabp::Result<()> {
    let file = PolyFile::parse(INPUT)?;
    let abp = build_commro_general(&file.poly, &file.vars, &Limits::default())?;
    let text = abp.to_string();
    println!("{}", text.lines().take(8).collect::<Vec<_>>().join("\n"));
    println!("... ({} lines)", text.lines().count());

    let back = Abp::parse(&text)?;
    assert_eq!(back, abp);
    assert_eq!(back.to_string(), text);
    let expanded = back.expand(&Limits::default())?;
    println!("re-parsed ABP computes {}", expanded.display(&file.vars));
    assert_eq!(expanded, file.poly);
    print!("{}", PolyFile::new(file.vars.clone(), expanded));
    Ok(())
}
