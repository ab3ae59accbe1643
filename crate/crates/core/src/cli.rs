//! The `roabp` command line: generate, analyze, build and verify.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 a size cap was exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use thiserror::Error;

use crate::abp::Abp;
use crate::apolar::quotient_structure;
use crate::construct::{
    build_commro_general, build_diagro_from_waring, build_smabp, default_var_names,
    waring_of_monomial, WaringDecomposition,
};
use crate::det::{
    det_mult_tables, det_normal_set, det_polynomial, det_var_names, palindrome,
    palindrome_var_names, perm_polynomial,
};
use crate::error::Error;
use crate::linalg::Limits;
use crate::nisan::{nisan_width, NisanCutReport};
use crate::partials::derivative_basis;
use crate::poly::{Poly, PolyFile};
use crate::sampling::{random_permutation, random_point, seeded};

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::CapExceeded { .. }) => 3,
            CliError::Lib(Error::Invariant(_)) | CliError::Verification(_) => 1,
            _ => 2,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "roabp",
    version,
    about = "Commutative ROABPs from apolar quotients"
)]
struct Cli {
    /// Largest dense matrix (rows x columns) any command may materialize.
    #[arg(long, global = true, default_value_t = Limits::default().max_matrix_entries)]
    max_entries: usize,
    /// Largest number of polynomial terms a symbolic expansion may reach.
    #[arg(long, global = true, default_value_t = Limits::default().max_expand_terms)]
    max_terms: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the dimension of the space of partial derivatives.
    Dpd {
        poly: PathBuf,
        /// Also print the derivative basis, one polynomial per line.
        #[arg(long)]
        basis: bool,
    },
    /// Print the normal set of the apolar ideal, one monomial per line.
    NormalSet { poly: PathBuf },
    /// Print the multiplication tables of the apolar quotient.
    Tables { poly: PathBuf },
    /// Build an ABP and write it in the `abp v1` format.
    Build {
        kind: BuildKind,
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Parts for `smabp`: variables joined by `,`, parts separated by `;`.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Nisan cut ranks and the optimal ROABP width for a variable order.
    #[command(group(ArgGroup::new("which").required(true).args(["order", "all_orders"])))]
    Nisan {
        poly: PathBuf,
        /// Comma-separated variable names.
        #[arg(long)]
        order: Option<String>,
        /// Report every order (n! of them).
        #[arg(long)]
        all_orders: bool,
    },
    /// Check that an ABP computes a polynomial.
    #[command(group(ArgGroup::new("mode").required(true).args(["expand", "random_eval"])))]
    Verify {
        abp: PathBuf,
        #[arg(long)]
        against: PathBuf,
        /// Compare by exact symbolic expansion.
        #[arg(long)]
        expand: bool,
        /// Compare at this many seeded random rational points.
        #[arg(long, value_name = "K")]
        random_eval: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check this many random layer orders.
        #[arg(long, value_name = "M")]
        any_order: Option<usize>,
    },
    /// Generate polynomials, Waring decompositions or closed-form tables.
    Gen {
        what: GenKind,
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BuildKind {
    Commro,
    Smabp,
    Diagro,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Det,
    Perm,
    Palindrome,
    MonomialWaring,
    DetTables,
}

/// Runs the command line and returns the process exit code. Normal output
/// goes to `out`, diagnostics to stderr.
pub fn run<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{}", e.render());
            } else {
                eprintln!("{}", e.render());
            }
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_poly(path: &Path) -> CliResult<PolyFile> {
    Ok(PolyFile::parse(&read(path)?)?)
}

fn index_of(vars: &[String], name: &str) -> CliResult<usize> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| CliError::Lib(Error::UnknownVariable(name.to_string())))
}

fn parse_partition(text: &str, vars: &[String]) -> CliResult<Vec<Vec<usize>>> {
    text.split(';')
        .map(|part| {
            part.split(',')
                .map(|name| index_of(vars, name.trim()))
                .collect::<CliResult<Vec<_>>>()
        })
        .collect()
}

/// `f` re-indexed to the ABP's variable order; the name sets must agree.
fn align(file: &PolyFile, names: &[String]) -> CliResult<Poly> {
    if file.vars == names {
        return Ok(file.poly.clone());
    }
    if file.vars.len() != names.len() {
        return Err(CliError::Usage(format!(
            "the ABP reads {} variables, the polynomial file declares {}",
            names.len(),
            file.vars.len()
        )));
    }
    let map = file
        .vars
        .iter()
        .map(|v| index_of(names, v))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(file.poly.remap_variables(names.len(), &map))
}

fn print_report<W: Write>(out: &mut W, names: &[String], r: &NisanCutReport) -> CliResult<()> {
    let order: Vec<&str> = r.order.iter().map(|&i| names[i].as_str()).collect();
    writeln!(out, "order: {}", order.join(","))?;
    writeln!(out, "cut ranks: {}", r.cut_ranks.iter().join(" "))?;
    writeln!(out, "width: {}", r.width)?;
    writeln!(out, "size: {}", r.size)?;
    Ok(())
}

fn execute<W: Write>(cli: Cli, out: &mut W) -> CliResult<()> {
    let limits = Limits {
        max_matrix_entries: cli.max_entries,
        max_expand_terms: cli.max_terms,
    };
    match cli.command {
        Command::Dpd { poly, basis } => {
            let file = read_poly(&poly)?;
            let b = derivative_basis(&file.poly)?;
            writeln!(out, "{}", b.dim())?;
            if basis {
                for g in b.basis() {
                    writeln!(out, "{}", g.display(&file.vars))?;
                }
            }
        }
        Command::NormalSet { poly } => {
            let file = read_poly(&poly)?;
            let q = quotient_structure(&file.poly)?;
            for m in q.normal_set() {
                writeln!(out, "{}", m.display(&file.vars))?;
            }
        }
        Command::Tables { poly } => {
            let file = read_poly(&poly)?;
            let q = quotient_structure(&file.poly)?;
            for (name, table) in file.vars.iter().zip(q.tables()) {
                writeln!(out, "table {name}")?;
                write!(out, "{table}")?;
            }
        }
        Command::Build {
            kind,
            input,
            output,
            partition,
        } => {
            let text = read(&input)?;
            let abp = match kind {
                BuildKind::Commro => {
                    let file = PolyFile::parse(&text)?;
                    build_commro_general(&file.poly, &file.vars, &limits)?
                }
                BuildKind::Smabp => {
                    let file = PolyFile::parse(&text)?;
                    let spec = partition
                        .ok_or_else(|| CliError::Usage("`build smabp` needs --partition".into()))?;
                    let parts = parse_partition(&spec, &file.vars)?;
                    build_smabp(&file.poly, &file.vars, &parts, &limits)?
                }
                BuildKind::Diagro => {
                    let w = WaringDecomposition::parse(&text)?;
                    let n = w.arity().unwrap_or(0);
                    build_diagro_from_waring(&w, &default_var_names(n), &limits)?
                }
            };
            write_file(&output, &abp.to_string())?;
            writeln!(out, "{} width {}", abp.kind(), abp.width())?;
        }
        Command::Nisan {
            poly,
            order,
            all_orders,
        } => {
            let file = read_poly(&poly)?;
            let n = file.vars.len();
            if let Some(order) = order {
                let sigma = order
                    .split(',')
                    .map(|name| index_of(&file.vars, name.trim()))
                    .collect::<CliResult<Vec<_>>>()?;
                print_report(out, &file.vars, &nisan_width(&file.poly, &sigma, &limits)?)?;
            } else if all_orders {
                let count = (1..=n)
                    .try_fold(1usize, |acc, k| acc.checked_mul(k))
                    .unwrap_or(usize::MAX);
                limits.check_terms("order enumeration", count)?;
                let mut best = usize::MAX;
                for sigma in (0..n).permutations(n) {
                    let r = nisan_width(&file.poly, &sigma, &limits)?;
                    let names: Vec<&str> = sigma.iter().map(|&i| file.vars[i].as_str()).collect();
                    writeln!(out, "{} width {} size {}", names.join(","), r.width, r.size)?;
                    best = best.min(r.width);
                }
                writeln!(out, "min width: {best}")?;
            }
        }
        Command::Verify {
            abp,
            against,
            expand,
            random_eval,
            seed,
            any_order,
        } => {
            let abp = Abp::parse(&read(&abp)?)?;
            let f = align(&read_poly(&against)?, abp.var_names())?;
            verify(out, &abp, &f, expand, random_eval, seed, any_order, &limits)?;
        }
        Command::Gen { what, n, output } => {
            if n == 0 {
                return Err(CliError::Usage("n must be at least 1".into()));
            }
            let text = match what {
                GenKind::Det => PolyFile::new(det_var_names(n), det_polynomial(n)).to_string(),
                GenKind::Perm => PolyFile::new(det_var_names(n), perm_polynomial(n)).to_string(),
                GenKind::Palindrome => {
                    PolyFile::new(palindrome_var_names(n), palindrome(n)).to_string()
                }
                GenKind::MonomialWaring => waring_of_monomial(n)?.to_string(),
                GenKind::DetTables => {
                    let w = (1..=n).fold(1usize, |acc, i| acc * (n + i) / i);
                    limits.check_entries("closed-form determinant tables", n * n * w, w)?;
                    let names = det_var_names(n);
                    let mut s = String::from("normal set:");
                    for m in det_normal_set(n) {
                        s.push(' ');
                        s.push_str(&m.display(&names).to_string());
                    }
                    s.push('\n');
                    for (name, table) in names.iter().zip(det_mult_tables(n)) {
                        s.push_str(&format!("table {name}\n{table}"));
                    }
                    s
                }
            };
            match output {
                Some(path) => write_file(&path, &text)?,
                None => write!(out, "{text}")?,
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify<W: Write>(
    out: &mut W,
    abp: &Abp,
    f: &Poly,
    expand: bool,
    random_eval: Option<usize>,
    seed: u64,
    any_order: Option<usize>,
    limits: &Limits,
) -> CliResult<()> {
    if !abp.check_kind() {
        return Err(CliError::Verification(format!(
            "coefficient matrices violate the `{}` structure",
            abp.kind()
        )));
    }
    let mut rng = seeded(seed);
    let mut orders = vec![abp.order().to_vec()];
    for _ in 0..any_order.unwrap_or(0) {
        orders.push(random_permutation(&mut rng, abp.layers().len()));
    }
    let points: Vec<_> = (0..random_eval.unwrap_or(0))
        .map(|_| random_point(&mut rng, abp.arity()))
        .collect();
    let expected: Vec<_> = points.iter().map(|p| f.eval(p)).collect::<Result<_, _>>()?;
    for order in &orders {
        let candidate = abp.clone().with_order(order.clone())?;
        if expand {
            let got = candidate.expand(limits)?;
            if &got != f {
                return Err(CliError::Verification(format!(
                    "layer order {order:?} expands to {}",
                    got.display(abp.var_names())
                )));
            }
        }
        for (p, want) in points.iter().zip(&expected) {
            let got = candidate.eval(p)?;
            if &got != want {
                return Err(CliError::Verification(format!(
                    "layer order {order:?}: ABP gives {got}, polynomial gives {want} at a random point"
                )));
            }
        }
    }
    writeln!(
        out,
        "ok: {} ABP of width {} verified in {} layer order(s)",
        abp.kind(),
        abp.width(),
        orders.len()
    )?;
    Ok(())
}
