//! ROABP constructions: commutative ROABPs from the apolar quotient, their
//! direct sum over homogeneous components, commutative set-multilinear ABPs,
//! and diagonal ROABPs from Waring decompositions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::abp::{Abp, AbpKind, Layer};
use crate::apolar::{multiplication_tables, normal_set, QuotientStructure};
use crate::error::{Error, Result};
use crate::linalg::{Limits, PolyMatrix, QMatrix};
use crate::partials::derivative_basis;
use crate::poly::{factorial, rat, Monomial, Poly, Rational};

/// Widths up to this size get their closed-form `v` cross-checked by a linear solve.
const SOLVE_CHECK_MAX_WIDTH: usize = 24;

/// `x1, …, xn`.
pub fn default_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn check_names(f: &Poly, names: &[String]) -> Result<()> {
    if names.len() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: names.len(),
        });
    }
    Ok(())
}

fn fact(k: u32) -> Rational {
    Rational::from_integer(factorial(k))
}

fn unit(w: usize, i: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); w];
    e[i] = Rational::one();
    e
}

fn quotient_with_limits(f: &Poly, limits: &Limits) -> Result<QuotientStructure> {
    if let Some((low, high)) = f.homogeneity_witness() {
        return Err(Error::NotHomogeneous { low, high });
    }
    let basis = derivative_basis(f)?;
    limits.check_entries(
        "multiplication tables",
        basis.dim() * f.arity().max(1),
        basis.dim(),
    )?;
    multiplication_tables(normal_set(basis)?)
}

/// `v_j = e_j! · coeff_f(m_j)` for the normal set `m_j = t^{e_j}`.
fn closed_form_v(f: &Poly, q: &QuotientStructure) -> Vec<Rational> {
    q.normal_set()
        .iter()
        .map(|m| Rational::from_integer(m.factorial()) * f.coeff(m))
        .collect()
}

/// Commutative ROABP of width `dpd(f)` for a nonzero homogeneous `f`.
///
/// Layer `ℓ` is `Σ_{k ≤ d_ℓ} A_ℓ^k/k! · x_ℓ^k` where `A_ℓ` is the multiplication
/// table of `t_ℓ` and `d_ℓ` the individual degree of `x_ℓ`; `u = e₁` picks the
/// normal-set monomial `1`.
pub fn build_commro(f: &Poly, names: &[String], limits: &Limits) -> Result<Abp> {
    check_names(f, names)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = quotient_with_limits(f, limits)?;
    let w = q.dim();
    if !q.normal_set()[0].is_one() {
        return Err(Error::Invariant("normal set does not start at 1".into()));
    }
    let mut layers = Vec::with_capacity(f.arity());
    for (var, a) in q.tables().iter().enumerate() {
        let d = f.individual_degree(var);
        let mut power = QMatrix::identity(w);
        let mut coeffs = Vec::with_capacity(d as usize + 1);
        for k in 0..=d {
            coeffs.push((k, power.scale(&(Rational::one() / fact(k)))));
            power = power.checked_mul(a)?;
        }
        if !power.is_zero() {
            return Err(Error::Invariant(format!(
                "table of `{}` is not nilpotent of order {}",
                names[var],
                d + 1
            )));
        }
        layers.push(Layer::univariate(var, coeffs));
    }
    let v = closed_form_v(f, &q);
    let abp = Abp::new(AbpKind::Commutative, names.to_vec(), layers, unit(w, 0), v)?;
    if w <= SOLVE_CHECK_MAX_WIDTH {
        let solved = solve_boundary_v(&abp, f, limits)?;
        if solved.as_deref() != Some(abp.v()) {
            return Err(Error::Invariant(
                "closed-form v disagrees with the linear solve".into(),
            ));
        }
    }
    Ok(abp)
}

/// Solves `Σ_j R_j(x) · v_j = f` for `v`, where `R` is the first row of the
/// layer product `uᵀ · Π M_ℓ(x)`, by matching coefficients. Returns `None` if
/// the system is inconsistent. The `v` stored in `abp` is ignored.
pub fn solve_boundary_v(abp: &Abp, f: &Poly, limits: &Limits) -> Result<Option<Vec<Rational>>> {
    let n = abp.arity();
    if f.arity() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: f.arity(),
        });
    }
    let w = abp.width();
    let mut row = PolyMatrix::from_rows(
        n,
        vec![abp
            .u()
            .iter()
            .map(|c| Poly::constant(n, c.clone()))
            .collect()],
    )?;
    for &li in abp.order() {
        row = row.checked_mul(&abp.layers()[li].as_poly_matrix(w, n))?;
        limits.check_terms("symbolic expansion", row.total_terms())?;
    }
    let monos: BTreeSet<&Monomial> = (0..w)
        .flat_map(|j| row.get(0, j).monomials())
        .chain(f.monomials())
        .collect();
    limits.check_entries("boundary solve", monos.len(), w)?;
    let system = QMatrix::from_rows(
        monos
            .iter()
            .map(|m| (0..w).map(|j| row.get(0, j).coeff(m)).collect())
            .collect(),
    );
    let rhs: Vec<Rational> = monos.iter().map(|m| f.coeff(m)).collect();
    Ok(system.solve(&rhs))
}

fn block_diagonal(blocks: &[&QMatrix], widths: &[usize]) -> QMatrix {
    let w: usize = widths.iter().sum();
    let mut out = QMatrix::zeros(w, w);
    let mut offset = 0;
    for (b, &bw) in blocks.iter().zip(widths) {
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                out[(offset + r, offset + c)] = b[(r, c)].clone();
            }
        }
        offset += bw;
    }
    out
}

/// Direct sum of [`build_commro`] over the nonzero homogeneous components of
/// `f`, in ascending degree. A constant component is a `1 × 1` block with
/// identity layers and `v = (c)`.
pub fn build_commro_general(f: &Poly, names: &[String], limits: &Limits) -> Result<Abp> {
    check_names(f, names)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.arity();
    let mut blocks = Vec::new();
    for comp in f.homogeneous_components() {
        if comp.is_zero() {
            continue;
        }
        if comp.degree() == Some(0) {
            let c = comp.coeff(&Monomial::one(n));
            let layers = (0..n)
                .map(|var| Layer::univariate(var, [(0, QMatrix::identity(1))]))
                .collect();
            blocks.push(Abp::new(
                AbpKind::Commutative,
                names.to_vec(),
                layers,
                vec![rat(1)],
                vec![c],
            )?);
        } else {
            blocks.push(build_commro(&comp, names, limits)?);
        }
    }
    if blocks.len() == 1 {
        return Ok(blocks.pop().expect("one block"));
    }
    let widths: Vec<usize> = blocks.iter().map(Abp::width).collect();
    let total: usize = widths.iter().sum();
    limits.check_entries("direct sum layers", total * n.max(1), total)?;
    let mut layers = Vec::with_capacity(n);
    for var in 0..n {
        let top = blocks
            .iter()
            .flat_map(|b| b.layers()[var].terms.iter().map(|t| t.power))
            .max()
            .unwrap_or(0);
        let mut coeffs = Vec::new();
        for k in 0..=top {
            let zeros: Vec<QMatrix> = widths.iter().map(|&bw| QMatrix::zeros(bw, bw)).collect();
            let parts: Vec<&QMatrix> = blocks
                .iter()
                .zip(&zeros)
                .map(|(b, z)| {
                    b.layers()[var]
                        .terms
                        .iter()
                        .find(|t| t.power == k)
                        .map_or(z, |t| &t.matrix)
                })
                .collect();
            coeffs.push((k, block_diagonal(&parts, &widths)));
        }
        layers.push(Layer::univariate(var, coeffs));
    }
    let u = blocks.iter().flat_map(|b| b.u().iter().cloned()).collect();
    let v = blocks.iter().flat_map(|b| b.v().iter().cloned()).collect();
    Abp::new(AbpKind::Commutative, names.to_vec(), layers, u, v)
}

/// Checks that `partition` splits `0..n` and that every monomial of `f` takes
/// exactly one variable, with exponent 1, from each part.
pub fn check_set_multilinear(f: &Poly, names: &[String], partition: &[Vec<usize>]) -> Result<()> {
    let n = f.arity();
    let mut owner = vec![None; n];
    for (p, part) in partition.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::InvalidPartition(format!("part {p} is empty")));
        }
        for &var in part {
            if var >= n {
                return Err(Error::InvalidPartition(format!(
                    "variable index {var} out of range"
                )));
            }
            if owner[var].replace(p).is_some() {
                return Err(Error::InvalidPartition(format!(
                    "`{}` appears in two parts",
                    names[var]
                )));
            }
        }
    }
    if let Some(var) = owner.iter().position(Option::is_none) {
        return Err(Error::InvalidPartition(format!(
            "`{}` is in no part",
            names[var]
        )));
    }
    for m in f.monomials() {
        let mut hits = vec![0u32; partition.len()];
        for (var, &e) in m.exponents().iter().enumerate() {
            if let Some(p) = owner[var] {
                hits[p] += e;
            }
        }
        if hits.iter().any(|&h| h != 1) {
            return Err(Error::NotSetMultilinear(format!(
                "monomial `{}` does not take exactly one variable from each part",
                m.display(names)
            )));
        }
    }
    Ok(())
}

/// Commutative set-multilinear ABP of width `dpd(f)`: one linear layer
/// `Σ_{k ∈ part} A_k · x_k` per part, with the same boundary vectors as
/// [`build_commro`].
pub fn build_smabp(
    f: &Poly,
    names: &[String],
    partition: &[Vec<usize>],
    limits: &Limits,
) -> Result<Abp> {
    check_names(f, names)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_set_multilinear(f, names, partition)?;
    let q = quotient_with_limits(f, limits)?;
    let w = q.dim();
    let layers = partition
        .iter()
        .map(|part| {
            Layer::linear(
                part.clone(),
                part.iter().map(|&k| (k, q.tables()[k].clone())),
            )
        })
        .collect();
    let v = closed_form_v(f, &q);
    Abp::new(
        AbpKind::SetMultilinear,
        names.to_vec(),
        layers,
        unit(w, 0),
        v,
    )
}

/// `Σ_i c_i · ℓ_i(x)^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaringDecomposition {
    pub degree: u32,
    pub terms: Vec<(Rational, Vec<Rational>)>,
}

impl WaringDecomposition {
    /// Checks the decomposition is nonempty, of positive degree, and that every
    /// form is nonzero with `n` coordinates.
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::InvalidWaring("empty decomposition".into()));
        }
        if self.degree == 0 {
            return Err(Error::InvalidWaring(
                "degree 0 terms are constants; use a constant block".into(),
            ));
        }
        for (i, (_, form)) in self.terms.iter().enumerate() {
            if form.len() != n {
                return Err(Error::InvalidWaring(format!(
                    "term {} has {} coordinates, expected {n}",
                    i + 1,
                    form.len()
                )));
            }
            if form.iter().all(Zero::is_zero) {
                return Err(Error::InvalidWaring(format!(
                    "term {} has a zero linear form",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    pub fn arity(&self) -> Option<usize> {
        self.terms.first().map(|(_, form)| form.len())
    }

    /// Brute-force expansion `Σ c_i ℓ_i^d`.
    pub fn expand(&self, limits: &Limits) -> Result<Poly> {
        let n = self
            .arity()
            .ok_or_else(|| Error::InvalidWaring("empty decomposition".into()))?;
        self.validate(n)?;
        let mut out = Poly::zero(n);
        for (c, form) in &self.terms {
            let ell = Poly::from_terms(
                n,
                form.iter()
                    .enumerate()
                    .map(|(j, a)| (Monomial::var(n, j), a.clone())),
            );
            out = out.checked_add(&ell.pow(self.degree).scale(c))?;
            limits.check_terms("Waring expansion", out.len())?;
        }
        Ok(out)
    }

    /// Parses `waring d=<d> n=<n>` followed by one `c: a1 … an` line per term.
    pub fn parse(text: &str) -> Result<WaringDecomposition> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let err = |line: usize, msg: String| Error::Format { line, msg };
        let (hline, header) = lines
            .next()
            .ok_or_else(|| err(1, "missing `waring` header".into()))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let (d, n) = match words.as_slice() {
            ["waring", d, n] => {
                let d = d.strip_prefix("d=").and_then(|x| x.parse::<u32>().ok());
                let n = n.strip_prefix("n=").and_then(|x| x.parse::<usize>().ok());
                match (d, n) {
                    (Some(d), Some(n)) => (d, n),
                    _ => return Err(err(hline, format!("bad header `{header}`"))),
                }
            }
            _ => return Err(err(hline, "expected `waring d=<d> n=<n>`".into())),
        };
        let parse_rat = |line: usize, s: &str| {
            s.parse::<Rational>()
                .map_err(|_| err(line, format!("bad rational `{s}`")))
        };
        let mut terms = Vec::new();
        for (line, body) in lines {
            let (c, form) = body
                .split_once(':')
                .ok_or_else(|| err(line, "expected `c: a1 ... an`".into()))?;
            let c = parse_rat(line, c.trim())?;
            let form = form
                .split_whitespace()
                .map(|s| parse_rat(line, s))
                .collect::<Result<Vec<_>>>()?;
            if form.len() != n {
                return Err(err(
                    line,
                    format!("expected {n} coordinates, found {}", form.len()),
                ));
            }
            terms.push((c, form));
        }
        let w = WaringDecomposition { degree: d, terms };
        w.validate(n)?;
        Ok(w)
    }
}

impl fmt::Display for WaringDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "waring d={} n={}",
            self.degree,
            self.arity().unwrap_or(0)
        )?;
        for (c, form) in &self.terms {
            let coords: Vec<String> = form.iter().map(ToString::to_string).collect();
            writeln!(f, "{c}: {}", coords.join(" "))?;
        }
        Ok(())
    }
}

/// The sign decomposition
/// `x1⋯xn = 1/(2^{n-1} n!) · Σ_ε (Π ε) (x1 + ε2 x2 + … + εn xn)^n`
/// over `ε ∈ {±1}^{n-1}`, checked by expansion before being returned.
pub fn waring_of_monomial(n: usize) -> Result<WaringDecomposition> {
    if n == 0 {
        return Err(Error::InvalidWaring(
            "the empty monomial has no Waring decomposition".into(),
        ));
    }
    let scale = Rational::one()
        / (Rational::from_integer(num_bigint::BigInt::from(2u32).pow(n as u32 - 1))
            * fact(n as u32));
    let terms = (0..1usize << (n - 1))
        .map(|bits| {
            let mut form = vec![rat(1)];
            let mut sign = rat(1);
            for k in 0..n - 1 {
                let e = if bits >> k & 1 == 1 { rat(-1) } else { rat(1) };
                sign *= &e;
                form.push(e);
            }
            (&scale * sign, form)
        })
        .collect();
    let w = WaringDecomposition {
        degree: n as u32,
        terms,
    };
    let target = Monomial::from_exponents(vec![1; n]).into_poly();
    if w.expand(&Limits::default())? != target {
        return Err(Error::Invariant(
            "sign decomposition does not expand to the monomial".into(),
        ));
    }
    Ok(w)
}

/// `λ_k`: the `z^d` coefficient of the Lagrange basis polynomial of node `k`.
fn lagrange_top_weights(nodes: &[Rational], d: usize) -> Vec<Rational> {
    nodes
        .iter()
        .enumerate()
        .map(|(k, zk)| {
            // coefficients of Π_{m ≠ k} (z - z_m), lowest degree first
            let mut poly = vec![Rational::one()];
            let mut denom = Rational::one();
            for (m, zm) in nodes.iter().enumerate() {
                if m == k {
                    continue;
                }
                let mut next = vec![Rational::zero(); poly.len() + 1];
                for (i, c) in poly.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * zm;
                }
                poly = next;
                denom *= zk - zm;
            }
            poly.get(d).cloned().unwrap_or_else(Rational::zero) / denom
        })
        .collect()
}

/// Diagonal ROABP from a Waring decomposition, by the duality trick.
///
/// `ℓ^d/d!` is the `z^d` coefficient of `Π_j exp_d(a_j x_j z)`, a polynomial of
/// degree `≤ nd` in `z`, so it equals `Σ_k λ_k Π_j exp_d(a_j z_k x_j)` over the
/// nodes `z_k = 1, …, nd+1`. Each (term, node) pair is one diagonal slot.
pub fn build_diagro_from_waring(
    w: &WaringDecomposition,
    names: &[String],
    limits: &Limits,
) -> Result<Abp> {
    let n = names.len();
    w.validate(n)?;
    let d = w.degree;
    let nodes: Vec<Rational> = (1..=n * d as usize + 1).map(|z| rat(z as i64)).collect();
    let weights = lagrange_top_weights(&nodes, d as usize);
    let width = w.terms.len() * nodes.len();
    limits.check_entries("diagonal layers", width, n.max(1))?;

    let mut u = Vec::with_capacity(width);
    // diag[var][power] = diagonal entries over all slots
    let mut diag: Vec<Vec<Vec<Rational>>> =
        vec![vec![Vec::with_capacity(width); d as usize + 1]; n];
    for (c, form) in &w.terms {
        for (zk, lk) in nodes.iter().zip(&weights) {
            u.push(c * fact(d) * lk);
            for (j, a) in form.iter().enumerate() {
                let base = a * zk;
                let mut pw = Rational::one();
                for p in 0..=d {
                    diag[j][p as usize].push(&pw / fact(p));
                    pw *= &base;
                }
            }
        }
    }
    let layers = diag
        .into_iter()
        .enumerate()
        .map(|(var, powers)| {
            let coeffs: BTreeMap<u32, QMatrix> = powers
                .into_iter()
                .enumerate()
                .map(|(p, entries)| (p as u32, QMatrix::diagonal(entries)))
                .filter(|(_, m)| !m.is_zero())
                .collect();
            Layer::univariate(var, coeffs)
        })
        .collect();
    Abp::new(
        AbpKind::Diagonal,
        names.to_vec(),
        layers,
        u,
        vec![Rational::one(); width],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::det::{det_polynomial, det_var_names, palindrome, palindrome_var_names};
    use crate::linalg::commute;
    use crate::partials::dpd;
    use crate::poly::{frac, parse_poly};
    use crate::sampling::{random_homogeneous, random_non_homogeneous, random_point, seeded};
    use itertools::Itertools;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    fn all_commute(abp: &Abp) -> bool {
        let mats: Vec<&QMatrix> = abp.coefficient_matrices().collect();
        mats.iter()
            .tuple_combinations()
            .all(|(a, b)| commute(a, b).unwrap())
    }

    #[test]
    fn commro_of_x1x2() {
        let v = names(&["x1", "x2"]);
        let f = parse_poly("x1*x2", &v).unwrap();
        let abp = build_commro(&f, &v, &lim()).unwrap();
        assert_eq!(abp.width(), 4);
        assert_eq!(abp.u(), &[rat(1), rat(0), rat(0), rat(0)]);
        assert_eq!(abp.v(), &[rat(0), rat(0), rat(0), rat(1)]);
        assert_eq!(abp.expand(&lim()).unwrap(), f);
        assert!(abp.check_kind());
        for layer in abp.layers() {
            assert_eq!(layer.terms.len(), 2);
            assert!(layer.terms[0].matrix.is_identity());
        }
    }

    #[test]
    fn commro_of_univariate_power() {
        let v = names(&["x"]);
        for d in 1..=5u32 {
            let f = Poly::var(1, 0).pow(d).scale(&frac(3, 2));
            let abp = build_commro(&f, &v, &lim()).unwrap();
            assert_eq!(abp.width(), d as usize + 1);
            let mut expected_v = vec![rat(0); d as usize + 1];
            expected_v[d as usize] = fact(d) * frac(3, 2);
            assert_eq!(abp.v(), expected_v.as_slice());
            assert_eq!(abp.expand(&lim()).unwrap(), f);
        }
    }

    #[test]
    fn commro_of_det2_matches_golden_layers() {
        let v = det_var_names(2);
        let f = det_polynomial(2);
        let abp = build_commro(&f, &v, &lim()).unwrap();
        assert_eq!(abp.width(), 6);
        assert_eq!(abp.v(), &[rat(0), rat(0), rat(0), rat(0), rat(0), rat(-1)]);
        let golden = crate::det::det2_golden_abp();
        assert_eq!(abp.layers(), golden.layers());
        assert_eq!(abp.expand(&lim()).unwrap(), f);
    }

    #[test]
    fn commro_rejects_bad_input() {
        let v = names(&["x1", "x2"]);
        let f = parse_poly("x1*x2 + x1", &v).unwrap();
        assert!(matches!(
            build_commro(&f, &v, &lim()),
            Err(Error::NotHomogeneous { .. })
        ));
        assert!(matches!(
            build_commro(&Poly::zero(2), &v, &lim()),
            Err(Error::ZeroPolynomial)
        ));
        assert!(build_commro(&Poly::var(3, 0), &v, &lim()).is_err());
        assert!(matches!(
            build_commro_general(&Poly::zero(2), &v, &lim()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn commro_corpus_properties() {
        let mut rng = seeded(77);
        for i in 0..25 {
            let n = 1 + i % 4;
            let d = 1 + (i as u32 % 3);
            let f = random_homogeneous(&mut rng, n, d, 6);
            let v = default_var_names(n);
            let abp = build_commro(&f, &v, &lim()).unwrap();
            assert_eq!(abp.width(), dpd(&f));
            assert_eq!(abp.expand(&lim()).unwrap(), f);
            assert!(all_commute(&abp));
            assert_eq!(
                solve_boundary_v(&abp, &f, &lim()).unwrap().as_deref(),
                Some(abp.v())
            );
            let p = random_point(&mut rng, n);
            let rev: Vec<usize> = (0..n).rev().collect();
            assert_eq!(
                abp.permute_order(&rev).unwrap().eval(&p).unwrap(),
                f.eval(&p).unwrap()
            );
        }
    }

    #[test]
    fn general_degree_examples() {
        let v = names(&["x1", "x2"]);
        let f = parse_poly("x1*x2 + 1", &v).unwrap();
        let abp = build_commro_general(&f, &v, &lim()).unwrap();
        assert_eq!(abp.width(), 5);
        assert_eq!(abp.expand(&lim()).unwrap(), f);
        assert!(abp.check_kind());

        let x = names(&["x"]);
        let f = parse_poly("x^2 + x", &x).unwrap();
        assert_eq!(dpd(&f), 3);
        let abp = build_commro_general(&f, &x, &lim()).unwrap();
        assert_eq!(abp.width(), 5);
        assert!(abp.width() <= 9 * dpd(&f));
        assert_eq!(abp.expand(&lim()).unwrap(), f);

        let h = det_polynomial(2);
        assert_eq!(
            build_commro_general(&h, &det_var_names(2), &lim()).unwrap(),
            build_commro(&h, &det_var_names(2), &lim()).unwrap()
        );

        let c = Poly::constant(2, frac(-7, 3));
        let abp = build_commro_general(&c, &v, &lim()).unwrap();
        assert_eq!(abp.width(), 1);
        assert_eq!(abp.expand(&lim()).unwrap(), c);
    }

    #[test]
    fn general_degree_corpus() {
        let mut rng = seeded(3);
        for i in 0..15 {
            let n = 1 + i % 3;
            let f = random_non_homogeneous(&mut rng, n, 3, 6);
            let abp = build_commro_general(&f, &default_var_names(n), &lim()).unwrap();
            let d = f.degree().unwrap() as usize;
            assert!(abp.width() <= (d + 1) * (d + 1) * dpd(&f));
            assert_eq!(abp.expand(&lim()).unwrap(), f);
            assert!(abp.check_kind());
        }
    }

    #[test]
    fn smabp_examples() {
        let v = names(&["x1", "y1"]);
        let f = parse_poly("x1*y1", &v).unwrap();
        let abp = build_smabp(&f, &v, &[vec![0], vec![1]], &lim()).unwrap();
        assert_eq!(abp.width(), 4);
        assert_eq!(abp.expand(&lim()).unwrap(), f);
        assert!(abp.check_kind());

        let v3 = names(&["x1", "y1", "z1"]);
        let f = parse_poly("x1*y1*z1", &v3).unwrap();
        let abp = build_smabp(&f, &v3, &[vec![0], vec![1], vec![2]], &lim()).unwrap();
        assert_eq!(abp.width(), 8);
        assert_eq!(abp.width(), dpd(&f));

        let dv = det_var_names(2);
        let det2 = det_polynomial(2);
        let abp = build_smabp(&det2, &dv, &[vec![0, 1], vec![2, 3]], &lim()).unwrap();
        assert_eq!(abp.width(), 6);
        assert_eq!(abp.expand(&lim()).unwrap(), det2);
        assert_eq!(
            abp.permute_order(&[1, 0]).unwrap().expand(&lim()).unwrap(),
            det2
        );
        // column partition works too
        let cols = build_smabp(&det2, &dv, &[vec![0, 2], vec![1, 3]], &lim()).unwrap();
        assert_eq!(cols.expand(&lim()).unwrap(), det2);
    }

    #[test]
    fn smabp_rejects_bad_partitions() {
        let v = names(&["x1", "x2", "y1"]);
        let f = parse_poly("x1*y1 + x1*x2", &v).unwrap();
        let err = build_smabp(&f, &v, &[vec![0, 1], vec![2]], &lim()).unwrap_err();
        assert!(err.to_string().contains("x1*x2"), "{err}");
        assert!(matches!(
            build_smabp(&f, &v, &[vec![0, 1]], &lim()),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            build_smabp(&f, &v, &[vec![0, 1], vec![1, 2]], &lim()),
            Err(Error::InvalidPartition(_))
        ));
        let sq = parse_poly("x1^2", &names(&["x1"])).unwrap();
        assert!(build_smabp(&sq, &names(&["x1"]), &[vec![0]], &lim()).is_err());
    }

    #[test]
    fn waring_of_monomials() {
        let w1 = waring_of_monomial(1).unwrap();
        assert_eq!(w1.terms, vec![(rat(1), vec![rat(1)])]);
        let w2 = waring_of_monomial(2).unwrap();
        assert_eq!(
            w2.terms,
            vec![
                (frac(1, 4), vec![rat(1), rat(1)]),
                (frac(-1, 4), vec![rat(1), rat(-1)])
            ]
        );
        for n in 1..=5 {
            let w = waring_of_monomial(n).unwrap();
            assert_eq!(w.terms.len(), 1 << (n - 1));
            assert_eq!(
                w.expand(&lim()).unwrap(),
                Monomial::from_exponents(vec![1; n]).into_poly()
            );
        }
        assert!(waring_of_monomial(0).is_err());
    }

    #[test]
    fn lagrange_weights_recover_coefficients() {
        let nodes: Vec<Rational> = (1..=5).map(rat).collect();
        // p(z) = 2 - z + 3z^2 + z^4
        let p = |z: &Rational| rat(2) - z + rat(3) * z * z + z * z * z * z;
        let coeffs = [rat(2), rat(-1), rat(3), rat(0), rat(1)];
        for (d, want) in coeffs.iter().enumerate() {
            let lam = lagrange_top_weights(&nodes, d);
            let got: Rational = nodes.iter().zip(&lam).map(|(z, l)| p(z) * l).sum();
            assert_eq!(&got, want);
        }
    }

    #[test]
    fn diagro_examples() {
        let x = names(&["x1"]);
        for d in 1..=4 {
            let w = WaringDecomposition {
                degree: d,
                terms: vec![(rat(1), vec![rat(1)])],
            };
            let abp = build_diagro_from_waring(&w, &x, &lim()).unwrap();
            assert_eq!(abp.expand(&lim()).unwrap(), Poly::var(1, 0).pow(d));
        }

        let v2 = names(&["x1", "x2"]);
        let abp = build_diagro_from_waring(&waring_of_monomial(2).unwrap(), &v2, &lim()).unwrap();
        assert_eq!(
            abp.expand(&lim()).unwrap(),
            parse_poly("x1*x2", &v2).unwrap()
        );

        let v3 = names(&["x1", "x2", "x3"]);
        let abp = build_diagro_from_waring(&waring_of_monomial(3).unwrap(), &v3, &lim()).unwrap();
        assert!(abp.width() <= 40);
        assert!(abp.check_kind());
        assert!(abp.coefficient_matrices().all(QMatrix::is_diagonal));
        assert_eq!(
            abp.expand(&lim()).unwrap(),
            parse_poly("x1*x2*x3", &v3).unwrap()
        );
    }

    #[test]
    fn diagro_of_random_decompositions() {
        use rand::Rng;
        let mut rng = seeded(8);
        for _ in 0..10 {
            let n = rng.gen_range(1..=3);
            let d = rng.gen_range(1..=3);
            let s = rng.gen_range(1..=3);
            let terms = (0..s)
                .map(|_| {
                    let mut form: Vec<Rational> =
                        (0..n).map(|_| rat(rng.gen_range(-3..=3))).collect();
                    form[0] = rat(rng.gen_range(1..=3));
                    (frac(rng.gen_range(-5..=5), rng.gen_range(1..=4)), form)
                })
                .collect();
            let w = WaringDecomposition { degree: d, terms };
            let abp = build_diagro_from_waring(&w, &default_var_names(n), &lim()).unwrap();
            assert!(abp.width() <= s * (n * d as usize + 1));
            assert!(abp.check_kind());
            assert_eq!(abp.expand(&lim()).unwrap(), w.expand(&lim()).unwrap());
        }
    }

    #[test]
    fn waring_validation_and_format() {
        let x = names(&["x1", "x2"]);
        let empty = WaringDecomposition {
            degree: 2,
            terms: vec![],
        };
        assert!(build_diagro_from_waring(&empty, &x, &lim()).is_err());
        let zero_form = WaringDecomposition {
            degree: 2,
            terms: vec![(rat(1), vec![rat(0), rat(0)])],
        };
        assert!(matches!(
            build_diagro_from_waring(&zero_form, &x, &lim()),
            Err(Error::InvalidWaring(_))
        ));
        let deg0 = WaringDecomposition {
            degree: 0,
            terms: vec![(rat(1), vec![rat(1), rat(0)])],
        };
        assert!(build_diagro_from_waring(&deg0, &x, &lim()).is_err());

        let w = waring_of_monomial(3).unwrap();
        let text = w.to_string();
        assert!(text.starts_with("waring d=3 n=3\n1/24: 1 1 1\n"), "{text}");
        assert_eq!(WaringDecomposition::parse(&text).unwrap(), w);
        let parsed =
            WaringDecomposition::parse("# comment\nwaring d=2 n=2\n\n1/4: 1 1\n-1/4: 1 -1\n")
                .unwrap();
        assert_eq!(parsed, waring_of_monomial(2).unwrap());
        assert!(WaringDecomposition::parse("waring d=2 n=2\n1: 1\n").is_err());
        assert!(WaringDecomposition::parse("waring d=2\n").is_err());
        assert!(WaringDecomposition::parse("1: 1 1\n").is_err());
        assert!(WaringDecomposition::parse("waring d=2 n=1\nx: 1\n").is_err());
    }

    #[test]
    fn palindrome_commro_width() {
        let p = palindrome(3);
        let abp = build_commro(&p, &palindrome_var_names(3), &lim()).unwrap();
        assert_eq!(abp.width(), dpd(&p));
        assert_eq!(abp.expand(&lim()).unwrap(), p);
    }
}
