use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Poly, Rational};
use crate::error::{Error, Result};

/// Parses `poly := term (('+'|'-') term)*` over the given variable order.
///
/// A leading sign is accepted. Coefficients are `int ('/' posint)?`,
/// factors are `var ('^' nat)?`.
pub fn parse_poly<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Poly> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    }
    .poly()
}

pub fn print_poly(poly: &Poly, vars: &[String]) -> String {
    poly.display(vars).to_string()
}

struct Parser<'a, S> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [S],
}

impl<S: AsRef<str>> Parser<'_, S> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<Poly> {
        let arity = self.vars.len();
        let mut out = Poly::zero(arity);
        let mut sign = Rational::one();
        match self.peek() {
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            None => return self.err("empty polynomial"),
            _ => {}
        }
        loop {
            let (mono, c) = self.term()?;
            out.add_term(mono, c * &sign);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = Rational::one(),
                Some(b'-') => sign = -Rational::one(),
                Some(ch) => return self.err(format!("unexpected `{}`", ch as char)),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let arity = self.vars.len();
        let mut exps = vec![0u32; arity];
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.coefficient()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.factor(&mut exps)?;
                }
                c
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.factor(&mut exps)?;
                Rational::one()
            }
            Some(c) => return self.err(format!("expected a term, found `{}`", c as char)),
            None => return self.err("expected a term, found end of input"),
        };
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let num = self.natural()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let den = self.natural()?;
            if den.is_zero() {
                return self.err("zero denominator");
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn natural(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            _ => return self.err("expected a variable"),
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        let index = self
            .vars
            .iter()
            .position(|v| v.as_ref() == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut power = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let p = self.natural()?;
            power = u32::try_from(p).or_else(|_| self.err("exponent too large"))?;
        }
        exps[index] += power;
        Ok(())
    }
}

/// A polynomial file: a `vars: v1 v2 ...` header fixing the variable order,
/// followed by the polynomial text (possibly over several lines). Blank lines
/// and lines starting with `#` are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFile {
    pub vars: Vec<String>,
    pub poly: Poly,
}

impl PolyFile {
    pub fn new(vars: Vec<String>, poly: Poly) -> Self {
        assert_eq!(vars.len(), poly.arity());
        PolyFile { vars, poly }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (line_no, header) = lines.next().ok_or(Error::Format {
            line: 1,
            msg: "missing `vars:` header".into(),
        })?;
        let rest = header.trim().strip_prefix("vars:").ok_or(Error::Format {
            line: line_no + 1,
            msg: "expected `vars: <v1> <v2> ...`".into(),
        })?;
        let vars: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Format {
                    line: line_no + 1,
                    msg: format!("`{v}` is not a valid variable name"),
                });
            }
            if vars[..i].contains(v) {
                return Err(Error::Format {
                    line: line_no + 1,
                    msg: format!("variable `{v}` declared twice"),
                });
            }
        }
        let body: Vec<&str> = lines.map(|(_, l)| l).collect();
        let poly = parse_poly(&body.join(" "), &vars)?;
        Ok(PolyFile { vars, poly })
    }
}

impl fmt::Display for PolyFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.vars.join(" "))?;
        writeln!(f, "{}", self.poly.display(&self.vars))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
