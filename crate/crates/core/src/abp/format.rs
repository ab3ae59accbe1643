//! Line-oriented `abp v1` text format.
//!
//! ```text
//! abp v1
//! kind: commutative
//! width: 2
//! vars: x y
//! order: x y
//! u: 1 0
//! v: 0 1
//! layer x power 0
//! 1 0
//! 0 1
//! ...
//! ```
//!
//! Set-multilinear files also carry `parts: a,b c,d` (one comma-joined group
//! per part) and their `order:` lists 0-based part indices.

use std::fmt;

use super::{Abp, AbpKind, Layer, LayerTerm};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::poly::Rational;

fn join(values: &[Rational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Abp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "abp v1")?;
        writeln!(f, "kind: {}", self.kind)?;
        writeln!(f, "width: {}", self.width())?;
        writeln!(f, "vars: {}", self.var_names.join(" "))?;
        if self.kind.is_read_once() {
            let names: Vec<&str> = self
                .order
                .iter()
                .map(|&i| self.var_names[i].as_str())
                .collect();
            writeln!(f, "order: {}", names.join(" "))?;
        } else {
            let parts: Vec<String> = self
                .layers
                .iter()
                .map(|l| {
                    l.vars
                        .iter()
                        .map(|&v| self.var_names[v].as_str())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            writeln!(f, "parts: {}", parts.join(" "))?;
            let order: Vec<String> = self.order.iter().map(ToString::to_string).collect();
            writeln!(f, "order: {}", order.join(" "))?;
        }
        writeln!(f, "u: {}", join(&self.u))?;
        writeln!(f, "v: {}", join(&self.v))?;
        for layer in &self.layers {
            for t in &layer.terms {
                writeln!(f, "layer {} power {}", self.var_names[t.var], t.power)?;
                for row in t.matrix.row_vecs() {
                    writeln!(f, "{}", join(row))?;
                }
            }
        }
        Ok(())
    }
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate().peekable(),
            last: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Format {
            line: self.last,
            msg: msg.into(),
        })
    }

    fn skip_blank(&mut self) {
        while let Some((_, l)) = self.inner.peek() {
            let t = l.trim();
            if t.is_empty() || t.starts_with('#') {
                self.inner.next();
            } else {
                break;
            }
        }
    }

    fn next_line(&mut self) -> Option<&'a str> {
        self.skip_blank();
        let (i, l) = self.inner.next()?;
        self.last = i + 1;
        Some(l.trim())
    }

    fn field(&mut self, key: &str) -> Result<&'a str> {
        let Some(line) = self.next_line() else {
            return self.err(format!("missing `{key}:` line"));
        };
        match line.strip_prefix(key).and_then(|r| r.strip_prefix(':')) {
            Some(rest) => Ok(rest.trim()),
            None => self.err(format!("expected `{key}:`, found `{line}`")),
        }
    }

    fn rationals(&self, text: &str) -> Result<Vec<Rational>> {
        text.split_whitespace()
            .map(|t| {
                t.parse::<Rational>().map_err(|_| Error::Format {
                    line: self.last,
                    msg: format!("bad rational `{t}`"),
                })
            })
            .collect()
    }
}

impl Abp {
    pub fn parse(text: &str) -> Result<Abp> {
        let mut lines = Lines::new(text);
        match lines.next_line() {
            Some("abp v1") => {}
            Some(other) => return lines.err(format!("expected `abp v1` header, found `{other}`")),
            None => return lines.err("empty ABP file"),
        }
        let kind: AbpKind = lines.field("kind")?.parse().map_err(|e| match e {
            Error::Format { msg, .. } => Error::Format {
                line: lines.last,
                msg,
            },
            other => other,
        })?;
        let width: usize = match lines.field("width")?.parse() {
            Ok(w) => w,
            Err(_) => return lines.err("width is not a natural number"),
        };
        let var_names: Vec<String> = lines
            .field("vars")?
            .split_whitespace()
            .map(str::to_string)
            .collect();
        let index_of = |name: &str, lines: &Lines| -> Result<usize> {
            var_names
                .iter()
                .position(|v| v == name)
                .map_or_else(|| lines.err(format!("unknown variable `{name}`")), Ok)
        };

        let mut layers: Vec<Layer>;
        let order: Vec<usize>;
        if kind.is_read_once() {
            layers = (0..var_names.len())
                .map(|i| Layer {
                    vars: vec![i],
                    terms: Vec::new(),
                })
                .collect();
            order = lines
                .field("order")?
                .split_whitespace()
                .map(|name| index_of(name, &lines))
                .collect::<Result<_>>()?;
        } else {
            let parts = lines.field("parts")?;
            layers = Vec::new();
            for group in parts.split_whitespace() {
                let vars = group
                    .split(',')
                    .map(|name| index_of(name, &lines))
                    .collect::<Result<Vec<_>>>()?;
                layers.push(Layer {
                    vars,
                    terms: Vec::new(),
                });
            }
            order = lines
                .field("order")?
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_or_else(|_| lines.err(format!("bad part index `{t}`")), Ok)
                })
                .collect::<Result<_>>()?;
        }
        let u_text = lines.field("u")?;
        let u = lines.rationals(u_text)?;
        let v_text = lines.field("v")?;
        let v = lines.rationals(v_text)?;
        if u.len() != width || v.len() != width {
            return lines.err(format!("u and v must have {width} entries"));
        }

        while let Some(header) = lines.next_line() {
            let words: Vec<&str> = header.split_whitespace().collect();
            let (name, power) = match words.as_slice() {
                ["layer", name, "power", p] => match p.parse::<u32>() {
                    Ok(p) => (*name, p),
                    Err(_) => return lines.err(format!("bad power `{p}`")),
                },
                _ => {
                    return lines.err(format!(
                        "expected `layer <var> power <k>`, found `{header}`"
                    ))
                }
            };
            let var = index_of(name, &lines)?;
            let mut rows = Vec::with_capacity(width);
            for _ in 0..width {
                let Some(row) = lines.next_line() else {
                    return lines.err("truncated matrix block");
                };
                let row = lines.rationals(row)?;
                if row.len() != width {
                    return lines.err(format!(
                        "matrix row has {} entries, expected {width}",
                        row.len()
                    ));
                }
                rows.push(row);
            }
            let matrix = if width == 0 {
                QMatrix::zeros(0, 0)
            } else {
                QMatrix::from_rows(rows)
            };
            let Some(layer) = layers.iter_mut().find(|l| l.vars.contains(&var)) else {
                return lines.err(format!("variable `{name}` belongs to no part"));
            };
            if layer.terms.iter().any(|t| t.var == var && t.power == power) {
                return lines.err(format!("duplicate block for `{name}` power {power}"));
            }
            layer.terms.push(LayerTerm { var, power, matrix });
        }
        for layer in &mut layers {
            layer.terms.sort_by_key(|t| (t.var, t.power));
        }
        Abp::new(kind, var_names, layers, u, v)?.with_order(order)
    }
}
