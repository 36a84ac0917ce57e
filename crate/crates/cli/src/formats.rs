//! Line-oriented input files. Blank lines and `#` comments are ignored
//! everywhere.
//!
//! Chart:
//! ```text
//! 3 1          # N n: N+1 components in t1..tn
//! 1
//! t1
//! 3*t1^2
//! -t1^3
//! [0]          # base point
//! ```
//!
//! Hypersurface (`vars` defaults to `x0..xN`, `p0`/`H0` to the standard
//! position `e_N`, `x0 = 0`; `node` may repeat):
//! ```text
//! F = x3*x0^2 - x1^3
//! p0 = [0, 0, 0, 1]
//! H0 = [1, 0, 0, 0]
//! ```
//!
//! Algebra: symbol lines `name degree`, `top d`, table lines
//! `monomial = integer`. A variety adds `dim n` (implying `top 2n`),
//! `class c1 = ...` / `class ch2 = ...` lines and `h = ...`.

use std::collections::BTreeMap;
use std::sync::Arc;

use legvar_core::bryant::HypersurfaceData;
use legvar_core::chern::VarietyChernData;
use legvar_core::chowring::{GradedAlgebraSpec, GradedElem};
use legvar_core::contact::ChartMap;
use legvar_core::exactalg::{parse_poly, parse_rational, var_names, Rational};
use num_bigint::BigInt;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Missing(String),
    #[error(transparent)]
    Core(#[from] legvar_core::Error),
}

fn at(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Line { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// `[a, b/c, ...]`; brackets are optional, separators are commas or spaces.
pub fn parse_vector(text: &str) -> Result<Vec<Rational>, legvar_core::Error> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(parse_rational).collect()
}

pub fn parse_chart(text: &str) -> Result<ChartMap, FormatError> {
    let mut it = lines(text);
    let (l0, head) = it.next().ok_or_else(|| FormatError::Missing("empty chart file".into()))?;
    let dims: Vec<usize> = head
        .split_whitespace()
        .map(|s| s.parse().map_err(|_| at(l0, format!("expected `N n`, got `{head}`"))))
        .collect::<Result<_, _>>()?;
    let [big_n, n] = dims[..] else {
        return Err(at(l0, format!("expected `N n`, got `{head}`")));
    };
    let params = var_names("t", 1, n);
    let mut comps = Vec::with_capacity(big_n + 1);
    for _ in 0..=big_n {
        let (l, s) = it.next().ok_or_else(|| FormatError::Missing(format!("chart needs {} components", big_n + 1)))?;
        comps.push(parse_poly(s, &params).map_err(|e| at(l, e.to_string()))?);
    }
    let base = match it.next() {
        Some((l, s)) => parse_vector(s).map_err(|e| at(l, e.to_string()))?,
        None => return Err(FormatError::Missing("chart needs a base point".into())),
    };
    if let Some((l, _)) = it.next() {
        return Err(at(l, "trailing input after the base point"));
    }
    Ok(ChartMap::new(&params, comps, base)?)
}

fn split_assignment(s: &str) -> Option<(&str, &str)> {
    let (k, v) = s.split_once('=')?;
    Some((k.trim(), v.trim()))
}

/// Variables `x<k>` used in `text`, as `x0..x{max}`.
fn infer_vars(text: &str) -> Vec<String> {
    let mut max = 0;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let starts = bytes[i] == b'x' && (i == 0 || !bytes[i - 1].is_ascii_alphanumeric());
        if starts {
            let digits: String = text[i + 1..].chars().take_while(char::is_ascii_digit).collect();
            if let Ok(k) = digits.parse::<usize>() {
                max = max.max(k);
            }
            i += 1 + digits.len();
        } else {
            i += 1;
        }
    }
    var_names("x", 0, max + 1)
}

pub fn parse_hypersurface(text: &str) -> Result<HypersurfaceData, FormatError> {
    let mut f_text = None;
    let mut vars = None;
    let (mut p0, mut h0, mut nodes) = (None, None, Vec::new());
    for (l, s) in lines(text) {
        let (k, v) = split_assignment(s).ok_or_else(|| at(l, format!("expected `key = value`, got `{s}`")))?;
        let vector = || parse_vector(v).map_err(|e| at(l, e.to_string()));
        match k {
            "F" => f_text = Some((l, v.to_string())),
            "vars" => {
                vars = Some(
                    v.split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|s| !s.is_empty())
                        .map(String::from)
                        .collect::<Vec<_>>(),
                )
            }
            "p0" => p0 = Some(vector()?),
            "H0" => h0 = Some(vector()?),
            "node" => nodes.push(vector()?),
            _ => return Err(at(l, format!("unknown key `{k}`"))),
        }
    }
    let (fl, f_text) = f_text.ok_or_else(|| FormatError::Missing("hypersurface file needs `F = ...`".into()))?;
    let vars = match vars {
        Some(v) => v,
        None => match p0.as_ref().or(h0.as_ref()) {
            Some(p) => var_names("x", 0, p.len()),
            None => infer_vars(&f_text),
        },
    };
    let f = parse_poly(&f_text, &vars).map_err(|e| at(fl, e.to_string()))?;
    let z = match (p0, h0) {
        (None, None) => HypersurfaceData::standard(f)?,
        (p0, h0) => {
            let std = HypersurfaceData::standard(f.clone())?;
            HypersurfaceData::new(f, p0.unwrap_or_else(|| std.p0().to_vec()), h0.unwrap_or_else(|| std.h0().to_vec()))?
        }
    };
    Ok(z.with_nodes(nodes)?)
}

/// Parsed but not yet built algebra lines, shared by both file kinds.
#[derive(Default)]
struct AlgebraLines {
    symbols: Vec<(String, u32)>,
    top: Option<u32>,
    table: Vec<(usize, String, BigInt)>,
}

impl AlgebraLines {
    /// Consumes the line if it is an algebra line.
    fn take(&mut self, l: usize, s: &str) -> Result<bool, FormatError> {
        if let Some((k, v)) = split_assignment(s) {
            let value: BigInt = v.parse().map_err(|_| at(l, format!("table value `{v}` is not an integer")))?;
            self.table.push((l, k.to_string(), value));
            return Ok(true);
        }
        let parts: Vec<&str> = s.split_whitespace().collect();
        match parts[..] {
            ["top", d] => {
                self.top = Some(d.parse().map_err(|_| at(l, format!("bad top degree `{d}`")))?);
                Ok(true)
            }
            [name, d] if name.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) => match d.parse() {
                Ok(d) => {
                    self.symbols.push((name.to_string(), d));
                    Ok(true)
                }
                Err(_) => Ok(false),
            },
            _ => Ok(false),
        }
    }

    fn build(self) -> Result<Arc<GradedAlgebraSpec>, FormatError> {
        let top = self.top.ok_or_else(|| FormatError::Missing("algebra needs `top d` (or `dim n`)".into()))?;
        let names: Vec<String> = self.symbols.iter().map(|(n, _)| n.clone()).collect();
        let table = if self.table.is_empty() {
            None
        } else {
            let mut t = Vec::new();
            for (l, m, v) in self.table {
                t.push((GradedAlgebraSpec::parse_monomial(&names, &m).map_err(|e| at(l, e.to_string()))?, v));
            }
            Some(t)
        };
        Ok(GradedAlgebraSpec::build(self.symbols, top, table)?)
    }
}

pub fn parse_algebra(text: &str) -> Result<Arc<GradedAlgebraSpec>, FormatError> {
    let mut a = AlgebraLines::default();
    for (l, s) in lines(text) {
        if !a.take(l, s)? {
            return Err(at(l, format!("not an algebra line: `{s}`")));
        }
    }
    a.build()
}

pub fn parse_variety(text: &str) -> Result<VarietyChernData, FormatError> {
    let mut a = AlgebraLines::default();
    let mut dim = None;
    let mut name = String::from("variety");
    let mut classes = Vec::new();
    let mut h = None;
    for (l, s) in lines(text) {
        if let Some(rest) = s.strip_prefix("class ") {
            let (k, v) = split_assignment(rest).ok_or_else(|| at(l, "expected `class <name> = <expr>`"))?;
            classes.push((l, k.to_string(), v.to_string()));
        } else if let Some(rest) = s.strip_prefix("h =").or_else(|| s.strip_prefix("h=")) {
            h = Some((l, rest.trim().to_string()));
        } else if let Some(d) = s.strip_prefix("dim ") {
            let n: usize = d.trim().parse().map_err(|_| at(l, format!("bad dimension `{d}`")))?;
            dim = Some(n);
        } else if let Some(n) = s.strip_prefix("name ") {
            name = n.trim().to_string();
        } else if !a.take(l, s)? {
            return Err(at(l, format!("not a variety line: `{s}`")));
        }
    }
    let n = dim.ok_or_else(|| FormatError::Missing("variety needs `dim n`".into()))?;
    match a.top {
        Some(t) if t != 2 * n as u32 => return Err(FormatError::Missing(format!("top {t} contradicts dim {n}"))),
        _ => a.top = Some(2 * n as u32),
    }
    let alg = a.build()?;
    let elem = |l: usize, s: &str| GradedElem::parse(&alg, s).map_err(|e| at(l, e.to_string()));
    let mut map = BTreeMap::new();
    for (l, k, v) in classes {
        map.insert(k, elem(l, &v)?);
    }
    let (hl, hs) = h.ok_or_else(|| FormatError::Missing("variety needs `h = ...`".into()))?;
    let h = elem(hl, &hs)?;
    Ok(VarietyChernData::new(&name, n, &alg, map, h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use legvar_core::exactalg::int;

    #[test]
    fn chart_round_trip() {
        let c = parse_chart("# twisted cubic\n3 1\n1\nt1\n3*t1^2\nt1^3\n[2]\n").unwrap();
        assert_eq!(c.components().len(), 4);
        assert_eq!(c.base_point(), &[int(2)]);
        assert!(parse_chart("3 1\n1\nt1\n").is_err());
        assert!(matches!(parse_chart("3 1\n1\nt1\nu\nt1\n[0]"), Err(FormatError::Line { line: 4, .. })));
    }

    #[test]
    fn hypersurface_defaults() {
        let z = parse_hypersurface("F = x2*x0^2 - x1^3").unwrap();
        assert_eq!(z.ambient(), 2);
        assert_eq!(z.p0(), &[int(0), int(0), int(1)]);
        let z = parse_hypersurface(
            "vars = x y z w\nF = x^4 + y^4 + z^4 + w^4\np0 = [0, 1, -1, 2]\nH0 = [1 0 0 0]\nnode = [1,1,1,1]",
        )
        .unwrap();
        assert_eq!(z.nodes().len(), 1);
        assert!(parse_hypersurface("p0 = [1, 0]").is_err());
        assert!(parse_hypersurface("F = x0 +").is_err());
    }

    #[test]
    fn variety_file() {
        let text = "name P1xP1\ndim 2\nH 2\nHp 2\nH*Hp = 1\nclass c1 = 2*H + 2*Hp\nclass c2 = 4*H*Hp\nh = H + 2*Hp\n";
        let v = parse_variety(text).unwrap();
        assert_eq!(v.name, "P1xP1");
        assert_eq!(v.integrate(&v.h().mul(v.h()).unwrap()).unwrap(), int(4));
        assert!(parse_variety("dim 2\nH 2\nh = H\ntop 6\n").is_err());
    }

    #[test]
    fn algebra_file() {
        let a = parse_algebra("a 2\nb 2\ntop 4\na^2 = 1\na*b = 3\n").unwrap();
        assert!(a.has_table());
        assert!(parse_algebra("a 2\ntop 4\na = 1\n").is_err());
    }
}
